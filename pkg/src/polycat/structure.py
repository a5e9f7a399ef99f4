"""The structure file format: parse, resolve, validate and print.

A file is a sequence of entities, one base first::

    base cost
    poly p = Σ{x: Π{idx: 0, f: 3}, y: Π{idy: 0}}
    enriched A = { objects: [x, y], morphisms: {x: {f: (y, 3), idx: (x, 0)}, y: {idy: (y, 0)}},
                   identities: {x: idx, y: idy} }
    dds walk : A = { assignment: {x: f, y: idy}, bound: 3 }

Values are atoms (bare words or JSON strings), tuples ``(a,b)``, lists
``[a, b]`` and maps ``{k: v}`` optionally tagged ``Σ``/``Π``.  ``#`` starts a
comment.  docs/format.md has the full grammar.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .base import BUILTIN_BASES, INF, BaseMorphism, FinitePresentedBase, format_cost, validate_base
from .errors import PolycatError, Violation
from .labels import format_label, label_key

KINDS = ("poly", "morphism", "enriched", "cofunctor", "comonoid", "comorphism", "dds", "trace", "cofree")


class ParseError(PolycatError):
    def __init__(self, msg, line, col):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line, self.col = line, col


class UnresolvedReference(PolycatError):
    pass


class ValidationFailure(PolycatError):
    def __init__(self, entity, report):
        self.entity = entity
        self.report = list(report)
        super().__init__(f"{entity}: " + "; ".join(str(v) for v in self.report))


# -- values ------------------------------------------------------------------

@dataclass(frozen=True)
class List:
    items: tuple


@dataclass(frozen=True)
class Map:
    entries: tuple  # ((key, value), ...)
    tag: str | None = None

    def get(self, key, default=None):
        for k, v in self.entries:
            if k == key:
                return v
        return default

    def keys(self):
        return [k for k, _ in self.entries]

    def as_dict(self):
        return dict(self.entries)


def mapping(d, tag=None, sort=True) -> Map:
    items = list(d.items())
    if sort:
        items.sort(key=lambda kv: label_key(kv[0]) if _is_lab(kv[0]) else (2, repr(kv[0])))
    return Map(tuple(items), tag)


def _is_lab(x):
    return isinstance(x, str) or (isinstance(x, tuple) and all(_is_lab(y) for y in x))


# -- tokenizer ------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<arrow>->)
  | (?P<punct>[()\[\]{},:=ΣΠ])
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<bare>(?:(?!->)[A-Za-z0-9_.'+\-/*∞⊤⊥])+)
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str):
    pos, line, col = 0, 1, 1
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind != "ws":
            if kind == "string":
                try:
                    value = json.loads(s)
                except json.JSONDecodeError as exc:
                    raise ParseError(f"bad string: {exc}", line, col) from None
                out.append(Token("atom", value, line, col))
            elif kind == "bare":
                out.append(Token("atom", s, line, col))
            else:
                out.append(Token(s, s, line, col))
        nl = s.count("\n")
        if nl:
            line += nl
            col = len(s) - s.rfind("\n")
        else:
            col += len(s)
        pos = m.end()
    out.append(Token("eof", "", line, col))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t.kind != kind:
            raise ParseError(f"expected {kind!r}, found {t.text or t.kind!r}", t.line, t.col)
        return t

    def atom(self):
        t = self.next()
        if t.kind != "atom":
            raise ParseError(f"expected a name, found {t.text or t.kind!r}", t.line, t.col)
        return t.text

    def value(self):
        t = self.peek()
        if t.kind == "atom":
            self.next()
            return t.text
        if t.kind == "(":
            self.next()
            items = self._seq(")")
            return tuple(items)
        if t.kind == "[":
            self.next()
            return List(tuple(self._seq("]")))
        if t.kind in ("Σ", "Π"):
            self.next()
            if self.peek().kind != "{":
                u = self.peek()
                raise ParseError("a tag must be followed by a map", u.line, u.col)
            return self._map(t.kind)
        if t.kind == "{":
            return self._map(None)
        raise ParseError(f"expected a value, found {t.text or t.kind!r}", t.line, t.col)

    def _seq(self, close):
        items = []
        if self.peek().kind == close:
            self.next()
            return items
        while True:
            items.append(self.value())
            t = self.next()
            if t.kind == close:
                return items
            if t.kind != ",":
                raise ParseError(f"expected ',' or {close!r}", t.line, t.col)
            if self.peek().kind == close:
                self.next()
                return items

    def _map(self, tag):
        self.expect("{")
        entries = []
        seen = set()
        if self.peek().kind == "}":
            self.next()
            return Map((), tag)
        while True:
            kt = self.peek()
            k = self.value()
            if k in seen:
                raise ParseError(f"duplicate key {format_value(k)}", kt.line, kt.col)
            seen.add(k)
            self.expect(":")
            entries.append((k, self.value()))
            t = self.next()
            if t.kind == "}":
                return Map(tuple(entries), tag)
            if t.kind != ",":
                raise ParseError("expected ',' or '}'", t.line, t.col)
            if self.peek().kind == "}":
                self.next()
                return Map(tuple(entries), tag)


# -- entities -----------------------------------------------------------------

@dataclass
class Entity:
    kind: str
    name: str
    refs: tuple = ()
    value: object = None
    line: int = 0


@dataclass
class StructureFile:
    base_spec: object  # builtin name, or (name, Map) for a finite presentation
    entities: list = field(default_factory=list)

    def names(self):
        return [e.name for e in self.entities]

    def get(self, name) -> Entity:
        for e in self.entities:
            if e.name == name:
                return e
        raise UnresolvedReference(f"no entity named {name!r}")


def parse(text: str) -> StructureFile:
    """Parse a structure file (syntax only; see :func:`load` for meaning)."""
    P = _Parser(text)
    t = P.peek()
    if t.kind != "atom" or t.text != "base":
        raise ParseError("a file must start with a base declaration", t.line, t.col)
    P.next()
    name = P.atom()
    if name == "finite":
        fname = P.atom()
        P.expect("=")
        v = P.value()
        if not isinstance(v, Map):
            raise ParseError("a finite base is given by a map", t.line, t.col)
        base_spec = (fname, v)
    elif name in BUILTIN_BASES:
        base_spec = name
    else:
        raise ParseError(f"unknown base {name!r}; expected trivial, arrow, cost or finite", t.line, t.col)
    doc = StructureFile(base_spec)
    seen = set()
    while P.peek().kind != "eof":
        t = P.next()
        if t.kind != "atom" or t.text not in KINDS:
            if t.kind == "atom" and t.text == "base":
                raise ParseError("only one base per file", t.line, t.col)
            raise ParseError(f"expected an entity kind ({', '.join(KINDS)}), found {t.text!r}",
                             t.line, t.col)
        nt = P.peek()
        name = P.atom()
        if name in seen:
            raise ParseError(f"duplicate entity name {name!r}", nt.line, nt.col)
        seen.add(name)
        refs = ()
        if P.peek().kind == ":":
            P.next()
            refs = (P.atom(),)
            if P.peek().kind == "->":
                P.next()
                refs += (P.atom(),)
        P.expect("=")
        doc.entities.append(Entity(t.text, name, refs, P.value(), t.line))
    return doc


# -- printing --------------------------------------------------------------

def format_value(v) -> str:
    if isinstance(v, str):
        return format_label(v) if v else '""'
    if isinstance(v, tuple):
        return "(" + ", ".join(format_value(x) for x in v) + ")"
    if isinstance(v, List):
        return "[" + ", ".join(format_value(x) for x in v.items) + "]"
    if isinstance(v, Map):
        body = ", ".join(f"{format_value(k)}: {format_value(x)}" for k, x in v.entries)
        return (v.tag or "") + "{" + body + "}"
    raise TypeError(f"cannot print {v!r}")


def _format_top(v) -> str:
    if isinstance(v, Map) and v.tag is None and v.entries:
        lines = [f"  {format_value(k)}: {format_value(x)}" for k, x in v.entries]
        return "{\n" + ",\n".join(lines) + "\n}"
    return format_value(v)


def print_structure(doc: StructureFile) -> str:
    out = []
    if isinstance(doc.base_spec, str):
        out.append(f"base {doc.base_spec}")
    else:
        name, v = doc.base_spec
        out.append(f"base finite {format_value(name)} = {_format_top(v)}")
    for e in doc.entities:
        head = f"{e.kind} {format_value(e.name)}"
        if e.refs:
            head += " : " + " -> ".join(format_value(r) for r in e.refs)
        out.append(f"{head} = {_format_top(e.value)}")
    return "\n".join(out) + "\n"


# -- meaning ---------------------------------------------------------------

def _bool(v, where):
    if v in ("true", "false"):
        return v == "true"
    raise ValidationFailure(where, [Violation("syntax", (), f"expected true or false, got {format_value(v)}")])


def _need_map(v, where) -> Map:
    if not isinstance(v, Map):
        raise ValidationFailure(where, [Violation("syntax", (), "expected a map")])
    return v


def _need_list(v, where):
    if not isinstance(v, List):
        raise ValidationFailure(where, [Violation("syntax", (), "expected a list")])
    return list(v.items)


def _fields(v, where, allowed, required=()):
    m = _need_map(v, where)
    for k in m.keys():
        if k not in allowed:
            raise ValidationFailure(where, [Violation("syntax", (), f"unknown field {format_value(k)}")])
    for k in required:
        if m.get(k) is None:
            raise ValidationFailure(where, [Violation("syntax", (), f"missing field {k}")])
    return m


def build_base(spec):
    if isinstance(spec, str):
        return BUILTIN_BASES[spec]
    name, v = spec
    where = f"base {name}"
    m = _fields(v, where, {"objects", "morphisms", "identities", "composition", "tensor_objects",
                           "tensor_morphisms", "unit", "symmetric"},
                ("objects", "morphisms", "identities", "unit"))
    mors = {}
    for f, dc in _need_map(m.get("morphisms"), where).entries:
        if not (isinstance(dc, tuple) and len(dc) == 2):
            raise ValidationFailure(where, [Violation("syntax", (f,), "morphism needs (dom, cod)")])
        mors[f] = dc
    return FinitePresentedBase(
        _need_list(m.get("objects"), where), mors,
        _need_map(m.get("identities"), where).as_dict(),
        _need_map(m.get("composition", Map(())), where).as_dict(),
        _need_map(m.get("tensor_objects", Map(())), where).as_dict(),
        _need_map(m.get("tensor_morphisms", Map(())), where).as_dict(),
        m.get("unit"), name=name,
        symmetric=_bool(m.get("symmetric", "false"), where))


class Loaded:
    """A parsed file with every entity turned into a library object."""

    def __init__(self, doc: StructureFile, base, objects: dict):
        self.doc = doc
        self.base = base
        self.objects = objects

    def __getitem__(self, name):
        if name not in self.objects:
            raise UnresolvedReference(f"no entity named {name!r}")
        return self.objects[name]

    def kind(self, name):
        return self.doc.get(name).kind


def load(text: str, validate=True) -> Loaded:
    """Parse, resolve references and (by default) validate every entity."""
    from . import codec

    doc = parse(text)
    try:
        base = build_base(doc.base_spec)
    except PolycatError as exc:
        if isinstance(exc, ValidationFailure):
            raise
        raise ValidationFailure("base", [Violation("syntax", (), str(exc))]) from None
    if validate and isinstance(base, FinitePresentedBase):
        report = validate_base(base)
        if report:
            raise ValidationFailure(f"base {base.name}", report)
    objects = {}
    for e in doc.entities:
        for r in e.refs:
            if r not in objects:
                raise UnresolvedReference(f"{e.kind} {e.name} (line {e.line}) refers to undeclared {r!r}")
        objects[e.name] = codec.decode(e, base, objects, doc, validate)
    return Loaded(doc, base, objects)


def format_object(base, x) -> str:
    if x is INF or base.name == "cost":
        return format_cost(x)
    return base.format_object(x)


def morphism_value(base, m):
    """A base morphism as a file value: a witness label, or its domain in thin bases."""
    if isinstance(m, BaseMorphism) and m.witness is not None:
        return m.witness
    return None
