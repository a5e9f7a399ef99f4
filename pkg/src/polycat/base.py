"""Pluggable base monoidal categories.

Every construction in the package is parameterised by a strict monoidal
category ``C`` with decidable equality and finite hom-sets.  Four kinds are
built in:

* :data:`TRIVIAL` -- the terminal category (one object ``y``).
* :data:`ARROW` -- the walking arrow ``F -> T`` with meet as tensor and unit ``T``.
* :data:`COST` -- extended nonnegative rationals ordered by ``<=``, tensor ``+``,
  unit ``0``.  Infinity is the :data:`INF` token.
* :class:`FinitePresentedBase` -- any finite strict monoidal category given by
  tables.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from .errors import InvalidInput, NotComposable, ObjectNotInBase, Violation


@functools.total_ordering
class _Infinity:
    """The top element of the cost poset; absorbing under addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("polycat.INF")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def cost(x) -> Fraction | _Infinity:
    """Coerce ``x`` to a cost: a nonnegative ``Fraction`` or :data:`INF`.

    Accepts ints, Fractions, the strings ``"inf"``/``"∞"`` and rational
    literals such as ``"3/2"``.  Floats are rejected.
    """
    if x is INF:
        return INF
    if isinstance(x, bool) or isinstance(x, float):
        raise ObjectNotInBase(f"costs are exact; got {x!r}")
    if isinstance(x, str):
        s = x.strip()
        if s in ("inf", "∞", "INF"):
            return INF
        try:
            x = Fraction(s)
        except ValueError:
            raise ObjectNotInBase(f"not a cost: {x!r}") from None
    if isinstance(x, int):
        x = Fraction(x)
    if not isinstance(x, Fraction):
        raise ObjectNotInBase(f"not a cost: {x!r}")
    if x < 0:
        raise ObjectNotInBase(f"costs are nonnegative; got {x}")
    return x


def cost_add(x, y):
    if x is INF or y is INF:
        return INF
    return x + y


def cost_scale(n: int, r):
    """``n * r`` with the convention ``0 * inf = 0``."""
    if n == 0:
        return Fraction(0)
    if r is INF:
        return INF
    return n * r


def format_cost(x) -> str:
    return "inf" if x is INF else str(x)


@dataclass(frozen=True)
class BaseMorphism:
    """A morphism ``dom -> cod`` of a base; ``witness`` is None in thin bases."""

    dom: Any
    cod: Any
    witness: Any = None

    def __str__(self):
        if self.witness is None:
            return f"{_fmt(self.dom)}<={_fmt(self.cod)}"
        return f"{self.witness}:{_fmt(self.dom)}->{_fmt(self.cod)}"


def _fmt(x):
    return format_cost(x) if (x is INF or isinstance(x, Fraction)) else str(x)


class MonoidalBase:
    """Interface of a strict monoidal base category."""

    name: str = "base"
    unit: Any = None
    symmetric: bool = False
    thin: bool = False

    # -- objects ---------------------------------------------------------
    def contains(self, x) -> bool:
        raise NotImplementedError

    def coerce(self, x):
        """Normalise a payload to an object of this base or raise ObjectNotInBase."""
        if not self.contains(x):
            raise ObjectNotInBase(f"{x!r} is not an object of {self.name}")
        return x

    def format_object(self, x) -> str:
        return str(x)

    def parse_object(self, s: str):
        return self.coerce(s)

    def finite_objects(self):
        """All objects when finitely many, else None."""
        return None

    def sample_objects(self):
        return self.finite_objects()

    # -- morphisms -------------------------------------------------------
    def hom(self, x, y) -> tuple[BaseMorphism, ...]:
        raise NotImplementedError

    def identity(self, x) -> BaseMorphism:
        raise NotImplementedError

    def compose(self, f: BaseMorphism, g: BaseMorphism) -> BaseMorphism:
        """``g ∘ f`` (diagrammatic: first ``f`` then ``g``)."""
        raise NotImplementedError

    def tensor(self, x, y):
        raise NotImplementedError

    def is_morphism(self, m) -> bool:
        return isinstance(m, BaseMorphism) and self.contains(m.dom) and self.contains(m.cod) \
            and m in self.hom(m.dom, m.cod)

    def unique_morphism(self, x, y):
        """The morphism x -> y if the hom-set is a singleton, else None."""
        hs = self.hom(x, y)
        return hs[0] if len(hs) == 1 else None

    def isomorphisms(self, x, y):
        """Pairs (f, g) with f: x -> y and g its two-sided inverse."""
        out = []
        for f in self.hom(x, y):
            for g in self.hom(y, x):
                if self.compose(f, g) == self.identity(x) and self.compose(g, f) == self.identity(y):
                    out.append((f, g))
        return out

    def tensor_many(self, items):
        """Left-nested tensor of a sequence of objects (unit when empty)."""
        acc = self.unit
        for x in items:
            acc = self.tensor(acc, x)
        return acc

    def check(self, x):
        if not self.contains(x):
            raise ObjectNotInBase(f"{x!r} is not an object of {self.name}")

    def __repr__(self):
        return f"<base {self.name}>"


class PosetBase(MonoidalBase):
    """A thin base: at most one morphism between any two objects."""

    thin = True

    def le(self, x, y) -> bool:
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def hom(self, x, y):
        self.check(x)
        self.check(y)
        return (BaseMorphism(x, y),) if self.le(x, y) else ()

    def identity(self, x):
        self.check(x)
        return BaseMorphism(x, x)

    def compose(self, f, g):
        if f.cod != g.dom:
            raise NotComposable(f"cannot compose {f} then {g}")
        return BaseMorphism(f.dom, g.cod)

    def tensor(self, x, y):
        if isinstance(x, BaseMorphism) and isinstance(y, BaseMorphism):
            return BaseMorphism(self.mul(x.dom, y.dom), self.mul(x.cod, y.cod))
        if isinstance(x, BaseMorphism) or isinstance(y, BaseMorphism):
            raise InvalidInput("tensor needs two objects or two morphisms")
        self.check(x)
        self.check(y)
        return self.mul(x, y)

    def is_morphism(self, m):
        return (isinstance(m, BaseMorphism) and m.witness is None and self.contains(m.dom)
                and self.contains(m.cod) and self.le(m.dom, m.cod))


class TrivialBase(PosetBase):
    name = "trivial"
    unit = "y"
    symmetric = True

    def contains(self, x):
        return isinstance(x, str) and x == "y"

    def le(self, x, y):
        return True

    def mul(self, x, y):
        return "y"

    def finite_objects(self):
        return ("y",)


BOT = "F"
TOP = "T"


class ArrowBase(PosetBase):
    """The walking arrow ``F -> T``; monoidal under meet with unit ``T``."""

    name = "arrow"
    unit = TOP
    symmetric = True

    def contains(self, x):
        return isinstance(x, str) and x in (BOT, TOP)

    def coerce(self, x):
        if x in (True, "⊤", "top"):
            return TOP
        if x in (False, "⊥", "bot"):
            return BOT
        return super().coerce(x)

    def le(self, x, y):
        return x == y or (x == BOT and y == TOP)

    def mul(self, x, y):
        return TOP if (x == TOP and y == TOP) else BOT

    def finite_objects(self):
        return (BOT, TOP)


class CostBase(PosetBase):
    """``([0, inf], <=, +, 0)`` over exact rationals."""

    name = "cost"
    unit = Fraction(0)
    symmetric = True
    default_sample = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3), INF)

    def contains(self, x):
        if x is INF:
            return True
        if isinstance(x, bool):
            return False
        return isinstance(x, (int, Fraction)) and x >= 0

    def coerce(self, x):
        return cost(x)

    def format_object(self, x):
        return format_cost(x)

    def parse_object(self, s):
        return cost(s)

    def le(self, x, y):
        if y is INF:
            return True
        if x is INF:
            return False
        return x <= y

    def mul(self, x, y):
        return cost_add(x, y)

    def sample_objects(self):
        return self.default_sample


TRIVIAL = TrivialBase()
ARROW = ArrowBase()
COST = CostBase()

BUILTIN_BASES = {"trivial": TRIVIAL, "arrow": ARROW, "cost": COST}


class FinitePresentedBase(MonoidalBase):
    """A finite strict monoidal category presented by tables.

    ``morphisms`` maps a label to ``(dom, cod)``; ``composition`` maps
    ``(f, g)`` to the label of ``g ∘ f``; ``tensor_objects`` and
    ``tensor_morphisms`` give the monoidal product.  Table gaps are not
    rejected here; :func:`validate_base` reports them.
    """

    def __init__(self, objects, morphisms: Mapping, identities: Mapping, composition: Mapping,
                 tensor_objects: Mapping, tensor_morphisms: Mapping, unit, name="finite",
                 symmetric=False):
        self.name = name
        self.objects = tuple(objects)
        self.morphisms = {f: tuple(dc) for f, dc in morphisms.items()}
        self.identities = dict(identities)
        self.composition = {tuple(k): v for k, v in composition.items()}
        self.tensor_objects = {tuple(k): v for k, v in tensor_objects.items()}
        self.tensor_morphisms = {tuple(k): v for k, v in tensor_morphisms.items()}
        self.unit = unit
        self.symmetric = symmetric
        self._homs = {}
        for f, (d, c) in self.morphisms.items():
            self._homs.setdefault((d, c), []).append(BaseMorphism(d, c, f))
        for hs in self._homs.values():
            hs.sort(key=lambda m: str(m.witness))

    def _key(self):
        return (self.name, self.objects, tuple(sorted(self.morphisms.items())),
                tuple(sorted(self.identities.items())), tuple(sorted(self.composition.items())),
                tuple(sorted(self.tensor_objects.items())), tuple(sorted(self.tensor_morphisms.items())),
                self.unit, self.symmetric)

    def __eq__(self, other):
        return isinstance(other, FinitePresentedBase) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def contains(self, x):
        return isinstance(x, str) and x in self.objects

    def finite_objects(self):
        return self.objects

    def morphism(self, label) -> BaseMorphism:
        if label not in self.morphisms:
            raise InvalidInput(f"unknown morphism {label!r} in base {self.name}")
        d, c = self.morphisms[label]
        return BaseMorphism(d, c, label)

    def hom(self, x, y):
        self.check(x)
        self.check(y)
        return tuple(self._homs.get((x, y), ()))

    def identity(self, x):
        self.check(x)
        if x not in self.identities:
            raise InvalidInput(f"no identity for {x!r} in base {self.name}")
        return self.morphism(self.identities[x])

    def compose(self, f, g):
        if f.cod != g.dom:
            raise NotComposable(f"cannot compose {f} then {g}")
        key = (f.witness, g.witness)
        if key not in self.composition:
            raise InvalidInput(f"composition table of {self.name} has no entry for {key}")
        return self.morphism(self.composition[key])

    def tensor(self, x, y):
        if isinstance(x, BaseMorphism) and isinstance(y, BaseMorphism):
            key = (x.witness, y.witness)
            if key not in self.tensor_morphisms:
                raise InvalidInput(f"tensor table of {self.name} has no entry for {key}")
            return self.morphism(self.tensor_morphisms[key])
        if isinstance(x, BaseMorphism) or isinstance(y, BaseMorphism):
            raise InvalidInput("tensor needs two objects or two morphisms")
        self.check(x)
        self.check(y)
        if (x, y) not in self.tensor_objects:
            raise InvalidInput(f"tensor table of {self.name} has no entry for {(x, y)}")
        return self.tensor_objects[(x, y)]

    def is_morphism(self, m):
        return (isinstance(m, BaseMorphism) and m.witness in self.morphisms
                and self.morphisms[m.witness] == (m.dom, m.cod))


def _check_member(C: MonoidalBase, x):
    if isinstance(x, BaseMorphism):
        if not C.is_morphism(x):
            raise ObjectNotInBase(f"{x} is not a morphism of {C.name}")
    else:
        C.check(x)


def hom_base(C: MonoidalBase, x, y) -> tuple[BaseMorphism, ...]:
    """All morphisms ``x -> y`` of ``C``."""
    return C.hom(x, y)


def compose_base(C: MonoidalBase, f: BaseMorphism, g: BaseMorphism) -> BaseMorphism:
    """``g ∘ f``; raises NotComposable unless ``cod f == dom g``."""
    _check_member(C, f)
    _check_member(C, g)
    return C.compose(f, g)


def tensor_base(C: MonoidalBase, x, y):
    _check_member(C, x)
    _check_member(C, y)
    return C.tensor(x, y)


def validate_base(C: MonoidalBase, sample=None) -> list[Violation]:
    """Check the category and strict monoidal laws of ``C``.

    Exhaustive for finite bases; for the cost base the check runs over
    ``sample`` (default: a small grid including ``inf``).  Returns the list of
    violations, empty iff every checked law holds.
    """
    objs = tuple(sample) if sample is not None else C.sample_objects()
    if objs is None:
        raise InvalidInput(f"base {C.name} needs an explicit sample of objects")
    report: list[Violation] = []

    def name(w):
        if isinstance(w, BaseMorphism) and w.witness is not None:
            return w.witness
        return w if isinstance(w, str) else str(w)

    def attempt(law, where, thunk):
        try:
            return thunk()
        except (InvalidInput, NotComposable, ObjectNotInBase) as exc:
            report.append(Violation(law, tuple(name(w) for w in where), str(exc)))
            return None

    def bad(law, *where):
        report.append(Violation(law, tuple(name(w) for w in where)))

    if not C.contains(C.unit):
        bad("unit-object", C.unit)
        return report

    ids = {}
    for x in objs:
        i = attempt("identity-missing", (x,), lambda: C.identity(x))
        if i is None:
            continue
        if (i.dom, i.cod) != (x, x):
            bad("identity-typing", x, i)
        ids[x] = i
    if isinstance(C, FinitePresentedBase):
        for f, (d, c) in C.morphisms.items():
            if d not in C.objects or c not in C.objects:
                bad("morphism-typing", f)
    mors = [m for x in objs for y in objs for m in C.hom(x, y)]
    by_dom: dict = {}
    for m in mors:
        by_dom.setdefault(m.dom, []).append(m)

    def comp(f, g):
        return attempt("composition-missing", (f, g), lambda: C.compose(f, g))

    for f in mors:
        if f.dom in ids:
            h = comp(ids[f.dom], f)
            if h is not None and h != f:
                bad("left-identity", f)
        if f.cod in ids:
            h = comp(f, ids[f.cod])
            if h is not None and h != f:
                bad("right-identity", f)
    for f in mors:
        for g in by_dom.get(f.cod, ()):
            fg = comp(f, g)
            if fg is None:
                continue
            if (fg.dom, fg.cod) != (f.dom, g.cod):
                bad("composition-typing", f, g)
                continue
            for h in by_dom.get(g.cod, ()):
                left = comp(fg, h)
                gh = comp(g, h)
                right = comp(f, gh) if gh is not None else None
                if left is not None and right is not None and left != right:
                    bad("associativity", f, g, h)

    e = C.unit

    def ten(a, b):
        return attempt("tensor-missing", (a, b), lambda: C.tensor(a, b))

    for x in objs:
        if ten(e, x) != x or ten(x, e) != x:
            bad("tensor-unit-object", x)
        for y in objs:
            xy = ten(x, y)
            if C.symmetric and xy != ten(y, x):
                bad("tensor-symmetry-object", x, y)
            for z in objs:
                a = ten(xy, z) if xy is not None else None
                yz = ten(y, z)
                b = ten(x, yz) if yz is not None else None
                if a is not None and b is not None and a != b:
                    bad("tensor-associativity-object", x, y, z)
    if e in ids or C.thin:
        ide = C.identity(e)
        for f in mors:
            if ten(ide, f) != f or ten(f, ide) != f:
                bad("tensor-unit-morphism", f)
    for f, g in itertools.product(mors, repeat=2):
        fg = ten(f, g)
        if fg is None:
            continue
        want_dom = ten(f.dom, g.dom)
        want_cod = ten(f.cod, g.cod)
        if (fg.dom, fg.cod) != (want_dom, want_cod):
            bad("tensor-typing", f, g)
    for x, y in itertools.product(ids, repeat=2):
        xy = ten(x, y)
        if xy is not None and xy in ids and ten(ids[x], ids[y]) != ids[xy]:
            bad("tensor-identity", x, y)
    # interchange: (f·f') then (g·g') == (f then g)·(f' then g')
    pairs = [(f, g) for f in mors for g in by_dom.get(f.cod, ())]
    for (f, g), (f2, g2) in itertools.product(pairs, repeat=2):
        a, b = ten(f, f2), ten(g, g2)
        if a is None or b is None or a.cod != b.dom:
            continue
        lhs = comp(a, b)
        fg, fg2 = comp(f, g), comp(f2, g2)
        if lhs is None or fg is None or fg2 is None:
            continue
        if lhs != ten(fg, fg2):
            bad("interchange", f, g, f2, g2)
    if len(mors) <= 40:
        for f, g, h in itertools.product(mors, repeat=3):
            fg = ten(f, g)
            gh = ten(g, h)
            if fg is None or gh is None:
                continue
            if ten(fg, h) != ten(f, gh):
                bad("tensor-associativity-morphism", f, g, h)
    if C.symmetric:
        for f, g in itertools.product(mors, repeat=2):
            if ten(f, g) != ten(g, f):
                bad("tensor-symmetry-morphism", f, g)
    return report
