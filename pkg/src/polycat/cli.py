"""Command line front end: ``polycat COMMAND --input FILE [NAMES...]``.

Every command reads a structure file, runs one operation and writes a report
followed (when there is a result) by a loadable structure file.  Exit codes:
0 success, 1 law violations or a failed check, 2 parse, reference or usage
errors.
"""

from __future__ import annotations

import argparse
import sys

from . import codec
from .base import COST, FinitePresentedBase, compose_base, cost, cost_add, tensor_base, validate_base
from .cofree import cofree_approx, cofree_lift, format_tree, validate_cofree_map
from .comonoid import (
    ComonoidMorphism,
    cofunctor_to_comonoid_mor,
    comonoid_mor_to_cofunctor,
    comonoid_to_enriched,
    enriched_to_comonoid,
    nfold_comult,
    validate_comonoid,
    validate_comonoid_morphism,
)
from .dynamics import (
    DynSystem,
    check_bound,
    cofunctor_to_dds,
    dds_to_cofunctor,
    make_dds,
    run_dds,
    seq_compose_dds,
)
from .enriched import compose_cofunctors, validate_cofunctor, validate_enriched
from .errors import BoundViolated, PartialAssignment, PolycatError, Violation
from .labels import format_label
from .monoidal import (
    ISO_KINDS,
    bowtie_obj,
    canonical_iso,
    comp_mor,
    comp_obj,
    comp_obj_def_form,
    find_iso,
    parallel_mor,
    parallel_obj,
    rtimes_obj,
    verify_iso,
)
from .polynomial import (
    as_dialectica,
    compose_poly,
    coproduct,
    enumerate_hom,
    hom_count,
    identity_poly,
    is_homogeneous,
    product,
    validate_poly_morphism,
)
from .structure import (
    List,
    Map,
    ParseError,
    StructureFile,
    UnresolvedReference,
    ValidationFailure,
    format_object,
    load,
    mapping,
    print_structure,
)

# Which library operation each command exposes.  Every operation appears once.
OPERATIONS = {
    "validate": ("validate_base", "validate_poly_morphism", "validate_enriched", "validate_cofunctor",
                 "validate_comonoid", "validate_comonoid_morphism", "is_homogeneous", "as_dialectica"),
    "hom-count": ("hom_count",),
    "enumerate-hom": ("enumerate_hom",),
    "compose": ("compose_base", "identity_poly", "compose_poly", "compose_cofunctors", "seq_compose_dds"),
    "tensor": ("tensor_base", "parallel_obj", "parallel_mor", "product", "coproduct"),
    "compose-product": ("comp_obj", "comp_obj_def_form", "comp_mor"),
    "bowtie": ("bowtie_obj",),
    "rtimes": ("rtimes_obj",),
    "to-comonoid": ("enriched_to_comonoid", "cofunctor_to_comonoid_mor"),
    "to-enriched": ("comonoid_to_enriched", "comonoid_mor_to_cofunctor"),
    "to-cofunctor": ("dds_to_cofunctor",),
    "to-dds": ("cofunctor_to_dds",),
    "run": ("run_dds", "nfold_comult"),
    "bound-check": ("make_dds",),
    "cofree": ("cofree_approx", "cofree_lift"),
    "iso-check": ("canonical_iso", "find_iso"),
}

COMMANDS = tuple(OPERATIONS)

ISO_ALIASES = {"assoc-tensor": "assoc⊗", "unit-tensor": "unit⊗", "assoc-comp": "assoc◁",
               "unit-comp": "unit◁", "swap-tensor": "swap⊗", "comp-form": "compForm"}


class UsageError(PolycatError):
    pass


class Report:
    def __init__(self, loaded):
        self.loaded = loaded
        self.lines = []
        self.violations = 0
        self.failed = False
        self.emitted = []
        self._emitted_names = set()

    def info(self, text):
        self.lines.append(f"info {text}")

    def result(self, text):
        self.lines.append(f"result {text}")

    def violation(self, kind, name, v: Violation):
        self.violations += 1
        self.lines.append(f"violation {kind} {format_label(name)} {v}")

    def emit(self, entity):
        if entity.name in self._emitted_names:
            return
        self._emitted_names.add(entity.name)
        self.emitted.append(entity)

    def emit_input(self, *names):
        """Copy input entities (with what they depend on) into the output."""
        doc = self.loaded.doc
        for n in names:
            e = doc.get(n)
            for r in _dependencies(e):
                self.emit_input(r)
            self.emit(e)

    def status(self):
        if self.violations:
            return "violations"
        return "failed" if self.failed else "ok"

    def render(self, base):
        out = [f"status {self.status()}"] + self.lines
        text = "\n".join(out) + "\n"
        if self.emitted:
            text += "\n" + print_structure(StructureFile(codec.base_spec(base), list(self.emitted)))
        return text


def _dependencies(e):
    deps = list(e.refs)
    if e.kind in ("comonoid", "comorphism") and isinstance(e.value, Map):
        for k in ("from", "carrier", "counit", "comult", "map"):
            if isinstance(e.value.get(k), str):
                deps.append(e.value.get(k))
    return deps


def _need(names, n, cmd):
    if len(names) != n if isinstance(n, int) else len(names) < n[0]:
        want = n if isinstance(n, int) else f"at least {n[0]}"
        raise UsageError(f"{cmd} takes {want} name(s), got {len(names)}")


def _kind(L, name):
    return L.doc.get(name).kind


def _is_entity(L, name):
    return name in L.objects


# -- commands --------------------------------------------------------------

def cmd_validate(L, R, names, args):
    base = L.base
    if isinstance(base, FinitePresentedBase):
        rep = validate_base(base)
        for v in rep:
            R.violation("base", base.name, v)
        if not rep:
            R.lines.append(f"ok base {format_label(base.name)}")
    targets = names or L.doc.names()
    for n in targets:
        e = L.doc.get(n)
        obj = L[n]
        rep = _check_entity(e, obj)
        for v in rep:
            R.violation(e.kind, n, v)
        if not rep:
            extra = ""
            if e.kind == "poly" and is_homogeneous(obj):
                extra = " homogeneous"
                if obj.base.name == "arrow":
                    rel = sorted(as_dialectica(obj).relation, key=repr)
                    extra += " relation [" + ", ".join(format_label(k) for k in rel) + "]"
            R.lines.append(f"ok {e.kind} {format_label(n)}{extra}")


def _check_entity(e, obj):
    kind = e.kind
    if kind == "morphism":
        partial = isinstance(e.value, Map) and e.value.get("partial") == "true"
        return validate_poly_morphism(obj, allow_partial=partial)
    if kind == "enriched":
        return validate_enriched(obj)
    if kind == "cofunctor":
        return validate_cofunctor(obj)
    if kind == "comonoid":
        return validate_comonoid(obj)
    if kind == "comorphism":
        return validate_comonoid_morphism(obj)
    if kind == "dds":
        rep = validate_enriched(obj.space.category)
        if rep:
            return [Violation("space", (), str(v)) for v in rep]
        try:
            make_dds(obj.space, obj.assignment, obj.bound)
        except PartialAssignment as exc:
            return [Violation("assignment-total", (), str(exc))]
        except BoundViolated as exc:
            return [Violation("bound", (exc.point,), f"cost {format_object(COST, exc.cost)} exceeds "
                                                     f"{format_object(COST, exc.bound)}")]
    return []


def _poly_pair(L, names, cmd):
    _need(names, 2, cmd)
    for n in names:
        if _kind(L, n) != "poly":
            raise UsageError(f"{cmd} needs polynomials; {n!r} is a {_kind(L, n)}")
    return L[names[0]], L[names[1]]


def cmd_hom_count(L, R, names, args):
    p, q = _poly_pair(L, names, "hom-count")
    R.result(f"hom-count {format_label(names[0])} {format_label(names[1])} {hom_count(p, q)}")


def cmd_enumerate_hom(L, R, names, args):
    p, q = _poly_pair(L, names, "enumerate-hom")
    ms = enumerate_hom(p, q)
    R.result(f"enumerate-hom {format_label(names[0])} {format_label(names[1])} {len(ms)}")
    R.emit_input(*names)
    for k, m in enumerate(ms, 1):
        R.emit(codec.encode_morphism(f"{names[0]}_to_{names[1]}_{k}", names[0], names[1], m))


def cmd_compose(L, R, names, args):
    _need(names, (2,), "compose")
    if not all(_is_entity(L, n) for n in names):
        return _compose_base(L, R, names)
    kinds = {_kind(L, n) for n in names}
    name = "_then_".join(names)
    if kinds <= {"poly", "morphism"}:
        # a polynomial stands for its identity
        ms = [(L.doc.get(n), identity_poly(L[n]) if _kind(L, n) == "poly" else L[n]) for n in names]
        acc = ms[0][1]
        for _, m in ms[1:]:
            acc = compose_poly(acc, m)
        src = names[0] if _kind(L, names[0]) == "poly" else ms[0][0].refs[0]
        tgt = names[-1] if _kind(L, names[-1]) == "poly" else ms[-1][0].refs[1]
        R.emit_input(src, tgt)
        R.emit(codec.encode_morphism(name, src, tgt, acc))
    elif kinds == {"cofunctor"}:
        acc = L[names[0]]
        for n in names[1:]:
            acc = compose_cofunctors(acc, L[n])
        src, tgt = L.doc.get(names[0]).refs[0], L.doc.get(names[-1]).refs[1]
        R.emit_input(src, tgt)
        R.emit(codec.encode_cofunctor(name, src, tgt, acc))
    elif kinds == {"dds"}:
        acc = L[names[0]]
        for n in names[1:]:
            acc = seq_compose_dds(acc, L[n])
        space = L.doc.get(names[0]).refs[0]
        R.emit_input(space)
        R.emit(codec.encode_dds(name, space, acc))
    else:
        raise UsageError("compose needs morphisms (or polynomials), cofunctors or systems of one kind")
    R.result(f"compose {name}")


def _compose_base(L, R, names):
    C = L.base
    if not isinstance(C, FinitePresentedBase):
        raise UnresolvedReference(f"no entities named {', '.join(n for n in names if n not in L.objects)}")
    acc = C.morphism(names[0])
    for n in names[1:]:
        acc = compose_base(C, acc, C.morphism(n))
    R.result(f"compose {' '.join(map(format_label, names))} = {format_label(acc.witness)}")


def cmd_tensor(L, R, names, args):
    _need(names, 2, "tensor")
    op = args.op or "tensor"
    if not all(_is_entity(L, n) for n in names):
        C = L.base
        if op != "tensor":
            raise UsageError("--op applies to polynomials only")
        if isinstance(C, FinitePresentedBase) and all(n in C.morphisms for n in names):
            x, y = C.morphism(names[0]), C.morphism(names[1])
            R.result(f"tensor {names[0]} {names[1]} = {format_label(tensor_base(C, x, y).witness)}")
        else:
            x, y = (C.parse_object(n) for n in names)
            R.result(f"tensor {names[0]} {names[1]} = {format_object(C, tensor_base(C, x, y))}")
        return
    k1, k2 = _kind(L, names[0]), _kind(L, names[1])
    name = f"{names[0]}_{op}_{names[1]}"
    if k1 == k2 == "poly":
        p, q = L[names[0]], L[names[1]]
        s = {"tensor": lambda: parallel_obj(p, q), "product": lambda: product(p, q)[0],
             "sum": lambda: coproduct(p, q)[0]}[op]()
        R.emit(codec.encode_poly(name, s))
    elif k1 == k2 == "morphism" and op == "tensor":
        phi, psi = L[names[0]], L[names[1]]
        m = parallel_mor(phi, psi)
        e1, e2 = L.doc.get(names[0]), L.doc.get(names[1])
        src, tgt = f"{e1.refs[0]}_tensor_{e2.refs[0]}", f"{e1.refs[1]}_tensor_{e2.refs[1]}"
        R.emit(codec.encode_poly(src, m.source))
        R.emit(codec.encode_poly(tgt, m.target))
        R.emit(codec.encode_morphism(name, src, tgt, m))
    else:
        raise UsageError("tensor needs two polynomials or two morphisms (--op only for polynomials)")
    R.result(f"{op} {name}")


def cmd_compose_product(L, R, names, args):
    _need(names, 2, "compose-product")
    k1, k2 = _kind(L, names[0]), _kind(L, names[1])
    name = f"{names[0]}_comp_{names[1]}"
    if k1 == k2 == "poly":
        p, q = L[names[0]], L[names[1]]
        R.emit(codec.encode_poly(name, comp_obj(p, q)))
        if args.def_form:
            d, iso = comp_obj_def_form(p, q)
            R.emit(codec.encode_poly(f"{name}_def", d))
            R.emit(codec.encode_morphism(f"{name}_def_to_lemma", f"{name}_def", name, iso.forward))
            R.emit(codec.encode_morphism(f"{name}_lemma_to_def", name, f"{name}_def", iso.backward))
    elif k1 == k2 == "morphism":
        m = comp_mor(L[names[0]], L[names[1]])
        e1, e2 = L.doc.get(names[0]), L.doc.get(names[1])
        src, tgt = f"{e1.refs[0]}_comp_{e2.refs[0]}", f"{e1.refs[1]}_comp_{e2.refs[1]}"
        R.emit(codec.encode_poly(src, m.source))
        R.emit(codec.encode_poly(tgt, m.target))
        R.emit(codec.encode_morphism(name, src, tgt, m))
    else:
        raise UsageError("compose-product needs two polynomials or two morphisms")
    R.result(f"compose-product {name}")


def _binary_poly(fn, label):
    def cmd(L, R, names, args):
        p, q = _poly_pair(L, names, label)
        name = f"{names[0]}_{label}_{names[1]}"
        R.emit(codec.encode_poly(name, fn(p, q)))
        R.result(f"{label} {name}")
    return cmd


def _one(L, names, cmd, kinds):
    _need(names, 1, cmd)
    k = _kind(L, names[0])
    if k not in kinds:
        raise UsageError(f"{cmd} needs a {' or '.join(kinds)}; {names[0]!r} is a {k}")
    return names[0], k


def cmd_to_comonoid(L, R, names, args):
    n, k = _one(L, names, "to-comonoid", ("enriched", "cofunctor"))
    if k == "enriched":
        X = enriched_to_comonoid(L[n])
        for e in codec.encode_comonoid(f"{n}_comonoid", X):
            R.emit(e)
        R.result(f"to-comonoid {n}_comonoid")
        return
    F = L[n]
    a, b = L.doc.get(n).refs
    S, T = enriched_to_comonoid(F.source), enriched_to_comonoid(F.target)
    M = cofunctor_to_comonoid_mor(F, S, T)
    for e in codec.encode_comonoid(f"{a}_comonoid", S) + codec.encode_comonoid(f"{b}_comonoid", T):
        R.emit(e)
    m = f"{n}_map"
    R.emit(codec.encode_morphism(m, f"{a}_comonoid_carrier", f"{b}_comonoid_carrier", M.map))
    R.emit(codec.Entity("comorphism", f"{n}_comonoid", (f"{a}_comonoid", f"{b}_comonoid"),
                        Map((("map", m),))))
    R.result(f"to-comonoid {n}_comonoid")


def cmd_to_enriched(L, R, names, args):
    n, k = _one(L, names, "to-enriched", ("comonoid", "comorphism"))
    if k == "comonoid":
        R.emit(codec.encode_enriched(f"{n}_enriched", comonoid_to_enriched(L[n])))
        R.result(f"to-enriched {n}_enriched")
        return
    M: ComonoidMorphism = L[n]
    x, y = L.doc.get(n).refs
    A, B = comonoid_to_enriched(M.source), comonoid_to_enriched(M.target)
    F = comonoid_mor_to_cofunctor(M, A, B)
    R.emit(codec.encode_enriched(f"{x}_enriched", A))
    R.emit(codec.encode_enriched(f"{y}_enriched", B))
    R.emit(codec.encode_cofunctor(f"{n}_cofunctor", f"{x}_enriched", f"{y}_enriched", F))
    R.result(f"to-enriched {n}_cofunctor")


def cmd_to_cofunctor(L, R, names, args):
    n, _ = _one(L, names, "to-cofunctor", ("dds",))
    N = 5 if args.depth is None else args.depth
    F = dds_to_cofunctor(L[n], N)
    space = L.doc.get(n).refs[0]
    R.emit_input(space)
    R.emit(codec.encode_enriched(f"{n}_window", F.target))
    R.emit(codec.encode_cofunctor(f"{n}_cofunctor", space, f"{n}_window", F))
    R.result(f"to-cofunctor {n}_cofunctor window {N}")


def cmd_to_dds(L, R, names, args):
    n, _ = _one(L, names, "to-dds", ("cofunctor",))
    phi = cofunctor_to_dds(L[n])
    space = L.doc.get(n).refs[0]
    R.emit_input(space)
    R.emit(codec.encode_dds(f"{n}_dds", space, phi))
    R.result(f"to-dds {n}_dds")


def cmd_run(L, R, names, args):
    n, k = _one(L, names, "run", ("dds", "comonoid"))
    steps = 1 if args.steps is None else args.steps
    if steps < 1 and k == "dds":
        raise UsageError("--steps must be at least 1")
    if k == "comonoid":
        d = nfold_comult(L[n], steps)
        src = L.doc.get(n).value.get("carrier")
        if src is None:
            src = f"{n}_carrier"
            R.emit(codec.encode_poly(src, d.source))
        else:
            R.emit_input(src)
        tgt = f"{n}_power{steps + 1}"
        R.emit(codec.encode_poly(tgt, d.target))
        R.emit(codec.encode_morphism(f"{n}_comult{steps}", src, tgt, d))
        R.result(f"run {n}_comult{steps}")
        return
    phi: DynSystem = L[n]
    run, traces = run_dds(phi, steps)
    rows = []
    for x in phi.space.points:
        t = traces[x]
        for s, (f, c, _) in enumerate(t.steps, 1):
            rows.append((x, str(s), f, format_object(COST, c), format_object(COST, _cum(t, s))))
    for r in rows:
        R.lines.append("trace " + ", ".join(format_label(v) for v in r))
    for x in phi.space.points:
        t = traces[x]
        R.lines.append(f"composite {format_label(x)}, {format_label(t.composite)}, "
                       f"{format_object(COST, t.composite_cost)}, {format_object(COST, t.cumulative)}")
        if run.assignment[x] != t.composite:
            R.violation("dds", n, Violation("run-agreement", (x,), "categorical and step-by-step runs differ"))
    space = L.doc.get(n).refs[0]
    R.emit_input(n)
    R.emit(codec.encode_dds(f"{n}_run{steps}", space, run))
    R.emit(codec.Entity("trace", f"{n}_trace{steps}", (n,),
                        Map((("steps", str(steps)), ("rows", List(tuple(rows)))))))
    R.result(f"run {n}_run{steps}")


def _cum(t, s):
    acc = cost(0)
    for _, c, _ in t.steps[:s]:
        acc = cost_add(acc, c)
    return acc


def cmd_bound_check(L, R, names, args):
    n, _ = _one(L, names, "bound-check", ("dds",))
    phi: DynSystem = L[n]
    bound = phi.bound_value if args.bound is None else cost(args.bound)
    bad = check_bound(phi, bound)
    for x in bad:
        c = phi.space.cost(x, phi.assignment[x])
        R.violation("dds", n, Violation("bound", (x,), f"cost {format_object(COST, c)} exceeds "
                                                       f"{format_object(COST, bound)}"))
    if not bad:
        make_dds(phi.space, phi.assignment, bound)
        R.result(f"bound-check {n} {format_object(COST, bound)}")


def cmd_cofree(L, R, names, args):
    if not names:
        raise UsageError("cofree takes a polynomial, or a comonoid and a morphism")
    depth = 2 if args.depth is None else args.depth
    if len(names) == 2 and _kind(L, names[0]) == "comonoid":
        X, psi = L[names[0]], L[names[1]]
        if _kind(L, names[1]) != "morphism":
            raise UsageError("cofree X PSI needs a morphism out of the carrier of X")
        M = cofree_lift(X, psi, depth)
        for v in validate_cofree_map(X, M, psi.target):
            R.violation("cofree", names[1], v)
        value = Map((("depth", str(depth)),
                     ("trees", mapping({x: format_tree(t) for x, t in M.trees})),
                     ("lifts", mapping(dict(M.lifts)))))
        R.emit_input(names[1])
        R.emit(codec.Entity("cofree", f"{names[1]}_cofree{depth}", (names[1],), value))
        R.result(f"cofree {names[1]}_cofree{depth}")
        return
    n, _ = _one(L, names, "cofree", ("poly",))
    A = cofree_approx(L[n], depth)
    trees = A.trees()
    R.result(f"cofree {n} depth {depth} trees {len(trees)}")
    value = Map((("depth", str(depth)),
                 ("trees", mapping({format_tree(t): mapping({s: format_object(L.base, A.weight(t, s))
                                                             for s in A.paths(t)})
                                    for t in trees}, sort=False))))
    R.emit_input(n)
    R.emit(codec.Entity("cofree", f"{n}_cofree{depth}", (n,), value))


def cmd_iso_check(L, R, names, args):
    _need(names, (1,), "iso-check")
    kind = ISO_ALIASES.get(names[0], names[0])
    if kind in ISO_KINDS:
        polys = [L[m] for m in names[1:]]
        iso = canonical_iso(kind, *polys, side=args.side or "right")
        rep = verify_iso(iso)
        for v in rep:
            R.violation("iso", kind, v)
        if not rep:
            R.result(f"iso-check {kind} verified")
        return
    p, q = _poly_pair(L, names, "iso-check")
    iso = find_iso(p, q)
    if iso is None:
        R.failed = True
        R.result(f"iso-check {names[0]} {names[1]} not-isomorphic")
        return
    R.result(f"iso-check {names[0]} {names[1]} isomorphic")
    R.emit_input(*names)
    R.emit(codec.encode_morphism(f"{names[0]}_iso_{names[1]}", names[0], names[1], iso.forward))
    R.emit(codec.encode_morphism(f"{names[1]}_iso_{names[0]}", names[1], names[0], iso.backward))


HANDLERS = {
    "validate": cmd_validate,
    "hom-count": cmd_hom_count,
    "enumerate-hom": cmd_enumerate_hom,
    "compose": cmd_compose,
    "tensor": cmd_tensor,
    "compose-product": cmd_compose_product,
    "bowtie": _binary_poly(bowtie_obj, "bowtie"),
    "rtimes": _binary_poly(rtimes_obj, "rtimes"),
    "to-comonoid": cmd_to_comonoid,
    "to-enriched": cmd_to_enriched,
    "to-cofunctor": cmd_to_cofunctor,
    "to-dds": cmd_to_dds,
    "run": cmd_run,
    "bound-check": cmd_bound_check,
    "cofree": cmd_cofree,
    "iso-check": cmd_iso_check,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="polycat", description="Polynomial functors over monoidal bases.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("names", nargs="*", help="entity names from the input file")
    ap.add_argument("--input", "-i", required=True, help="structure file, or - for stdin")
    ap.add_argument("--output", "-o", help="write the report here instead of stdout")
    ap.add_argument("--depth", type=int, help="cofree depth / window size")
    ap.add_argument("--steps", type=int, help="number of steps for run")
    ap.add_argument("--bound", help="cost bound for bound-check")
    ap.add_argument("--no-validate", action="store_true", help="skip validation when loading")
    ap.add_argument("--op", choices=("tensor", "product", "sum"), help="binary operation for tensor")
    ap.add_argument("--def-form", action="store_true", help="compose-product: also emit the definition form")
    ap.add_argument("--side", choices=("left", "right"), help="side for unit isomorphisms")
    return ap


def run(argv=None):
    """Run a command; returns ``(exit code, output text)``."""
    return _run(build_parser().parse_args(argv))


def _run(args):
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        return 2, f"status error\nerror input: {exc}\n"
    validate = not args.no_validate and args.command != "validate"
    try:
        L = load(text, validate=validate)
    except (ParseError, UnresolvedReference) as exc:
        return 2, f"status error\nerror {type(exc).__name__}: {exc}\n"
    except ValidationFailure as exc:
        kind, _, name = exc.entity.partition(" ")
        lines = [f"violation {kind} {name} {v}" for v in exc.report]
        return 1, "status violations\n" + "\n".join(lines) + "\n"
    R = Report(L)
    try:
        HANDLERS[args.command](L, R, args.names, args)
    except (UsageError, UnresolvedReference) as exc:
        return 2, f"status error\nerror {type(exc).__name__}: {exc}\n"
    except PolycatError as exc:
        return 2, f"status error\nerror {type(exc).__name__}: {exc}\n"
    code = 1 if (R.violations or R.failed) else 0
    return code, R.render(L.base)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code, text = _run(args)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
