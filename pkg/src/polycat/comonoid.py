"""Comonoids in ``(ΣΠC, e, ◁)`` and their equivalence with enriched categories.

The carrier of the comonoid of an enriched category ``A`` has the objects as
positions, the morphisms out of ``x`` as directions at ``x`` and the weights
as predicates.  The counit picks identities, the comultiplication sends ``x``
to ``(x, cod)`` and composes on directions.

The comultiplication is stored with its target cut down to its image, a
summand of ``carrier ◁ carrier``; that summand has one position per object,
while the full composite can be exponentially larger.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enriched import EnrichedCategory, EnrichedCofunctor
from .errors import InvalidComonoid, InvalidEnriched, InvalidInput, Violation
from .labels import format_label
from .monoidal import STAR, assoc_comp, comp_mor, comp_obj, comp_power, unit_comp
from .polynomial import (
    PolyMorphism,
    Polynomial,
    compose_loose,
    compose_poly,
    identity_poly,
    unit_polynomial,
    validate_poly_morphism,
)


@dataclass(frozen=True)
class Comonoid:
    carrier: Polynomial
    counit: PolyMorphism
    comult: PolyMorphism
    partial: bool = False

    @property
    def base(self):
        return self.carrier.base

    def cod(self, x, f):
        """Codomain of direction ``f`` at ``x`` read off the comultiplication."""
        _, jbar = self.comult(x)
        return dict(zip(self.carrier.directions(x), jbar))[f]


@dataclass(frozen=True)
class ComonoidMorphism:
    source: Comonoid
    target: Comonoid
    map: PolyMorphism


def trivial_comonoid(base) -> Comonoid:
    e = unit_polynomial(base)
    delta = unit_comp(e, "right", inverse=True)
    return Comonoid(e, identity_poly(e), delta)


# -- enriched category -> comonoid -------------------------------------------

def carrier_of(A: EnrichedCategory) -> Polynomial:
    return Polynomial(A.base, {x: {f: w for f, (_, w) in A.out[x].items()} for x in A.objects})


def enriched_to_comonoid(A: EnrichedCategory, validate=True) -> Comonoid:
    """The comonoid of ``A``.  With ``validate=False`` unlawful inputs are converted as they are."""
    if validate:
        from .enriched import validate_enriched

        report = validate_enriched(A)
        if report:
            raise InvalidEnriched("; ".join(str(v) for v in report))
    C = A.base
    X = carrier_of(A)
    e = unit_polynomial(C)
    eps_dir, eps_pred = {}, {}
    for x in A.objects:
        if x in A.identities:
            eps_dir[x] = {STAR: A.identity(x)}
            if A.eta(x) is not None:
                eps_pred[(x, STAR)] = A.eta(x)
    counit = PolyMorphism(X, e, {x: STAR for x in A.objects}, eps_dir, eps_pred, fill=False)
    on_pos, on_dir, on_pred = {}, {}, {}
    for x in A.objects:
        fs = X.directions(x)
        pos = (x, tuple(A.cod(x, f) for f in fs))
        on_pos[x] = pos
        row = {}
        for f in fs:
            y = A.cod(x, f)
            for g in X.directions(y):
                hit = A.composition.get((x, f, g))
                if hit is None:
                    continue
                h, mu = hit
                row[(f, g)] = h
                if mu is not None:
                    on_pred[(x, (f, g))] = mu
        on_dir[x] = row
    target = comp_obj(X, X, list(on_pos.values()))
    comult = PolyMorphism(X, target, on_pos, on_dir, on_pred, fill=False)
    return Comonoid(X, counit, comult, partial=A.partial)


# -- comonoid -> enriched category -------------------------------------------

def comonoid_to_enriched(X: Comonoid, validate=True) -> EnrichedCategory:
    if validate:
        report = validate_comonoid(X)
        if report:
            raise InvalidComonoid("; ".join(str(v) for v in report))
    p = X.carrier
    out, ids, comp = {}, {}, {}
    for x in p.positions:
        out[x] = {f: (X.cod(x, f), p.predicate(x, f)) for f in p.directions(x)}
        ids[x] = (X.counit.back(x, STAR), X.counit.on_predicates.get((x, STAR)))
        for (f, g), h in X.comult.on_directions[x].items():
            comp[(x, f, g)] = (h, X.comult.on_predicates.get((x, (f, g))))
    return EnrichedCategory(p.base, p.positions, out, ids, comp, partial=X.partial)


# -- law checks -----------------------------------------------------------

def _is_comp_summand(target: Polynomial, p: Polynomial, q: Polynomial) -> bool:
    try:
        return target == comp_obj(p, q, target.positions)
    except (InvalidInput, KeyError):
        return False


def _agree(f: PolyMorphism, g: PolyMorphism, partial: bool) -> bool:
    """Equality of morphisms; when ``partial`` only where both are defined."""
    if not partial:
        return f == g
    if f.source != g.source or f.on_positions != g.on_positions:
        return False
    for i in f.source.positions:
        a, b = f.on_directions.get(i, {}), g.on_directions.get(i, {})
        for k in a.keys() & b.keys():
            if a[k] != b[k]:
                return False
            pa, pb = f.on_predicates.get((i, k)), g.on_predicates.get((i, k))
            if pa is not None and pb is not None and pa != pb:
                return False
    return True


def _first_diff(f: PolyMorphism, g: PolyMorphism):
    for i in f.source.positions:
        if f.on_positions.get(i) != g.on_positions.get(i) \
                or f.on_directions.get(i) != g.on_directions.get(i):
            return (i,)
        for k in f.on_directions.get(i, {}):
            if f.on_predicates.get((i, k)) != g.on_predicates.get((i, k)):
                return (i, k)
    return ()


def counit_composite(X: Comonoid, side: str) -> PolyMorphism:
    """``(ε ◁ id)∘δ`` (side="left") or ``(id ◁ ε)∘δ`` (side="right"), followed by the unitor."""
    p, d = X.carrier, X.comult
    image = d.image()
    if side == "left":
        m = comp_mor(X.counit, identity_poly(p), image)
    else:
        m = comp_mor(identity_poly(p), X.counit, image)
    u = compose_loose(d, m)
    return compose_loose(u, unit_comp(p, side, u.image()))


def validate_comonoid(X: Comonoid) -> list[Violation]:
    """Counitality and coassociativity of ``X``, computed through the unitors and associator of ◁."""
    p, eps, d = X.carrier, X.counit, X.comult
    report: list[Violation] = []
    e = unit_polynomial(p.base)
    if eps.source != p or eps.target != e:
        report.append(Violation("counit-typing", (), "counit must go from the carrier to the unit"))
    else:
        report += [Violation("counit-typing", v.where, v.law) for v in validate_poly_morphism(eps)]
    if d.source != p or not _is_comp_summand(d.target, p, p):
        report.append(Violation("comult-typing", (), "comultiplication must land in carrier ◁ carrier"))
    else:
        report += [Violation("comult-typing", v.where, v.law)
                   for v in validate_poly_morphism(d, allow_partial=X.partial)]
    if report:
        return report
    ident = identity_poly(p)
    for side, law in (("left", "counit-left"), ("right", "counit-right")):
        try:
            got = counit_composite(X, side)
        except InvalidInput as exc:
            report.append(Violation(law, (), str(exc)))
            continue
        if got != ident:
            report.append(Violation(law, _first_diff(got, ident)))
    if X.partial:
        report += _coassoc_tables(X)
    else:
        image = d.image()
        left = compose_loose(d, comp_mor(d, ident, image))
        right = compose_loose(d, comp_mor(ident, d, image))
        right = compose_loose(right, assoc_comp(p, p, p, right.image(), inverse=True))
        if left != right:
            report.append(Violation("coassociativity", _first_diff(left, right)))
    return report


def _coassoc_tables(X: Comonoid) -> list[Violation]:
    """Coassociativity of a partial comultiplication, wherever both sides are defined."""
    C = X.base
    p, d = X.carrier, X.comult
    out = []
    for x in p.positions:
        dx = d.on_directions[x]
        for f in p.directions(x):
            y = X.cod(x, f)
            dy = d.on_directions[y]
            for g in p.directions(y):
                z = X.cod(y, g)
                for h in p.directions(z):
                    if (f, g) not in dx or (g, h) not in dy:
                        continue
                    gf, hg = dx[(f, g)], dy[(g, h)]
                    if (gf, h) not in dx or (f, hg) not in dx:
                        continue
                    if dx[(gf, h)] != dx[(f, hg)]:
                        out.append(Violation("coassociativity", (x, f, g, h)))
                        continue
                    ms = [d.on_predicates.get((x, (f, hg))), d.on_predicates.get((y, (g, h))),
                          d.on_predicates.get((x, (f, g))), d.on_predicates.get((x, (gf, h)))]
                    if any(m is None for m in ms):
                        continue
                    top = C.compose(ms[0], C.tensor(C.identity(p.predicate(x, f)), ms[1]))
                    bottom = C.compose(ms[3], C.tensor(ms[2], C.identity(p.predicate(z, h))))
                    if top != bottom:
                        out.append(Violation("coassociativity", (x, f, g, h)))
    return out


# -- iterated comultiplication ------------------------------------------------

def nfold_comult(X: Comonoid, n: int, bracketing="right") -> PolyMorphism:
    """``δⁿ: X -> X ◁ ... ◁ X`` with ``n + 1`` left-nested factors.

    ``δ⁰`` is the identity and ``δ¹ = δ``.  The default follows
    ``δⁿ = (id ◁ δ)∘δⁿ⁻¹`` with a re-association at each step; ``"left"`` uses
    ``δⁿ = (δⁿ⁻¹ ◁ id)∘δ`` instead, which lands in the same place without one.
    The codomain is cut down to the image.
    """
    if n < 0:
        raise InvalidInput("n must be >= 0")
    p, d = X.carrier, X.comult
    if n == 0:
        return identity_poly(p)
    if n == 1:
        return d
    if bracketing == "left":
        prev = nfold_comult(X, n - 1, "left")
        image = d.image()
        firsts = list(dict.fromkeys(pos[0] for pos in image))
        return compose_loose(d, comp_mor(prev.restrict(firsts), identity_poly(p), image))
    if bracketing != "right":
        raise InvalidInput(f"bracketing must be 'left' or 'right', not {bracketing!r}")
    prev = nfold_comult(X, n - 1, "right")
    image = prev.image()
    firsts = list(dict.fromkeys(pos[0] for pos in image))
    P = comp_power(p, n - 1, firsts)
    step = compose_loose(prev, comp_mor(identity_poly(P), d, image))
    return compose_loose(step, assoc_comp(P, p, p, step.image(), inverse=True))


# -- cofunctors <-> comonoid morphisms ----------------------------------------

def cofunctor_to_comonoid_mor(F: EnrichedCofunctor, source: Comonoid | None = None,
                              target: Comonoid | None = None) -> ComonoidMorphism:
    S = source or enriched_to_comonoid(F.source, validate=False)
    T = target or enriched_to_comonoid(F.target, validate=False)
    on_dir, on_pred = {}, {}
    for x in F.source.objects:
        b = F.object_map[x]
        row = {}
        for f in F.target.out.get(b, {}):
            if (x, f) in F.lift:
                g, w = F.lift[(x, f)]
                row[f] = g
                if w is not None:
                    on_pred[(x, f)] = w
        on_dir[x] = row
    phi = PolyMorphism(S.carrier, T.carrier, dict(F.object_map), on_dir, on_pred, fill=False)
    return ComonoidMorphism(S, T, phi)


def comonoid_mor_to_cofunctor(m: ComonoidMorphism, source: EnrichedCategory | None = None,
                              target: EnrichedCategory | None = None) -> EnrichedCofunctor:
    A = source or comonoid_to_enriched(m.source, validate=False)
    B = target or comonoid_to_enriched(m.target, validate=False)
    phi = m.map
    lift = {}
    for x, back in phi.on_directions.items():
        for f, g in back.items():
            lift[(x, f)] = (g, phi.on_predicates.get((x, f)))
    return EnrichedCofunctor(A, B, dict(phi.on_positions), lift)


def validate_comonoid_morphism(m: ComonoidMorphism) -> list[Violation]:
    """``ε_T ∘ φ = ε_S`` and ``δ_T ∘ φ = (φ ◁ φ) ∘ δ_S``."""
    S, T, phi = m.source, m.target, m.map
    report = [Violation("map-typing", v.where, v.law) for v in validate_poly_morphism(phi)]
    if phi.source != S.carrier or phi.target != T.carrier:
        report.append(Violation("map-typing", (), "map must go between the carriers"))
    if report:
        return report
    partial = S.partial or T.partial
    if compose_poly(phi, T.counit) != S.counit:
        report.append(Violation("counit-preservation", _first_diff(compose_poly(phi, T.counit), S.counit)))
    try:
        left = compose_loose(phi, T.comult)
        right = compose_loose(S.comult, comp_mor(phi, phi, S.comult.image()))
    except InvalidInput as exc:
        report.append(Violation("comult-preservation", (), str(exc)))
        return report
    if not _agree(left, right, partial):
        report.append(Violation("comult-preservation", _first_diff(left, right)))
    return report


def identity_comonoid_mor(X: Comonoid) -> ComonoidMorphism:
    return ComonoidMorphism(X, X, identity_poly(X.carrier))


def describe(X: Comonoid) -> str:
    p = X.carrier
    return f"comonoid on {len(p.positions)} positions ({', '.join(format_label(i) for i in p.positions)})"
