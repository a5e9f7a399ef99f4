"""Categories enriched over families of base objects, and their cofunctors.

An enriched category has objects, a weight ``|f|`` per morphism, an identity
witness ``η_x: |id_x| -> e`` and a composite witness
``μ_{f,g}: |gf| -> |f|·|g|``.  Morphism labels are unique per domain, which
matches the comonoid side where morphisms out of ``x`` are the directions at
``x``.

Composition is written ``(f, g) -> h`` meaning ``h = g ∘ f`` (first ``f``).
A category flagged ``partial`` may omit composites; the checkers then skip the
missing ones instead of reporting them.
"""

from __future__ import annotations

from collections.abc import Mapping

from .base import COST, MonoidalBase
from .errors import BaseMismatch, InvalidInput, NotComposable, Violation
from .labels import format_label, label_key, sort_labels


def _witness(C: MonoidalBase, dom, cod, given=None):
    """Use ``given`` if supplied, else the forced morphism in a thin base."""
    if given is not None:
        return given
    if C.contains(dom) and C.contains(cod):
        return C.unique_morphism(dom, cod)
    return None


class EnrichedCategory:
    """A small category enriched over ``(ΣC^op, e, ⊙)``.

    ``out[x][f] = (cod, weight)``; ``identities[x] = (label, η)``;
    ``composition[(x, f, g)] = (h, μ)``.  ``η`` and ``μ`` are base morphisms or
    None when absent (which the validator reports).
    """

    def __init__(self, base: MonoidalBase, objects, out: Mapping, identities: Mapping,
                 composition: Mapping, partial=False):
        self.base = base
        self.objects = tuple(sort_labels(dict.fromkeys(objects)))
        self.out = {x: {f: (c, base.coerce(w)) for f, (c, w) in sorted(out.get(x, {}).items(),
                                                                          key=lambda kv: label_key(kv[0]))}
                    for x in self.objects}
        self.identities = dict(identities)
        self.composition = dict(composition)
        self.partial = partial

    # -- construction ----------------------------------------------------
    @classmethod
    def build(cls, base: MonoidalBase, objects, morphisms: Mapping, identities: Mapping,
              composition: Mapping | None = None, *, eta: Mapping | None = None,
              mu: Mapping | None = None, fill_units=True, partial=False):
        """Build from globally labelled data.

        ``morphisms[label] = (dom, cod, weight)``, ``identities[x] = label`` and
        ``composition[(f, g)] = h``.  Witnesses missing from ``eta``/``mu`` are
        taken to be the forced ones (thin bases) or, for composites with an
        identity of unit weight, the identity.  With ``fill_units`` the unit
        composites ``f∘id`` and ``id∘f`` need not be listed.
        """
        C = base
        eta = dict(eta or {})
        mu = dict(mu or {})
        composition = dict(composition or {})
        objects = list(objects)
        out: dict = {x: {} for x in objects}
        dom_of = {}
        for f, (d, c, w) in morphisms.items():
            if d not in out:
                raise InvalidInput(f"morphism {format_label(f)} has unknown domain {format_label(d)}")
            if c not in out:
                raise InvalidInput(f"morphism {format_label(f)} has unknown codomain {format_label(c)}")
            out[d][f] = (c, C.coerce(w))
            dom_of[f] = d
        ids = {}
        for x, f in identities.items():
            if f not in dom_of:
                raise InvalidInput(f"identity {format_label(f)} of {format_label(x)} is not a morphism")
            w = out[dom_of[f]][f][1]
            ids[x] = (f, _witness(C, w, C.unit, eta.get(x)))
        if fill_units:
            for f, d in dom_of.items():
                c = out[d][f][0]
                if d in ids:
                    composition.setdefault((ids[d][0], f), f)
                if c in ids:
                    composition.setdefault((f, ids[c][0]), f)
        comp = {}
        for (f, g), h in composition.items():
            if f not in dom_of or g not in dom_of:
                raise InvalidInput(f"composite of unknown morphisms {format_label(f)}, {format_label(g)}")
            x = dom_of[f]
            if h not in out[x]:
                raise InvalidInput(f"composite {format_label(h)} is not a morphism out of {format_label(x)}")
            wf, wg = out[x][f][1], out[dom_of[g]][g][1]
            wh = out[x][h][1]
            m = mu.get((f, g))
            if m is None:
                m = _witness(C, wh, C.tensor(wf, wg))
            if m is None and wh == C.tensor(wf, wg) and (f == ids.get(x, (None,))[0] or
                                                         g == ids.get(dom_of[g], (None,))[0]):
                m = C.identity(wh)
            comp[(x, f, g)] = (h, m)
        return cls(C, objects, out, ids, comp, partial=partial)

    # -- access ----------------------------------------------------------
    def morphisms_from(self, x):
        return tuple(self.out[x])

    def cod(self, x, f):
        return self.out[x][f][0]

    def weight(self, x, f):
        return self.out[x][f][1]

    def identity(self, x):
        return self.identities[x][0]

    def eta(self, x):
        return self.identities[x][1]

    def compose(self, x, f, g):
        """Label of ``g ∘ f`` for ``f`` out of ``x``; None where a partial category omits it."""
        hit = self.composition.get((x, f, g))
        return None if hit is None else hit[0]

    def mu(self, x, f, g):
        hit = self.composition.get((x, f, g))
        return None if hit is None else hit[1]

    def hom(self, x, y):
        return tuple(f for f, (c, _) in self.out[x].items() if c == y)

    def arrows(self):
        """All ``(x, f)`` pairs in canonical order."""
        return [(x, f) for x in self.objects for f in self.out[x]]

    def composable_pairs(self):
        return [(x, f, g) for x, f in self.arrows() for g in self.out[self.cod(x, f)]]

    def relabel(self, obj_map: Mapping, mor_map) -> "EnrichedCategory":
        """Rename objects by ``obj_map`` and morphisms by ``mor_map(x, f)``."""
        out = {obj_map[x]: {mor_map(x, f): (obj_map[c], w) for f, (c, w) in self.out[x].items()}
               for x in self.objects}
        ids = {obj_map[x]: (mor_map(x, f), e) for x, (f, e) in self.identities.items()}
        comp = {}
        for (x, f, g), (h, m) in self.composition.items():
            y = self.cod(x, f)
            comp[(obj_map[x], mor_map(x, f), mor_map(y, g))] = (mor_map(x, h), m)
        return EnrichedCategory(self.base, [obj_map[x] for x in self.objects], out, ids, comp,
                                partial=self.partial)

    def _key(self):
        return (self.base, self.objects, tuple((x, tuple(self.out[x].items())) for x in self.objects),
                tuple(sorted(self.identities.items(), key=lambda kv: label_key(kv[0]))),
                frozenset(self.composition.items()), self.partial)

    def __eq__(self, other):
        if not isinstance(other, EnrichedCategory):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        n = sum(len(m) for m in self.out.values())
        return f"<EnrichedCategory over {self.base.name}: {len(self.objects)} objects, {n} morphisms>"


def _law_names(C):
    if C == COST:
        return "nonpositivity", "triangle-inequality"
    return "identity-witness", "composite-witness"


def validate_enriched(A: EnrichedCategory) -> list[Violation]:
    """Every label-level category law and every base-level diagram of ``A``.

    Over the cost base the witness checks are exactly ``|id_x| = 0`` and
    ``|gf| <= |f| + |g|``.
    """
    C = A.base
    report: list[Violation] = []
    eta_law, mu_law = _law_names(C)
    for x in A.objects:
        for f, (c, w) in A.out[x].items():
            if c not in A.out:
                report.append(Violation("morphism-typing", (x, f), "unknown codomain"))
            if not C.contains(w):
                report.append(Violation("weight-typing", (x, f)))
    if report:
        return report
    for x in A.objects:
        if x not in A.identities:
            report.append(Violation("identity-missing", (x,)))
            continue
        i, e = A.identities[x]
        if i not in A.out[x] or A.cod(x, i) != x:
            report.append(Violation("identity-typing", (x, i)))
            continue
        want = (A.weight(x, i), C.unit)
        if e is None:
            report.append(Violation(eta_law, (x, i), f"no map {C.format_object(want[0])} -> "
                                                     f"{C.format_object(want[1])}"))
        elif not C.is_morphism(e) or (e.dom, e.cod) != want:
            report.append(Violation("identity-witness-typing", (x, i)))
    if any(v.law in ("identity-missing", "identity-typing") for v in report):
        return report

    def ok_comp(x, f, g):
        return (x, f, g) in A.composition

    for x, f, g in A.composable_pairs():
        y = A.cod(x, f)
        if not ok_comp(x, f, g):
            if not A.partial:
                report.append(Violation("composition-missing", (x, f, g)))
            continue
        h, m = A.composition[(x, f, g)]
        z = A.cod(y, g)
        if h not in A.out[x] or A.cod(x, h) != z:
            report.append(Violation("composition-typing", (x, f, g)))
            continue
        want = (A.weight(x, h), C.tensor(A.weight(x, f), A.weight(y, g)))
        if m is None:
            report.append(Violation(mu_law, (x, f, g), f"no map {C.format_object(want[0])} -> "
                                                        f"{C.format_object(want[1])}"))
        elif not C.is_morphism(m) or (m.dom, m.cod) != want:
            report.append(Violation("composite-witness-typing", (x, f, g)))
    if report:
        return report

    for x, f in A.arrows():
        y = A.cod(x, f)
        ix, iy = A.identity(x), A.identity(y)
        wf = A.weight(x, f)
        if ok_comp(x, ix, f):
            if A.compose(x, ix, f) != f:
                report.append(Violation("left-unit", (x, f)))
            else:
                lhs = C.compose(A.mu(x, ix, f), C.tensor(A.eta(x), C.identity(wf)))
                if lhs != C.identity(wf):
                    report.append(Violation("left-unit-diagram", (x, f)))
        if ok_comp(x, f, iy):
            if A.compose(x, f, iy) != f:
                report.append(Violation("right-unit", (x, f)))
            else:
                lhs = C.compose(A.mu(x, f, iy), C.tensor(C.identity(wf), A.eta(y)))
                if lhs != C.identity(wf):
                    report.append(Violation("right-unit-diagram", (x, f)))
    for x, f, g in A.composable_pairs():
        if not ok_comp(x, f, g):
            continue
        y = A.cod(x, f)
        z = A.cod(y, g)
        gf = A.compose(x, f, g)
        for h in A.out[z]:
            if not (ok_comp(y, g, h) and ok_comp(x, gf, h)):
                continue
            hg = A.compose(y, g, h)
            if not ok_comp(x, f, hg):
                continue
            left, right = A.compose(x, gf, h), A.compose(x, f, hg)
            if left != right:
                report.append(Violation("associativity", (x, f, g, h)))
                continue
            ms = [A.mu(x, f, hg), A.mu(y, g, h), A.mu(x, f, g), A.mu(x, gf, h)]
            wf, wh = A.weight(x, f), A.weight(z, h)
            top = C.compose(ms[0], C.tensor(C.identity(wf), ms[1]))
            bottom = C.compose(ms[3], C.tensor(ms[2], C.identity(wh)))
            if top != bottom:
                report.append(Violation("associativity-diagram", (x, f, g, h)))
    return report


def metric_violations(A: EnrichedCategory) -> list[Violation]:
    """Direct inequality scan for a cost-enriched category (independent of the diagram checker)."""
    from .base import cost_add

    out = []
    for x in A.objects:
        if A.weight(x, A.identity(x)) != 0:
            out.append(Violation("nonpositivity", (x,)))
    for x, f, g in A.composable_pairs():
        h = A.compose(x, f, g)
        if h is None:
            continue
        if not A.weight(x, h) <= cost_add(A.weight(x, f), A.weight(A.cod(x, f), g)):
            out.append(Violation("triangle-inequality", (x, f, g)))
    return out


# -- cofunctors -------------------------------------------------------------

class EnrichedCofunctor:
    """``Φ: A ↛ B``: objects forward, morphisms of ``B`` lifted back to ``A``.

    ``lift[(a, f)] = (f', w)`` for ``f`` out of ``Φa`` in ``B``, with ``f'`` out
    of ``a`` in ``A`` and ``w: |f'| -> |f|``.  ``w`` may be omitted (None) in
    thin bases and is then filled in.
    """

    def __init__(self, source: EnrichedCategory, target: EnrichedCategory, object_map: Mapping,
                 lift: Mapping):
        self.source = source
        self.target = target
        self.object_map = dict(object_map)
        C = source.base
        filled = {}
        for (a, f), v in lift.items():
            g, w = v if isinstance(v, tuple) else (v, None)
            if w is None and a in source.out and g in source.out[a] and \
                    self.object_map.get(a) in target.out and f in target.out[self.object_map[a]]:
                w = _witness(C, source.weight(a, g), target.weight(self.object_map[a], f))
            filled[(a, f)] = (g, w)
        self.lift = filled

    def __call__(self, a):
        return self.object_map[a]

    def lifted(self, a, f):
        return self.lift[(a, f)][0]

    def weight_map(self, a, f):
        return self.lift[(a, f)][1]

    def _key(self):
        return (self.source, self.target, frozenset(self.object_map.items()), frozenset(self.lift.items()))

    def __eq__(self, other):
        if not isinstance(other, EnrichedCofunctor):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<EnrichedCofunctor {self.source!r} -/-> {self.target!r}>"


def validate_cofunctor(F: EnrichedCofunctor) -> list[Violation]:
    """Identity and composite preservation, plus codomain coherence, over all ``(a, f)``.

    Where either category is partial, composites that fall outside it are skipped.
    """
    A, B = F.source, F.target
    if A.base != B.base:
        raise BaseMismatch(f"bases differ: {A.base.name} vs {B.base.name}")
    C = A.base
    report: list[Violation] = []
    for a in A.objects:
        if a not in F.object_map:
            report.append(Violation("object-map-total", (a,)))
        elif F.object_map[a] not in B.out:
            report.append(Violation("object-map-codomain", (a,)))
    if report:
        return report
    for a in A.objects:
        b = F(a)
        for f in B.out[b]:
            if (a, f) not in F.lift:
                report.append(Violation("lift-missing", (a, f)))
                continue
            g, w = F.lift[(a, f)]
            if g not in A.out[a]:
                report.append(Violation("lift-typing", (a, f), "lifted morphism is not out of the object"))
                continue
            if F(A.cod(a, g)) != B.cod(b, f):
                report.append(Violation("codomain-coherence", (a, f)))
            want = (A.weight(a, g), B.weight(b, f))
            if w is None:
                report.append(Violation("lift-weight", (a, f), f"no map {C.format_object(want[0])} -> "
                                                               f"{C.format_object(want[1])}"))
            elif not C.is_morphism(w) or (w.dom, w.cod) != want:
                report.append(Violation("lift-weight-typing", (a, f)))
    if report:
        return report
    for a in A.objects:
        b = F(a)
        ib = B.identity(b)
        g, w = F.lift[(a, ib)]
        if g != A.identity(a):
            report.append(Violation("identity-preservation", (a,)))
        elif A.eta(a) is not None and B.eta(b) is not None:
            if C.compose(w, B.eta(b)) != A.eta(a):
                report.append(Violation("identity-preservation-diagram", (a,)))
    for a in A.objects:
        b = F(a)
        for f in B.out[b]:
            f1, wf = F.lift[(a, f)]
            x = A.cod(a, f1)
            b1 = B.cod(b, f)
            for g in B.out[b1]:
                gf = B.compose(b, f, g)
                if gf is None:
                    continue
                g1, wg = F.lift[(x, g)]
                comp = A.compose(a, f1, g1)
                if comp is None:
                    continue
                h1, wh = F.lift[(a, gf)]
                if h1 != comp:
                    report.append(Violation("composite-preservation", (a, f, g)))
                    continue
                mu_a, mu_b = A.mu(a, f1, g1), B.mu(b, f, g)
                if mu_a is None or mu_b is None:
                    continue
                lhs = C.compose(mu_a, C.tensor(wf, wg))
                rhs = C.compose(wh, mu_b)
                if lhs != rhs:
                    report.append(Violation("composite-preservation-diagram", (a, f, g)))
    return report


def identity_cofunctor(A: EnrichedCategory) -> EnrichedCofunctor:
    C = A.base
    return EnrichedCofunctor(A, A, {x: x for x in A.objects},
                             {(x, f): (f, C.identity(A.weight(x, f))) for x, f in A.arrows()})


def compose_cofunctors(F: EnrichedCofunctor, G: EnrichedCofunctor) -> EnrichedCofunctor:
    """``G ∘ F`` for ``F: A ↛ B`` and ``G: B ↛ C``."""
    if F.source.base != G.source.base:
        raise BaseMismatch("bases differ")
    if F.target != G.source:
        raise NotComposable("target of the first cofunctor is not the source of the second")
    C = F.source.base
    obj = {a: G(F(a)) for a in F.source.objects}
    lift = {}
    for a in F.source.objects:
        c = obj[a]
        for f in G.target.out[c]:
            f1, w1 = G.lift[(F(a), f)]
            f2, w2 = F.lift[(a, f1)]
            w = C.compose(w2, w1) if w1 is not None and w2 is not None else None
            lift[(a, f)] = (f2, w)
    return EnrichedCofunctor(F.source, G.target, obj, lift)


def inverse_cofunctor(F: EnrichedCofunctor) -> EnrichedCofunctor | None:
    """The two-sided inverse of ``F`` if it exists.

    That needs a bijection on objects, a bijection between morphisms out of
    ``a`` and out of ``Φa`` at each object, and invertible weight maps.
    """
    A, B = F.source, F.target
    C = A.base
    inv = {}
    for a, b in F.object_map.items():
        if b in inv:
            return None
        inv[b] = a
    if set(inv) != set(B.objects):
        return None
    lift = {}
    for a in A.objects:
        b = F(a)
        seen = {}
        for f in B.out[b]:
            g, w = F.lift[(a, f)]
            if g in seen:
                return None
            seen[g] = (f, w)
        if set(seen) != set(A.out[a]):
            return None
        for g, (f, w) in seen.items():
            back = None
            for w1, w2 in C.isomorphisms(w.dom, w.cod):
                if w1 == w:
                    back = w2
                    break
            if back is None:
                return None
            lift[(b, g)] = (f, back)
    return EnrichedCofunctor(B, A, inv, lift)
