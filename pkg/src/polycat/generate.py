"""Random small instances for property tests and demos.

Every generator takes a ``random.Random`` so runs are reproducible.  Lawful
enriched categories come from rejection sampling against the validator; the
broken variants change exactly one entry of a lawful one.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .base import COST, INF, TRIVIAL, MonoidalBase
from .enriched import EnrichedCategory, EnrichedCofunctor, validate_cofunctor, validate_enriched
from .polynomial import Polynomial, PolyMorphism, _position_choices

COST_SAMPLE = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3), INF)


def objects_of(base: MonoidalBase):
    if base == COST:
        return COST_SAMPLE
    objs = base.finite_objects()
    if objs is None:
        raise ValueError(f"no object sample for {base.name}")
    return tuple(objs)


def random_polynomial(rng: random.Random, base: MonoidalBase = TRIVIAL, max_positions=3,
                      max_directions=3, min_positions=0) -> Polynomial:
    objs = objects_of(base)
    n = rng.randint(min_positions, max_positions)
    data = {}
    for i in range(n):
        k = rng.randint(0, max_directions)
        data[f"i{i}"] = {f"a{a}": rng.choice(objs) for a in range(k)}
    return Polynomial(base, data)


def random_poly_morphism(rng: random.Random, p: Polynomial, q: Polynomial):
    """A uniformly chosen morphism per position, or None if there is none."""
    on_pos, on_dir, on_pred = {}, {}, {}
    for i in p.positions:
        choices = _position_choices(p, q, i)
        if not choices:
            return None
        j, back, preds = rng.choice(choices)
        on_pos[i], on_dir[i] = j, back
        on_pred.update(preds)
    return PolyMorphism(p, q, on_pos, on_dir, on_pred, fill=False)


def random_candidate(rng: random.Random, p: Polynomial, q: Polynomial) -> PolyMorphism:
    """Random index maps of the right shape, with no regard for the predicates."""
    on_pos, on_dir = {}, {}
    for i in p.positions:
        j = rng.choice(q.positions)
        on_pos[i] = j
        on_dir[i] = {b: rng.choice(p.directions(i)) for b in q.directions(j)} if p.directions(i) else {}
    return PolyMorphism(p, q, on_pos, on_dir)


# -- enriched categories ---------------------------------------------------

def _weights(base):
    if base == COST:
        return COST_SAMPLE
    return objects_of(base)


def _label_structure(rng, n_objects, n_extra):
    objects = [f"x{k}" for k in range(n_objects)]
    mors = {}
    for x in objects:
        mors[f"id{x[1:]}"] = (x, x)
    for k in range(n_extra):
        mors[f"f{k}"] = (rng.choice(objects), rng.choice(objects))
    ids = {x: f"id{x[1:]}" for x in objects}
    comp = {}
    extra = [f for f in mors if f.startswith("f")]
    for f in extra:
        for g in extra:
            if mors[f][1] != mors[g][0]:
                continue
            d, c = mors[f][0], mors[g][1]
            cands = [h for h, (hd, hc) in mors.items() if hd == d and hc == c]
            comp[(f, g)] = rng.choice(cands) if cands else None
    return objects, mors, ids, comp


def random_enriched(rng: random.Random, base: MonoidalBase = COST, max_objects=3, max_morphisms=4,
                    tries=500) -> EnrichedCategory:
    """A lawful enriched category with at most ``max_morphisms`` morphisms (identities included)."""
    for _ in range(tries):
        n = rng.randint(1, max_objects)
        if n > max_morphisms:
            continue
        objects, mors, ids, comp = _label_structure(rng, n, rng.randint(0, max_morphisms - n))
        if any(h is None for h in comp.values()):
            continue
        unit = base.unit
        ws = _weights(base)
        table = {}
        for f, (d, c) in mors.items():
            table[f] = (d, c, unit if f in ids.values() and rng.random() < 0.8 else rng.choice(ws))
        A = EnrichedCategory.build(base, objects, table, ids, comp)
        if not validate_enriched(A):
            return A
    raise RuntimeError("rejection sampling did not find a lawful instance")


def break_enriched(rng: random.Random, A: EnrichedCategory, tries=100):
    """An unlawful variant of the lawful ``A`` differing in one weight or one composite.

    Witnesses are recomputed after the change (thin bases only), so the
    failure shows up as whichever law the change breaks.  Returns None if no
    breaking change was found.
    """
    for _ in range(tries):
        B = _perturb(rng, A)
        if B is not None and validate_enriched(B):
            return B
    return None


def _perturb(rng, A):
    C = A.base
    out = {x: dict(m) for x, m in A.out.items()}
    comp = {k: v[0] for k, v in A.composition.items()}
    if rng.random() < 0.5:
        x, f = rng.choice(A.arrows())
        c, w = out[x][f]
        others = [v for v in _weights(C) if v != w]
        out[x][f] = (c, rng.choice(others))
    else:
        if not comp:
            return None
        x, f, g = rng.choice(sorted(comp, key=repr))
        h = comp[(x, f, g)]
        z = A.cod(A.cod(x, f), g)
        others = [k for k in A.hom(x, z) if k != h]
        if not others:
            return None
        comp[(x, f, g)] = rng.choice(others)
    ids = {x: (i, C.unique_morphism(out[x][i][1], C.unit)) for x, (i, _) in A.identities.items()}
    witnessed = {}
    for (x, f, g), h in comp.items():
        y = out[x][f][0]
        want = C.tensor(out[x][f][1], out[y][g][1])
        witnessed[(x, f, g)] = (h, C.unique_morphism(out[x][h][1], want))
    return EnrichedCategory(C, A.objects, out, ids, witnessed, partial=A.partial)


# -- cofunctors ------------------------------------------------------------

def all_cofunctors(A: EnrichedCategory, B: EnrichedCategory, cap=200_000):
    """Every lawful cofunctor ``A ↛ B`` (thin bases), found by filtering all candidates."""
    if not A.base.thin:
        raise ValueError("candidate enumeration needs a thin base")
    found = []
    seen = 0
    for omap in itertools.product(B.objects, repeat=len(A.objects)):
        om = dict(zip(A.objects, omap))
        slots = [(a, f) for a in A.objects for f in B.out[om[a]]]
        choices = [A.morphisms_from(a) for a, _ in slots]
        for pick in itertools.product(*choices):
            seen += 1
            if seen > cap:
                raise RuntimeError("too many candidate cofunctors")
            F = EnrichedCofunctor(A, B, om, dict(zip(slots, pick)))
            if not validate_cofunctor(F):
                found.append(F)
    return found


def random_dds_assignment(rng: random.Random, A: EnrichedCategory):
    return {x: rng.choice(A.morphisms_from(x)) for x in A.objects}
