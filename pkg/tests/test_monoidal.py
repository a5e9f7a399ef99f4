import random

import pytest

from polycat import (
    ARROW,
    COST,
    CanonicalIso,
    ISO_KINDS,
    TRIVIAL,
    Polynomial,
    PolyMorphism,
    bowtie_obj,
    canonical_iso,
    comp_mor,
    comp_obj,
    comp_obj_def_form,
    compose_poly,
    cost,
    enumerate_hom,
    identity_poly,
    is_isomorphic,
    linear,
    parallel_mor,
    parallel_obj,
    rtimes_obj,
    unit_polynomial,
    validate_poly_morphism,
    verify_iso,
)
from polycat.errors import KindArityMismatch
from polycat.generate import random_polynomial

y2 = Polynomial.from_counts([2])
y1 = Polynomial.from_counts([1, 0])
y = Polynomial.from_counts([1])
e = unit_polynomial(TRIVIAL)


def test_parallel_obj():
    assert parallel_obj(y2, y1).direction_counts() == [0, 2]
    assert is_isomorphic(parallel_obj(y1, e), y1)
    p = parallel_obj(linear(COST, cost(2)), linear(COST, cost(3)))
    (i,) = p.positions
    (a,) = p.directions(i)
    assert p.predicate(i, a) == 5


def test_parallel_mor():
    assert parallel_mor(identity_poly(y2), identity_poly(y1)) == identity_poly(parallel_obj(y2, y1))
    idy = identity_poly(y)
    for phi in enumerate_hom(y2, y):
        t = parallel_mor(phi, idy)
        assert validate_poly_morphism(t) == []
        for (i, j), (k, m) in t.on_positions.items():
            assert k == phi(i) and m == j
        for (i, j), back in t.on_directions.items():
            for (b, d), (a, c) in back.items():
                assert a == phi.back(i, b) and c == d


def test_parallel_functorial_arrow():
    rng = random.Random(5)
    for _ in range(8):
        p, q, r, s, t, u = (random_polynomial(rng, ARROW, max_positions=2, max_directions=2) for _ in range(6))
        for f in enumerate_hom(p, q)[:2]:
            for g in enumerate_hom(q, r)[:2]:
                for h in enumerate_hom(s, t)[:2]:
                    for k in enumerate_hom(t, u)[:2]:
                        lhs = parallel_mor(compose_poly(f, g), compose_poly(h, k))
                        assert lhs == compose_poly(parallel_mor(f, h), parallel_mor(g, k))


def test_comp_obj():
    r = comp_obj(y2, y1)
    assert len(r) == 4 and r.direction_counts() == [0, 1, 1, 2]
    assert is_isomorphic(comp_obj(y1, e), y1)
    assert is_isomorphic(comp_obj(e, y1), y1)


def test_comp_obj_position_count():
    rng = random.Random(8)
    for _ in range(20):
        p, q = random_polynomial(rng), random_polynomial(rng)
        want = sum(len(q) ** len(p.directions(i)) for i in p.positions)
        assert len(comp_obj(p, q)) == want


def test_comp_mor_identity():
    assert comp_mor(identity_poly(y2), identity_poly(y1)) == identity_poly(comp_obj(y2, y1))


def test_comp_mor_recipe():
    for phi in enumerate_hom(y2, y):
        for psi in enumerate_hom(y1, y):
            m = comp_mor(phi, psi)
            assert validate_poly_morphism(m) == []
            for (i, jbar), (k, kbar) in m.on_positions.items():
                assert k == phi(i)
                # one q-position per direction of the target position, pulled back along phi
                assert kbar == tuple(psi(jbar[y2.directions(i).index(phi.back(i, b))]) for b in y.directions(k))


def test_comp_mor_functorial():
    rng = random.Random(9)
    for _ in range(6):
        p, q, r, s, t, u = (random_polynomial(rng, max_positions=2, max_directions=2) for _ in range(6))
        for f in enumerate_hom(p, q)[:2]:
            for g in enumerate_hom(q, r)[:2]:
                for h in enumerate_hom(s, t)[:2]:
                    for k in enumerate_hom(t, u)[:2]:
                        lhs = comp_mor(compose_poly(f, g), compose_poly(h, k))
                        assert lhs == compose_poly(comp_mor(f, h), comp_mor(g, k))


def test_bowtie_rtimes():
    assert bowtie_obj(y2, y1).direction_counts() == [0, 4]
    assert rtimes_obj(y2, y1).direction_counts() == [0, 4]
    assert is_isomorphic(bowtie_obj(y1, e), y1)
    p, q = Polynomial.from_counts([2]), Polynomial.from_counts([3])
    counts = [len(p.directions("i0")) * len(q.directions("i0"))]
    for op in (parallel_obj, bowtie_obj, rtimes_obj):
        assert op(p, q).direction_counts() == counts


@pytest.mark.parametrize("kind,args", [
    ("assoc◁", (y, y, y1)),
    ("assoc⊗", (y2, y1, y)),
    ("unit⊗", (y2,)),
    ("unit◁", (y1,)),
    ("distrib", (y2, y1, y)),
    ("swap⊗", (y2, y1)),
    ("compForm", (y2, y1)),
])
def test_canonical_isos(kind, args):
    assert kind in ISO_KINDS
    assert verify_iso(canonical_iso(kind, *args)) == []


def test_unit_left():
    assert verify_iso(canonical_iso("unit⊗", y1, side="left")) == []
    assert verify_iso(canonical_iso("unit◁", y1, side="left")) == []


def test_comp_form():
    d, iso = comp_obj_def_form(y2, y1)
    assert iso.kind == "compForm"
    assert iso.forward.source == d and iso.forward.target == comp_obj(y2, y1)


def test_arity():
    with pytest.raises(KindArityMismatch):
        canonical_iso("assoc⊗", y, y)
    with pytest.raises(KindArityMismatch):
        canonical_iso("nope", y)


def test_broken_iso_detected():
    collapse = PolyMorphism(y2, y2, {"i0": "i0"}, {"i0": {"a0": "a0", "a1": "a0"}})
    iso = CanonicalIso(collapse, identity_poly(y2), "swap⊗")
    assert {v.law for v in verify_iso(iso)} == {"iso-left-inverse", "iso-right-inverse"}
