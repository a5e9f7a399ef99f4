import random

import pytest

from polycat import (
    ARROW,
    TRIVIAL,
    Polynomial,
    PolyMorphism,
    as_dialectica,
    compose_poly,
    constant,
    coproduct,
    enumerate_hom,
    hom_count,
    identity_poly,
    is_homogeneous,
    is_isomorphic,
    linear,
    product,
    unit_polynomial,
    validate_poly_morphism,
    zero,
)
from polycat.errors import BaseMismatch, InvalidInput, NotComposable, laws
from polycat.generate import random_polynomial

y2 = Polynomial.from_counts([2])
y1 = Polynomial.from_counts([1, 0])
y = Polynomial.from_counts([1])


def _dial(c, d):
    p = Polynomial(ARROW, {"i": {"a": c}})
    q = Polynomial(ARROW, {"j": {"b": d}})
    return PolyMorphism(p, q, {"i": "j"}, {"i": {"b": "a"}})


def test_dial_top_to_bottom_rejected():
    report = validate_poly_morphism(_dial("T", "F"))
    assert report and all("T" in str(v) and "F" in str(v) for v in report)


def test_dial_bottom_to_top_accepted():
    assert validate_poly_morphism(_dial("F", "T")) == []


def test_trivial_total_maps_lawful():
    for phi in enumerate_hom(y2, y1):
        assert validate_poly_morphism(phi) == []


def test_partial_maps_reported():
    phi = PolyMorphism(y2, y, {}, {})
    assert laws(validate_poly_morphism(phi)) == {"positions-total"}
    psi = PolyMorphism(y2, y, {"i0": "i0"}, {"i0": {}})
    assert laws(validate_poly_morphism(psi)) == {"directions-total"}


def test_hom_counts():
    assert hom_count(y2, y1) == 3 == len(enumerate_hom(y2, y1))
    assert hom_count(y2, y) == 2 == len(enumerate_hom(y2, y))
    assert hom_count(zero(TRIVIAL), y1) == 1
    assert hom_count(y, zero(TRIVIAL)) == 0


def test_trivial_hom_formula():
    rng = random.Random(3)
    for _ in range(30):
        p, q = random_polynomial(rng), random_polynomial(rng)
        want = 1
        for i in p.positions:
            want *= sum(len(p.directions(i)) ** len(q.directions(j)) for j in q.positions)
        assert hom_count(p, q) == want


def test_identity():
    e = unit_polynomial(TRIVIAL)
    assert enumerate_hom(e, e) == [identity_poly(e)]
    empty = identity_poly(zero(TRIVIAL))
    assert empty.on_positions == {}
    for phi in enumerate_hom(y2, y1):
        assert compose_poly(identity_poly(y2), phi) == phi
        assert compose_poly(phi, identity_poly(y1)) == phi


def test_compose_by_hand():
    fold = PolyMorphism(y2, y, {"i0": "i0"}, {"i0": {"a0": "a1"}})
    pick = PolyMorphism(y, y1, {"i0": "i0"}, {"i0": {"a0": "a0"}})
    h = compose_poly(fold, pick)
    assert h.on_positions == {"i0": "i0"}
    assert h.on_directions == {"i0": {"a0": "a1"}}
    with pytest.raises(NotComposable):
        compose_poly(pick, fold)


def test_arrow_associativity():
    rng = random.Random(11)
    for _ in range(10):
        p, q, r, s = (random_polynomial(rng, ARROW, max_positions=2, max_directions=2) for _ in range(4))
        for f in enumerate_hom(p, q)[:4]:
            for g in enumerate_hom(q, r)[:4]:
                for h in enumerate_hom(r, s)[:4]:
                    assert compose_poly(compose_poly(f, g), h) == compose_poly(f, compose_poly(g, h))


def test_base_mismatch():
    with pytest.raises(BaseMismatch):
        hom_count(y2, linear(ARROW, "T"))


def test_coproduct():
    s, inl, inr = coproduct(y, constant(TRIVIAL))
    assert s.direction_counts() == [0, 1]
    assert validate_poly_morphism(inl) == [] == validate_poly_morphism(inr)
    assert is_isomorphic(coproduct(y2, zero(TRIVIAL))[0], y2)
    assert is_isomorphic(coproduct(y2, y1)[0], coproduct(y1, y2)[0])


def test_product():
    s, p1, p2 = product(y1, y1)
    assert len(s) == 4 and s.direction_counts() == [0, 1, 1, 2]
    assert validate_poly_morphism(p1) == [] == validate_poly_morphism(p2)
    assert is_isomorphic(product(y2, constant(TRIVIAL))[0], y2)


def test_product_universal_property():
    s, p1, p2 = product(y1, y)
    for f in enumerate_hom(y2, y1):
        for g in enumerate_hom(y2, y):
            med = [h for h in enumerate_hom(y2, s) if compose_poly(h, p1) == f and compose_poly(h, p2) == g]
            assert len(med) == 1


def test_homogeneous():
    assert not is_homogeneous(Polynomial.from_counts([2, 1]))
    p = Polynomial(ARROW, {"i1": {"a": "T"}, "i2": {"a": "F"}})
    assert is_homogeneous(p)
    assert as_dialectica(p).relation == {("i1", "a")}
    assert is_homogeneous(y2)
    with pytest.raises(InvalidInput):
        as_dialectica(Polynomial.from_counts([2, 1]))


def test_duplicate_labels_rejected():
    with pytest.raises(InvalidInput):
        Polynomial(TRIVIAL, [("i", {}), ("i", {})])


def test_printing():
    p = Polynomial(ARROW, {"i1": {"a1": "T", "a2": "F"}})
    assert str(p) == "Σ{i1: Π{a1: T, a2: F}}"
