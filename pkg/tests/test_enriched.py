import random

import pytest

from polycat import (
    COST,
    EnrichedCategory,
    EnrichedCofunctor,
    compose_cofunctors,
    identity_cofunctor,
    nat_window,
    validate_cofunctor,
    validate_enriched,
)
from polycat.base import cost, cost_add
from polycat.errors import NotComposable, laws
from polycat.generate import all_cofunctors, random_enriched


def loop():
    return EnrichedCategory.build(COST, ["x"], {"id": ("x", "x", 0), "l": ("x", "x", 2)},
                                  {"x": "id"}, {("l", "l"): "l"})


def two_point(id_weight=0):
    return EnrichedCategory.build(COST, ["x", "y"],
                                  {"idx": ("x", "x", id_weight), "idy": ("y", "y", 0), "f": ("x", "y", 3)},
                                  {"x": "idx", "y": "idy"})


def test_two_point_lawful():
    assert validate_enriched(two_point()) == []


def test_nonzero_identity_weight():
    report = validate_enriched(two_point(1))
    assert "nonpositivity" in laws(report)
    assert any(v.where[:1] == ("x",) for v in report if v.law == "nonpositivity")


def test_loop_lawful():
    A = loop()
    assert validate_enriched(A) == []
    assert A.compose("x", "l", "l") == "l"
    assert A.weight("x", "l") == 2


def test_triangle_inequality():
    A = EnrichedCategory.build(COST, ["x"], {"id": ("x", "x", 0), "l": ("x", "x", 2), "m": ("x", "x", 5)},
                               {"x": "id"}, {("l", "l"): "m", ("l", "m"): "m", ("m", "l"): "m",
                                             ("m", "m"): "m"})
    report = validate_enriched(A)
    assert laws(report) == {"triangle-inequality"}
    assert [v.where for v in report] == [("x", "l", "l")]


def test_cost_scan_agrees():
    rng = random.Random(2)
    for _ in range(40):
        A = random_enriched(rng, COST)
        scan = all(A.weight(x, A.identity(x)) == 0 for x in A.objects) and all(
            A.weight(x, A.compose(x, f, g)) <= cost_add(A.weight(x, f), A.weight(A.cod(x, f), g))
            for x, f, g in A.composable_pairs())
        assert (validate_enriched(A) == []) == scan


def test_identity_cofunctor():
    for A in (loop(), two_point()):
        assert validate_cofunctor(identity_cofunctor(A)) == []


def test_window_cofunctor():
    N = nat_window(cost(2), 4)
    assert validate_enriched(N) == []
    F = EnrichedCofunctor(loop(), N, {"x": "*"}, {("x", n): ("id" if n == "0" else "l") for n in N.out["*"]})
    assert validate_cofunctor(F) == []


def test_broken_lift_names_pair():
    N = nat_window(cost(2), 4)
    lift = {("x", n): "l" for n in N.out["*"]}
    F = EnrichedCofunctor(loop(), N, {"x": "*"}, lift)
    report = validate_cofunctor(F)
    assert report
    assert any(v.where and v.where[0] == "x" for v in report)


def test_compose_identity_and_assoc():
    A = loop()
    F = identity_cofunctor(A)
    assert compose_cofunctors(F, F) == F
    rng = random.Random(4)
    for _ in range(10):
        B = random_enriched(rng, COST, max_objects=2, max_morphisms=2)
        fs = all_cofunctors(B, B)[:3]
        for f in fs:
            assert compose_cofunctors(identity_cofunctor(B), f) == f
            assert compose_cofunctors(f, identity_cofunctor(B)) == f
            for g in fs:
                assert validate_cofunctor(compose_cofunctors(f, g)) == []
                for h in fs:
                    lhs = compose_cofunctors(compose_cofunctors(f, g), h)
                    assert lhs == compose_cofunctors(f, compose_cofunctors(g, h))


def test_compose_mismatch():
    with pytest.raises(NotComposable):
        compose_cofunctors(identity_cofunctor(loop()), identity_cofunctor(two_point()))
