import itertools

import pytest

from polycat import (
    COST,
    TRIVIAL,
    EnrichedCategory,
    Polynomial,
    PolyMorphism,
    cofree_approx,
    cofree_lift,
    cofree_unlift,
    enriched_to_comonoid,
    enumerate_hom,
    linear,
    unit_polynomial,
    validate_cofree_map,
)
from polycat.base import cost
from polycat.cofree import is_tree, truncate
from polycat.errors import DepthExceeded


def loop():
    return EnrichedCategory.build(COST, ["x"], {"id": ("x", "x", 0), "l": ("x", "x", 2)},
                                  {"x": "id"}, {("l", "l"): "l"})


def test_unit_polynomial():
    for depth in range(4):
        A = cofree_approx(unit_polynomial(COST), depth).to_enriched()
        (t,) = A.objects
        assert sorted(len(s) for s in A.morphisms_from(t)) == list(range(depth + 1))
        assert all(A.weight(t, s) == 0 for s in A.morphisms_from(t))


def test_linear_weights():
    A = cofree_approx(linear(COST, cost(3)), 4).to_enriched()
    (t,) = A.objects
    assert {len(s): A.weight(t, s) for s in A.morphisms_from(t)} == {n: 3 * n for n in range(5)}


def test_horizon():
    approx = cofree_approx(linear(COST, cost(1)), 2)
    (t,) = approx.trees()
    assert approx.compose(t, ("*",), ("*",)) == ("*", "*")
    with pytest.raises(DepthExceeded):
        approx.compose(t, ("*",), ("*", "*"))


def test_tree_counts():
    p = Polynomial.from_counts([2, 0])
    for d in range(3):
        approx = cofree_approx(p, d)
        assert len(approx.trees()) == approx.count_trees()
        assert all(is_tree(p, t, d) for t in approx.trees())


def test_weights_multiplicative():
    p = Polynomial(COST, {"i": {"a": 1, "b": 2}, "j": {}})
    approx = cofree_approx(p, 3)
    for t in approx.trees():
        ps = approx.paths(t)
        for s, u in itertools.product(ps, ps):
            if len(s) + len(u) <= 3 and s + u in ps:
                assert approx.weight(t, s + u) == approx.weight(t, s) + approx.weight(approx.subtree(t, s), u)


def test_truncate():
    p = Polynomial.from_counts([1])
    (t,) = cofree_approx(p, 3).trees()
    assert truncate(t, 1) == ("i0", (("i0",),))


def test_loop_lift():
    X = enriched_to_comonoid(loop())
    psi = PolyMorphism(X.carrier, linear(COST, cost(2)), {"x": "*"}, {"x": {"*": "l"}})
    M = cofree_lift(X, psi, 3)
    assert validate_cofree_map(X, M, psi.target) == []
    approx = cofree_approx(psi.target, 3)
    t = M.tree("x")
    for n in range(4):
        s = ("*",) * n
        assert approx.weight(t, s) == 2 * n
        assert M.lift("x", s) == ("id" if n == 0 else "l")
    assert cofree_unlift(X, M, psi.target) == psi


def test_lift_bijective_trivial():
    A = EnrichedCategory.build(TRIVIAL, ["x", "y"],
                               {"ix": ("x", "x", "y"), "iy": ("y", "y", "y"), "f": ("x", "y", "y")},
                               {"x": "ix", "y": "iy"})
    X = enriched_to_comonoid(A)
    p = Polynomial.from_counts([1, 0])
    maps = set()
    for psi in enumerate_hom(X.carrier, p):
        M = cofree_lift(X, psi, 2)
        assert validate_cofree_map(X, M, p) == []
        assert cofree_unlift(X, M, p) == psi
        maps.add(M)
    assert len(maps) == len(enumerate_hom(X.carrier, p))
