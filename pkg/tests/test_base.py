from fractions import Fraction

import pytest

from polycat import ARROW, COST, INF, TRIVIAL, FinitePresentedBase, compose_base, cost, hom_base, tensor_base, validate_base
from polycat.base import BaseMorphism, cost_add, cost_scale
from polycat.errors import ObjectNotInBase, laws


def test_arrow_homs():
    assert len(hom_base(ARROW, "F", "T")) == 1
    assert hom_base(ARROW, "T", "F") == ()
    assert len(hom_base(ARROW, "T", "T")) == 1


def test_cost_homs():
    assert hom_base(COST, cost(3), cost(2)) == ()
    assert len(hom_base(COST, cost(2), INF)) == 1
    assert hom_base(COST, INF, cost(5)) == ()


def test_compose():
    i = TRIVIAL.identity("y")
    assert compose_base(TRIVIAL, i, i) == i
    f = hom_base(COST, cost(1), cost(2))[0]
    g = hom_base(COST, cost(2), cost(5))[0]
    assert compose_base(COST, f, g) == BaseMorphism(cost(1), cost(5))
    up = hom_base(ARROW, "F", "T")[0]
    assert compose_base(ARROW, ARROW.identity("F"), up) == up


def test_tensor():
    assert tensor_base(COST, cost(2), cost(3)) == 5
    assert tensor_base(COST, cost(2), INF) is INF
    assert tensor_base(ARROW, "T", "F") == "F"


def test_not_in_base():
    with pytest.raises(ObjectNotInBase):
        hom_base(ARROW, "maybe", "T")
    with pytest.raises(ObjectNotInBase):
        cost(-1)
    with pytest.raises(ObjectNotInBase):
        cost(0.5)


def test_cost_arithmetic():
    assert cost("3/2") == Fraction(3, 2)
    assert cost("inf") is INF
    assert cost_add(INF, cost(1)) is INF
    assert cost_scale(0, INF) == 0
    assert cost_scale(3, Fraction(1, 2)) == Fraction(3, 2)
    assert INF > cost(10**9) and not INF < cost(1)


def test_builtin_bases_lawful():
    assert validate_base(TRIVIAL) == []
    assert validate_base(ARROW) == []
    assert validate_base(COST) == []
    assert validate_base(COST, sample=[cost(0), cost("1/3"), cost(7), INF]) == []


def _z3(table_aa="b"):
    mors = {m: ("o", "o") for m in "eab"}
    z3 = {("e", m): m for m in "eab"} | {(m, "e"): m for m in "eab"}
    z3 |= {("a", "a"): "b", ("a", "b"): "e", ("b", "a"): "e", ("b", "b"): "a"}
    comp = dict(z3)
    comp[("a", "a")] = table_aa
    return FinitePresentedBase(["o"], mors, {"o": "e"}, comp, {("o", "o"): "o"}, z3, "o", name="Z3",
                               symmetric=True)


def test_finite_base():
    C = _z3()
    assert validate_base(C) == []
    a, b = C.morphism("a"), C.morphism("b")
    assert compose_base(C, a, a) == b
    assert tensor_base(C, a, b).witness == "e"


def test_finite_base_broken_associativity_named():
    report = validate_base(_z3("a"))
    assert "associativity" in laws(report)
    triples = [v.where for v in report if v.law == "associativity"]
    assert ("a", "a", "b") in triples


def test_finite_base_missing_entry():
    C = _z3()
    del C.composition[("a", "b")]
    assert "composition-missing" in laws(validate_base(C))
