import random

import pytest

from polycat import (
    COST,
    TRIVIAL,
    Comonoid,
    ComonoidMorphism,
    EnrichedCategory,
    PolyMorphism,
    cofunctor_to_comonoid_mor,
    comonoid_mor_to_cofunctor,
    comonoid_to_enriched,
    dds_to_cofunctor,
    enriched_to_comonoid,
    identity_cofunctor,
    load,
    make_dds,
    MetricSpace,
    nfold_comult,
    trivial_comonoid,
    unit_polynomial,
    validate_comonoid,
    validate_comonoid_morphism,
    validate_enriched,
)
from polycat.comonoid import identity_comonoid_mor
from polycat.errors import InvalidEnriched, laws
from polycat.generate import all_cofunctors, random_enriched

from pathlib import Path

STRUCTURES = Path(__file__).resolve().parent.parent / "structures"


def loop():
    return EnrichedCategory.build(COST, ["x"], {"id": ("x", "x", 0), "l": ("x", "x", 2)},
                                  {"x": "id"}, {("l", "l"): "l"})


def two_point():
    return EnrichedCategory.build(COST, ["x", "y"],
                                  {"idx": ("x", "x", 0), "idy": ("y", "y", 0), "f": ("x", "y", 3)},
                                  {"x": "idx", "y": "idy"})


def test_trivial_comonoid():
    X = trivial_comonoid(TRIVIAL)
    assert validate_comonoid(X) == []
    A = comonoid_to_enriched(X)
    assert len(A.objects) == 1 and len(A.arrows()) == 1


def test_one_object_identity_only():
    A = EnrichedCategory.build(TRIVIAL, ["*"], {"*": ("*", "*", "y")}, {"*": "*"})
    X = enriched_to_comonoid(A)
    assert X.carrier == unit_polynomial(TRIVIAL)
    assert validate_comonoid(X) == []


def test_loop_comonoid():
    X = enriched_to_comonoid(loop())
    assert validate_comonoid(X) == []
    assert X.carrier.directions("x") == ("id", "l")
    assert [X.carrier.predicate("x", a) for a in ("id", "l")] == [0, 2]
    d = X.comult.on_directions["x"]
    assert d == {("id", "id"): "id", ("id", "l"): "l", ("l", "id"): "l", ("l", "l"): "l"}


def test_two_point_comonoid():
    X = enriched_to_comonoid(two_point())
    assert validate_comonoid(X) == []
    assert X.carrier.direction_counts() == [1, 2]
    assert X.cod("x", "f") == "y"


def test_unlawful_rejected():
    A = EnrichedCategory.build(COST, ["x"], {"id": ("x", "x", 1)}, {"x": "id"})
    with pytest.raises(InvalidEnriched):
        enriched_to_comonoid(A)
    assert validate_comonoid(enriched_to_comonoid(A, validate=False))


def test_non_associative_composition():
    # unital but (aa)b = bb = a while a(ab) = ab = b
    A = EnrichedCategory.build(TRIVIAL, ["x"], {m: ("x", "x", "y") for m in "eab"}, {"x": "e"},
                               {("a", "a"): "b", ("a", "b"): "b", ("b", "a"): "a", ("b", "b"): "a"})
    assert "associativity" in laws(validate_enriched(A))
    X = enriched_to_comonoid(A, validate=False)
    assert laws(validate_comonoid(X)) == {"coassociativity"}


def test_opposite_order_still_lawful():
    # reading composites the other way round gives the opposite monoid, which is lawful
    A = EnrichedCategory.build(TRIVIAL, ["x"], {m: ("x", "x", "y") for m in "eab"}, {"x": "e"},
                               {("a", "a"): "a", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"})
    X = enriched_to_comonoid(A)
    d = X.comult
    swapped = {(f, g): d.on_directions["x"][(g, f)] for f, g in d.on_directions["x"]}
    op = PolyMorphism(d.source, d.target, d.on_positions, {"x": swapped})
    assert validate_comonoid(Comonoid(X.carrier, X.counit, op)) == []


def test_round_trips():
    for A in (loop(), two_point()):
        assert comonoid_to_enriched(enriched_to_comonoid(A)) == A
    text = (STRUCTURES / "discrete.txt").read_text()
    D = load(text)["D"]
    assert enriched_to_comonoid(comonoid_to_enriched(D)).comult == D.comult


def test_generated_round_trips():
    rng = random.Random(6)
    for _ in range(20):
        A = random_enriched(rng, COST, max_objects=2, max_morphisms=2)
        X = enriched_to_comonoid(A)
        assert comonoid_to_enriched(X) == A
        for F in all_cofunctors(A, A)[:4]:
            m = cofunctor_to_comonoid_mor(F, X, X)
            assert validate_comonoid_morphism(m) == []
            assert comonoid_mor_to_cofunctor(m, A, A) == F


def test_nfold_base_cases():
    X = enriched_to_comonoid(loop())
    assert nfold_comult(X, 1) == X.comult
    assert nfold_comult(X, 0).on_positions == {"x": "x"}


def test_nfold_two():
    X = enriched_to_comonoid(two_point())
    d2 = nfold_comult(X, 2)
    for x in X.carrier.positions:
        (x0, jbar), kbar = d2(x)
        assert x0 == x
        for f, y in zip(X.carrier.directions(x), jbar):
            assert y == X.cod(x, f)


def test_nfold_bracketings_agree():
    rng = random.Random(12)
    for _ in range(10):
        X = enriched_to_comonoid(random_enriched(rng, COST, max_objects=2, max_morphisms=2))
        for n in range(1, 5):
            assert nfold_comult(X, n, "left") == nfold_comult(X, n, "right")


def test_identity_morphism():
    X = enriched_to_comonoid(loop())
    assert validate_comonoid_morphism(identity_comonoid_mor(X)) == []
    m = cofunctor_to_comonoid_mor(identity_cofunctor(loop()), X, X)
    assert m.map == identity_comonoid_mor(X).map


def test_window_cofunctor_gives_comonoid_morphism():
    S = MetricSpace(loop())
    F = dds_to_cofunctor(make_dds(S, {"x": "l"}, 2), 4)
    m = cofunctor_to_comonoid_mor(F)
    assert validate_comonoid_morphism(m) == []


def test_perturbed_predicates():
    X = enriched_to_comonoid(two_point())
    i = identity_comonoid_mor(X).map
    preds = dict(i.on_predicates)
    preds[("x", "f")] = COST.hom(0, 3)[0]  # weight map 0 -> 3 where |f| = 3 is required as domain
    bad = PolyMorphism(i.source, i.target, i.on_positions, i.on_directions, preds, fill=False)
    assert validate_comonoid_morphism(ComonoidMorphism(X, X, bad))
