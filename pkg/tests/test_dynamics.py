import random

import pytest

from polycat import (
    COST,
    INF,
    EnrichedCategory,
    MetricSpace,
    cofree_approx,
    cofunctor_to_dds,
    dds_to_cofunctor,
    linear,
    make_dds,
    nat_window,
    naive_iterate,
    run_dds,
    seq_compose_dds,
    validate_cofunctor,
)
from polycat.base import cost
from polycat.errors import BoundViolated, InvalidEnriched, PartialAssignment, SpaceMismatch, WindowTooSmall
from polycat.generate import random_dds_assignment, random_enriched


def loop_space():
    return MetricSpace.build(["x"], {"id": ("x", "x", 0), "l": ("x", "x", 2)}, {"x": "id"}, {("l", "l"): "l"})


def two_point():
    return MetricSpace.build(["x", "y"], {"idx": ("x", "x", 0), "idy": ("y", "y", 0), "f": ("x", "y", 3)},
                             {"x": "idx", "y": "idy"})


def test_make_dds():
    S = loop_space()
    phi = make_dds(S, {"x": "l"}, 2)
    assert phi.bound == 2
    with pytest.raises(BoundViolated) as exc:
        make_dds(S, {"x": "l"}, 1)
    assert "x" in str(exc.value)
    assert make_dds(S, {"x": "id"}, 0).bound == 0
    with pytest.raises(PartialAssignment):
        make_dds(S, {})


def test_metric_space_validated():
    with pytest.raises(InvalidEnriched):
        MetricSpace.build(["x"], {"id": ("x", "x", 1)}, {"x": "id"})


def test_run_loop():
    phi = make_dds(loop_space(), {"x": "l"}, 2)
    run, traces = run_dds(phi, 3)
    assert run.assignment == {"x": "l"}
    assert run.bound == 6
    t = traces["x"]
    assert t.cumulative == 6 and t.composite == "l" and t.composite_cost == 2
    assert [s[1] for s in t.steps] == [2, 2, 2]


def test_run_stationary():
    phi = make_dds(loop_space(), {"x": "id"}, 0)
    for n in range(1, 5):
        run, traces = run_dds(phi, n)
        assert run.assignment == {"x": "id"} and traces["x"].cumulative == 0


def test_run_two_point():
    phi = make_dds(two_point(), {"x": "f", "y": "idy"})
    run, traces = run_dds(phi, 2)
    assert run.assignment == {"x": "f", "y": "idy"}
    assert traces["x"].cumulative == 3 and traces["x"].composite_cost <= 3
    assert run.bound is None and run.bound_value is INF


def test_run_matches_naive_generated():
    rng = random.Random(21)
    for _ in range(30):
        A = random_enriched(rng, COST)
        S = MetricSpace(A)
        asg = random_dds_assignment(rng, A)
        r = max(S.cost(x, f) for x, f in asg.items())
        phi = make_dds(S, asg, r)
        for n in range(1, 5):
            run, _ = run_dds(phi, n)
            naive = naive_iterate(phi, n)
            assert run.assignment == {x: t.composite for x, t in naive.items()}
            for x, f in run.assignment.items():
                assert S.cost(x, f) <= run.bound_value


def test_seq_compose():
    S = loop_space()
    phi = make_dds(S, {"x": "l"}, 2)
    assert seq_compose_dds(phi, phi) == run_dds(phi, 2)[0]
    still = make_dds(S, {"x": "id"}, 3)
    both = seq_compose_dds(phi, still)
    assert both.assignment == phi.assignment and both.bound == 5
    with pytest.raises(SpaceMismatch):
        seq_compose_dds(phi, make_dds(two_point(), {"x": "idx", "y": "idy"}))


def test_cofunctor_correspondence():
    phi = make_dds(loop_space(), {"x": "l"}, 2)
    F = dds_to_cofunctor(phi, 3)
    assert validate_cofunctor(F) == []
    assert [F.lifted("x", str(n)) for n in range(4)] == ["id", "l", "l", "l"]
    assert cofunctor_to_dds(F).assignment == phi.assignment
    assert cofunctor_to_dds(F).bound == 2
    still = dds_to_cofunctor(make_dds(loop_space(), {"x": "id"}, 0), 2)
    assert {still.lifted("x", str(n)) for n in range(3)} == {"id"}


def test_window_too_small():
    with pytest.raises(WindowTooSmall):
        nat_window(cost(1), 0)


def test_window_matches_cofree():
    N = nat_window(cost(2), 4)
    C = cofree_approx(linear(COST, cost(2)), 4).to_enriched()
    (t,) = C.objects
    assert sorted(N.weight("*", n) for n in N.out["*"]) == sorted(C.weight(t, s) for s in C.morphisms_from(t))
    for m in range(5):
        for n in range(5):
            hit = N.compose("*", str(m), str(n))
            assert (hit is None) == (m + n > 4)
            if hit is not None:
                assert C.compose(t, ("*",) * m, ("*",) * n) == ("*",) * int(hit)


def test_unbounded_window_weights_infinite():
    phi = make_dds(loop_space(), {"x": "l"})
    F = dds_to_cofunctor(phi, 2)
    assert F.target.weight("*", "1") is INF
    assert F.target.weight("*", "0") == 0


def test_enriched_space_equality():
    A = EnrichedCategory.build(COST, ["x"], {"id": ("x", "x", 0)}, {"x": "id"})
    assert MetricSpace(A) == MetricSpace(A)
