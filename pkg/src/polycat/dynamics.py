"""Cost-bounded discrete dynamical systems on generalised Lawvere metric spaces.

A metric space here is a category enriched over the cost base: every path
has a cost, identities cost 0 and composites obey the triangle inequality.
A dynamical system picks one outgoing path per point.  As a polynomial
morphism it goes from the space's carrier to the one-direction polynomial
with predicate ``r`` (its bound, ``inf`` when unbounded).

Running ``n`` steps is the composite
``X --δⁿ⁻¹--> X◁…◁X --φ◁…◁φ--> r◁…◁r ≅ n·r``; :func:`naive_iterate`
follows the paths step by step and is used as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .base import COST, INF, cost, cost_add, cost_scale, format_cost
from .comonoid import Comonoid, enriched_to_comonoid, nfold_comult
from .enriched import EnrichedCategory, EnrichedCofunctor, validate_enriched
from .errors import (
    BoundViolated,
    InvalidEnriched,
    InvalidInput,
    PartialAssignment,
    SpaceMismatch,
    WindowTooSmall,
)
from .labels import format_label
from .monoidal import STAR, comp_mor, comp_mor_power, comp_obj, comp_power
from .polynomial import PolyMorphism, compose_loose, linear


class MetricSpace:
    """A cost-enriched category with point/path vocabulary."""

    def __init__(self, category: EnrichedCategory, validate=True):
        if category.base != COST:
            raise InvalidInput(f"a metric space lives over the cost base, not {category.base.name}")
        if validate:
            report = validate_enriched(category)
            if report:
                raise InvalidEnriched("; ".join(str(v) for v in report))
        self.category = category

    @classmethod
    def build(cls, points, paths, identities, composition=None):
        """``paths[label] = (start, end, cost)``; other arguments as in ``EnrichedCategory.build``."""
        return cls(EnrichedCategory.build(COST, points, paths, identities, composition))

    @property
    def points(self):
        return self.category.objects

    def paths_from(self, x):
        return self.category.morphisms_from(x)

    def cost(self, x, f):
        return self.category.weight(x, f)

    def end(self, x, f):
        return self.category.cod(x, f)

    def then(self, x, f, g):
        """The composite path: ``f`` out of ``x`` followed by ``g``."""
        h = self.category.compose(x, f, g)
        if h is None:
            raise InvalidInput(f"no composite of {format_label(f)} then {format_label(g)} at {format_label(x)}")
        return h

    def identity(self, x):
        return self.category.identity(x)

    @cached_property
    def comonoid(self) -> Comonoid:
        return enriched_to_comonoid(self.category, validate=False)

    def __eq__(self, other):
        return isinstance(other, MetricSpace) and self.category == other.category

    def __hash__(self):
        return hash(self.category)

    def __repr__(self):
        return f"<MetricSpace with {len(self.points)} points>"


class DynSystem:
    """One chosen path per point, optionally bounded by a cost ``r``."""

    def __init__(self, space: MetricSpace, assignment, bound=None):
        self.space = space
        self.assignment = {x: assignment[x] for x in space.points if x in assignment}
        b = None if bound is None else cost(bound)
        self.bound = None if b is INF else b

    @property
    def bound_value(self):
        return INF if self.bound is None else self.bound

    def step(self, x):
        f = self.assignment[x]
        return f, self.space.end(x, f)

    @cached_property
    def morphism(self) -> PolyMorphism:
        """The system as ``carrier -> linear(bound)``."""
        X = self.space.comonoid.carrier
        return PolyMorphism(X, linear(COST, self.bound_value), {x: STAR for x in X.positions},
                            {x: {STAR: f} for x, f in self.assignment.items()})

    def __eq__(self, other):
        return (isinstance(other, DynSystem) and self.space == other.space
                and self.assignment == other.assignment and self.bound == other.bound)

    def __hash__(self):
        return hash((self.space, frozenset(self.assignment.items()), self.bound))

    def __repr__(self):
        b = "" if self.bound is None else f", bound {format_cost(self.bound)}"
        return f"<DynSystem on {len(self.assignment)} points{b}>"


def make_dds(space: MetricSpace, assignment, bound=None) -> DynSystem:
    """Validated system; raises PartialAssignment or BoundViolated."""
    for x in space.points:
        if x not in assignment:
            raise PartialAssignment(f"no path chosen at {format_label(x)}")
        if assignment[x] not in space.paths_from(x):
            raise PartialAssignment(f"{format_label(assignment[x])} is not a path out of {format_label(x)}")
    extra = set(assignment) - set(space.points)
    if extra:
        raise PartialAssignment(f"assignment names unknown points: {', '.join(map(format_label, extra))}")
    phi = DynSystem(space, assignment, bound)
    for x in space.points:
        c = space.cost(x, assignment[x])
        if not c <= phi.bound_value:
            raise BoundViolated(x, c, phi.bound_value)
    return phi


def check_bound(phi: DynSystem, bound) -> list:
    """Points whose chosen path costs more than ``bound``."""
    r = cost(bound)
    return [x for x, f in phi.assignment.items() if not phi.space.cost(x, f) <= r]


# -- running ---------------------------------------------------------------

@dataclass(frozen=True)
class Trace:
    """One start point run for ``n`` steps.

    ``steps`` holds ``(path, cost, end point)``; ``cumulative`` is the sum of
    step costs and ``composite``/``composite_cost`` the single composed path.
    """

    start: object
    steps: tuple
    cumulative: object
    composite: object
    composite_cost: object


def naive_iterate(phi: DynSystem, n: int) -> dict:
    """Follow the system step by step from every point, composing as we go."""
    S = phi.space
    out = {}
    for x in S.points:
        y = x
        steps = []
        total = cost(0)
        comp = S.identity(x)
        for _ in range(n):
            f, z = phi.step(y)
            c = S.cost(y, f)
            steps.append((f, c, z))
            total = cost_add(total, c)
            comp = S.then(x, comp, f)
            y = z
        out[x] = Trace(x, tuple(steps), total, comp, S.cost(x, comp))
    return out


def _collapse(r_cost, n, positions) -> PolyMorphism:
    """``r◁…◁r -> n·r`` (n left-nested factors) on the given positions."""
    r = linear(COST, r_cost)
    src = comp_power(r, n, positions)
    tgt = linear(COST, cost_scale(n, r_cost))

    def nested(k):
        d = STAR
        for _ in range(k - 1):
            d = (d, STAR)
        return d

    return PolyMorphism(src, tgt, {i: STAR for i in src.positions},
                        {i: {STAR: nested(n)} for i in src.positions})


def run_dds(phi: DynSystem, n: int):
    """The ``n``-step system, computed through ``δⁿ⁻¹`` and ``φ◁…◁φ``, plus naive traces."""
    if n < 1:
        raise InvalidInput("n must be >= 1")
    X = phi.space.comonoid
    d = nfold_comult(X, n - 1)
    run = compose_loose(d, comp_mor_power(phi.morphism, n, d.image()))
    run = compose_loose(run, _collapse(phi.bound_value, n, run.image()))
    assignment = {x: run.back(x, STAR) for x in X.carrier.positions}
    bound = None if phi.bound is None else cost_scale(n, phi.bound)
    return DynSystem(phi.space, assignment, bound), naive_iterate(phi, n)


def seq_compose_dds(phi: DynSystem, psi: DynSystem) -> DynSystem:
    """Run ``phi`` then ``psi``: ``X --δ--> X◁X --φ◁ψ--> ∞◁∞ ≅ ∞``."""
    if phi.space != psi.space:
        raise SpaceMismatch("systems live on different spaces")
    X = phi.space.comonoid
    d = X.comult
    run = compose_loose(d, comp_mor(phi.morphism, psi.morphism, d.image()))
    r, s = phi.bound_value, psi.bound_value
    src_positions = run.image()
    pr = comp_obj(linear(COST, r), linear(COST, s), src_positions)
    total = cost_add(r, s)
    collapse = PolyMorphism(pr, linear(COST, total), {i: STAR for i in src_positions},
                            {i: {STAR: (STAR, STAR)} for i in src_positions})
    run = compose_loose(run, collapse)
    assignment = {x: run.back(x, STAR) for x in X.carrier.positions}
    bound = None if total is INF else total
    return DynSystem(phi.space, assignment, bound)


# -- systems as cofunctors -------------------------------------------------

def nat_window(r, N: int) -> EnrichedCategory:
    """One object ``*``, morphisms ``0..N`` with ``|n| = n·r``, composition by addition inside the window."""
    if N < 1:
        raise WindowTooSmall(f"window must contain 1, got N={N}")
    r = cost(r)
    mors = {str(n): (STAR, STAR, cost_scale(n, r)) for n in range(N + 1)}
    comp = {(str(m), str(n)): str(m + n) for m in range(N + 1) for n in range(N + 1) if m + n <= N}
    return EnrichedCategory.build(COST, [STAR], mors, {STAR: "0"}, comp, partial=True)


def dds_to_cofunctor(phi: DynSystem, N: int) -> EnrichedCofunctor:
    """``Φ♯_x(n)`` is the ``n``-step composite path from ``x`` (``Φ♯_x(0) = id_x``)."""
    target = nat_window(phi.bound_value, N)
    traces = {n: naive_iterate(phi, n) for n in range(N + 1)}
    lift = {(x, str(n)): traces[n][x].composite for x in phi.space.points for n in range(N + 1)}
    return EnrichedCofunctor(phi.space.category, target, {x: STAR for x in phi.space.points}, lift)


def cofunctor_to_dds(F: EnrichedCofunctor) -> DynSystem:
    """Read off ``φ♯_x = Φ♯_x(1)``; the bound is the weight of ``1``."""
    space = MetricSpace(F.source, validate=False)
    B = F.target
    if len(B.objects) != 1 or "1" not in B.out[B.objects[0]]:
        raise InvalidInput("target must be a one-object window containing 1")
    assignment = {x: F.lifted(x, "1") for x in F.source.objects}
    return DynSystem(space, assignment, B.weight(B.objects[0], "1"))
