"""Depth-truncated cofree comonoids.

The cofree comonoid on ``p`` has ``p``-trees as objects and paths from the
root (tuples of directions) as morphisms, weighted by the tensor of the
predicates met along the path.  Only finitely many levels can be built, so
everything here works below a horizon ``depth``.

A tree is ``(i, children)`` with one child per direction of ``i`` in
canonical order, or ``(i,)`` for a node at the horizon.  A position without
directions gives ``(i, ())`` below the horizon.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .enriched import EnrichedCategory
from .errors import DepthExceeded, InvalidInput, Violation
from .labels import format_label
from .polynomial import PolyMorphism, Polynomial


def format_tree(t) -> str:
    """Nested parenthesised form, children ordered by direction label."""
    if len(t) == 1:
        return format_label(t[0])
    if not t[1]:
        return f"{format_label(t[0])}()"
    return f"{format_label(t[0])}(" + " ".join(format_tree(c) for c in t[1]) + ")"


def truncate(t, d):
    if d == 0 or len(t) == 1:
        return (t[0],)
    return (t[0], tuple(truncate(c, d - 1) for c in t[1]))


def is_tree(p: Polynomial, t, d) -> bool:
    """Whether ``t`` is a ``p``-tree of height exactly ``d``."""
    if not isinstance(t, tuple) or not t or not p.has_position(t[0]):
        return False
    if d == 0:
        return len(t) == 1
    if len(t) != 2 or not isinstance(t[1], tuple) or len(t[1]) != len(p.directions(t[0])):
        return False
    return all(is_tree(p, c, d - 1) for c in t[1])


class CofreeApprox:
    """The cofree comonoid on ``p`` below the horizon ``depth``, expanded on demand."""

    def __init__(self, p: Polynomial, depth: int):
        if depth < 0:
            raise InvalidInput("depth must be >= 0")
        self.p = p
        self.depth = depth
        self._trees = lru_cache(maxsize=None)(self._trees_at)

    def _trees_at(self, d):
        p = self.p
        if d == 0:
            return tuple((i,) for i in p.positions)
        below = self._trees(d - 1)
        out = []
        for i in p.positions:
            for kids in itertools.product(below, repeat=len(p.directions(i))):
                out.append((i, kids))
        return tuple(out)

    def trees(self, d=None):
        """All trees of height ``d`` (default: the horizon)."""
        return self._trees(self.depth if d is None else d)

    def count_trees(self, d=None) -> int:
        d = self.depth if d is None else d
        total = len(self.p.positions)
        for _ in range(d):
            total = sum(total ** len(self.p.directions(i)) for i in self.p.positions)
        return total

    def paths(self, t):
        """Every path from the root of ``t``, shortest first, then by direction order."""
        out = [()]
        frontier = [((), t)]
        while frontier:
            nxt = []
            for s, node in frontier:
                if len(node) == 1:
                    continue
                for a, c in zip(self.p.directions(node[0]), node[1]):
                    out.append(s + (a,))
                    nxt.append((s + (a,), c))
            frontier = nxt
        return out

    def subtree(self, t, s):
        node = t
        for a in s:
            if len(node) == 1:
                raise DepthExceeded(f"path {format_label(s)} runs past the horizon")
            dirs = self.p.directions(node[0])
            if a not in dirs:
                raise InvalidInput(f"{format_label(a)} is not a direction at {format_label(node[0])}")
            node = node[1][dirs.index(a)]
        return node

    def weight(self, t, s):
        """Tensor of the predicates along ``s``; the unit for the empty path."""
        C = self.p.base
        acc = C.unit
        node = t
        for a in s:
            acc = C.tensor(acc, self.p.predicate(node[0], a))
            node = self.subtree(node, (a,))
        return acc

    def compose(self, t, s, u):
        """``u ∘ s``: concatenation, defined while it stays below the horizon."""
        if len(s) + len(u) > self.depth:
            raise DepthExceeded(f"composite of lengths {len(s)} and {len(u)} crosses depth {self.depth}")
        self.subtree(t, s + u)
        return s + u

    def extensions(self, node):
        """Horizon trees whose truncation is ``node``."""
        d = self.depth

        def height(n):
            return 0 if len(n) == 1 else 1 + max((height(c) for c in n[1]), default=d)

        h = min(height(node), d)
        return [t for t in self.trees() if truncate(t, h) == node]

    def to_enriched(self) -> EnrichedCategory:
        """The truncated cofree category, as a partial enriched category.

        Needs every path to have a unique codomain among horizon trees (true
        e.g. when ``p`` has a single position); composites past the horizon
        are omitted.
        """
        C = self.p.base
        out, ids, comp = {}, {}, {}
        cod = {}
        for t in self.trees():
            row = {}
            for s in self.paths(t):
                ext = self.extensions(self.subtree(t, s))
                if len(ext) != 1:
                    raise InvalidInput("codomains are not determined below the horizon; "
                                       "use the tree-level interface")
                cod[(t, s)] = ext[0]
                row[s] = (ext[0], self.weight(t, s))
            out[t] = row
            ids[t] = ((), C.identity(C.unit))
        for t in self.trees():
            for s in out[t]:
                c = cod[(t, s)]
                for u in out[c]:
                    if len(s) + len(u) <= self.depth:
                        comp[(t, s, u)] = (s + u, C.identity(self.weight(t, s + u)))
        return EnrichedCategory(C, self.trees(), out, ids, comp, partial=True)


def cofree_approx(p: Polynomial, depth: int) -> CofreeApprox:
    return CofreeApprox(p, depth)


# -- maps into the truncated cofree comonoid -----------------------------------

@dataclass(frozen=True)
class CofreeMap:
    """A horizon-respecting map from a comonoid to a truncated cofree comonoid.

    ``trees[x]`` is the tree over ``x``; ``lifts[(x, s)]`` the morphism of the
    comonoid's category lifted from path ``s``; ``weights[(x, s)]`` its weight
    map.  Dicts are stored as sorted tuples so the map is hashable.
    """

    depth: int
    trees: tuple
    lifts: tuple
    weights: tuple

    @classmethod
    def make(cls, depth, trees: dict, lifts: dict, weights: dict):
        return cls(depth, tuple(sorted(trees.items(), key=repr)), tuple(sorted(lifts.items(), key=repr)),
                   tuple(sorted(weights.items(), key=repr)))

    def tree(self, x):
        return dict(self.trees)[x]

    def lift(self, x, s):
        return dict(self.lifts)[(x, s)]

    def weight_map(self, x, s):
        return dict(self.weights).get((x, s))


def _views(X):
    """(objects, cod, compose, identity, mu, eta, weight) read from a comonoid."""
    from .monoidal import STAR

    p, d, eps = X.carrier, X.comult, X.counit

    def compose(x, f, g):
        return d.on_directions[x].get((f, g))

    def mu(x, f, g):
        return d.on_predicates.get((x, (f, g)))

    return (p.positions, X.cod, compose, lambda x: eps.back(x, STAR),
            mu, lambda x: eps.on_predicates.get((x, STAR)), p.predicate)


def cofree_lift(X, psi: PolyMorphism, depth: int) -> CofreeMap:
    """Unfold the comonoid ``X`` through ``psi: carrier(X) -> p`` down to ``depth``."""
    if X.partial:
        raise InvalidInput("cofree_lift needs a comonoid with all composites")
    p = psi.target
    C = p.base
    objects, cod, compose, identity, mu, eta, _ = _views(X)

    @lru_cache(maxsize=None)
    def unfold(x, d):
        i = psi(x)
        if d == 0:
            return (i,)
        return (i, tuple(unfold(cod(x, psi.back(x, a)), d - 1) for a in p.directions(i)))

    trees, lifts, weights = {}, {}, {}
    for x in objects:
        t = unfold(x, depth)
        trees[x] = t
        lifts[(x, ())] = identity(x)
        weights[(x, ())] = eta(x)
        # walk every path, carrying the composite, its chain map and the end point
        frontier = [((), t, None, x, None)]
        while frontier:
            nxt = []
            for s, node, F, y, chain in frontier:
                if len(node) == 1:
                    continue
                for a, child in zip(p.directions(node[0]), node[1]):
                    f = psi.back(y, a)
                    w = psi.on_predicates.get((y, a))
                    if F is None:
                        G, gchain = f, w
                    else:
                        G = compose(x, F, f)
                        m = mu(x, F, f)
                        gchain = None
                        if m is not None and chain is not None and w is not None:
                            gchain = C.compose(m, C.tensor(chain, w))
                    s2 = s + (a,)
                    lifts[(x, s2)] = G
                    weights[(x, s2)] = gchain
                    nxt.append((s2, child, G, cod(y, f), gchain))
            frontier = nxt
    return CofreeMap.make(depth, trees, lifts, weights)


def cofree_unlift(X, M: CofreeMap, p: Polynomial) -> PolyMorphism:
    """Recover ``psi`` from a map into the truncated cofree comonoid (depth >= 1)."""
    if M.depth < 1:
        raise InvalidInput("depth 0 does not determine the directions")
    trees, lifts, weights = dict(M.trees), dict(M.lifts), dict(M.weights)
    on_pos, on_dir, on_pred = {}, {}, {}
    for x in X.carrier.positions:
        i = trees[x][0]
        on_pos[x] = i
        on_dir[x] = {a: lifts[(x, (a,))] for a in p.directions(i)}
        for a in p.directions(i):
            if weights.get((x, (a,))) is not None:
                on_pred[(x, a)] = weights[(x, (a,))]
    return PolyMorphism(X.carrier, p, on_pos, on_dir, on_pred, fill=False)


def validate_cofree_map(X, M: CofreeMap, p: Polynomial) -> list[Violation]:
    """Laws of a map into the truncated cofree comonoid, checked below the horizon.

    Identities lift to identities, codomains agree to the remaining depth,
    composites within the horizon are preserved, and the weight maps are
    well typed and compatible with ``η`` and ``μ``.
    """
    C = p.base
    approx = CofreeApprox(p, M.depth)
    objects, cod, compose, identity, mu, eta, weight = _views(X)
    trees, lifts, weights = dict(M.trees), dict(M.lifts), dict(M.weights)
    report = []
    for x in objects:
        if x not in trees or not is_tree(p, trees[x], M.depth):
            report.append(Violation("tree-typing", (x,)))
    if report:
        return report
    for x in objects:
        t = trees[x]
        paths = approx.paths(t)
        for s in paths:
            if (x, s) not in lifts:
                report.append(Violation("lift-missing", (x, s)))
                continue
            f = lifts[(x, s)]
            if f not in X.carrier.directions(x):
                report.append(Violation("lift-typing", (x, s)))
                continue
            y = cod(x, f)
            rest = M.depth - len(s)
            if truncate(trees[y], rest) != approx.subtree(t, s):
                report.append(Violation("codomain-coherence", (x, s)))
            w = weights.get((x, s))
            want = (weight(x, f), approx.weight(t, s))
            if w is None or not C.is_morphism(w) or (w.dom, w.cod) != want:
                report.append(Violation("lift-weight", (x, s)))
        if report:
            continue
        if lifts[(x, ())] != identity(x):
            report.append(Violation("identity-preservation", (x,)))
        elif eta(x) is not None and weights[(x, ())] != eta(x):
            report.append(Violation("identity-preservation-diagram", (x,)))
        for s in paths:
            f = lifts[(x, s)]
            y = cod(x, f)
            for u in approx.paths(trees[y]):
                if len(s) + len(u) > M.depth:
                    continue
                g = lifts[(y, u)]
                gf = compose(x, f, g)
                if lifts.get((x, s + u)) != gf:
                    report.append(Violation("composite-preservation", (x, s, u)))
                    continue
                m = mu(x, f, g)
                if m is None:
                    continue
                lhs = C.compose(m, C.tensor(weights[(x, s)], weights[(y, u)]))
                if lhs != weights[(x, s + u)]:
                    report.append(Violation("composite-preservation-diagram", (x, s, u)))
    return report
