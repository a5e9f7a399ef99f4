"""Polynomials in a base category and the morphisms between them.

A polynomial ``Σ_{i∈I} Π_{a∈A_i} c_{i,a}`` is stored as finite tables: its
positions, the directions at each position, and a predicate (an object of the
base) at each direction.  A morphism acts forwards on positions, backwards on
directions and forwards on predicates.
"""

from __future__ import annotations

import itertools
from math import prod
from typing import Iterable, Mapping

from .base import BaseMorphism, MonoidalBase
from .errors import BaseMismatch, InvalidInput, NotComposable, Violation
from .labels import format_label, is_label, label_key, sort_labels


class Polynomial:
    """An object ``Σ_i Π_{a∈A_i} c_{i,a}`` of ΣΠC.

    ``data`` maps each position to a mapping from its directions to their
    predicates.  Labels are strings or tuples of labels; they are kept in
    canonical (natural sort) order, so two polynomials are equal exactly when
    they have the same base, labels and predicates.
    """

    __slots__ = ("base", "positions", "_dirs", "_preds", "_hash")

    def __init__(self, base: MonoidalBase, data: Mapping | Iterable):
        self.base = base
        items = data.items() if isinstance(data, Mapping) else data
        dirs = {}
        preds = {}
        for i, row in items:
            if not is_label(i):
                raise InvalidInput(f"position label {i!r} must be a string or tuple")
            if i in dirs:
                raise InvalidInput(f"duplicate position {format_label(i)}")
            row_items = row.items() if isinstance(row, Mapping) else row
            ds = []
            for a, c in row_items:
                if not is_label(a):
                    raise InvalidInput(f"direction label {a!r} must be a string or tuple")
                if (i, a) in preds:
                    raise InvalidInput(f"duplicate direction {format_label(a)} at {format_label(i)}")
                preds[(i, a)] = base.coerce(c)
                ds.append(a)
            dirs[i] = tuple(sort_labels(ds))
        self.positions = tuple(sort_labels(dirs))
        self._dirs = dirs
        self._preds = preds
        self._hash = None

    # -- access ----------------------------------------------------------
    def directions(self, i) -> tuple:
        return self._dirs[i]

    def predicate(self, i, a):
        return self._preds[(i, a)]

    def has_position(self, i) -> bool:
        return i in self._dirs

    def rows(self):
        """Yield ``(i, ((a, c_{i,a}), ...))`` in canonical order."""
        for i in self.positions:
            yield i, tuple((a, self._preds[(i, a)]) for a in self._dirs[i])

    def direction_counts(self) -> list[int]:
        return sorted(len(self._dirs[i]) for i in self.positions)

    def restrict(self, positions) -> "Polynomial":
        """The summand on the given positions."""
        positions = list(dict.fromkeys(positions))
        for i in positions:
            if i not in self._dirs:
                raise InvalidInput(f"{format_label(i)} is not a position")
        return Polynomial(self.base, [(i, [(a, self._preds[(i, a)]) for a in self._dirs[i]])
                                      for i in positions])

    def __len__(self):
        return len(self.positions)

    def _key(self):
        return tuple(self.rows())

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.base == other.base and self.positions == other.positions and \
            self._dirs == other._dirs and self._preds == other._preds

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.base.name}, {format_polynomial(self)})"

    # -- convenience constructors -----------------------------------------
    @classmethod
    def from_counts(cls, counts, base: MonoidalBase | None = None, predicate=None):
        """``y^{n_0} + y^{n_1} + ...`` with positions ``i0, i1, ...``.

        Every predicate is ``predicate`` (default: the base unit).
        """
        from .base import TRIVIAL

        base = base or TRIVIAL
        c = base.unit if predicate is None else predicate
        return cls(base, {f"i{k}": {f"a{m}": c for m in range(n)} for k, n in enumerate(counts)})


def representable(base: MonoidalBase, predicates: Mapping, position="*") -> Polynomial:
    """A one-position polynomial ``Π_a c_a``."""
    return Polynomial(base, {position: dict(predicates)})


def linear(base: MonoidalBase, obj, position="*", direction="*") -> Polynomial:
    """One position, one direction with predicate ``obj``: the image of ``obj`` under C ⊆ ΣΠC."""
    return Polynomial(base, {position: {direction: obj}})


def unit_polynomial(base: MonoidalBase) -> Polynomial:
    """The monoidal unit ``e`` of both ⊗ and ◁."""
    return linear(base, base.unit)


def zero(base: MonoidalBase) -> Polynomial:
    return Polynomial(base, {})


def constant(base: MonoidalBase, positions=("*",)) -> Polynomial:
    return Polynomial(base, {i: {} for i in positions})


def format_polynomial(p: Polynomial) -> str:
    """Canonical ``Σ{i: Π{a: c, ...}, ...}`` rendering."""
    fo = p.base.format_object
    rows = [f"{format_label(i)}: Π{{" + ", ".join(f"{format_label(a)}: {fo(c)}" for a, c in row) + "}"
            for i, row in p.rows()]
    return "Σ{" + ", ".join(rows) + "}"


def _same_base(p: Polynomial, q: Polynomial):
    if p.base != q.base:
        raise BaseMismatch(f"bases differ: {p.base.name} vs {q.base.name}")


class PolyMorphism:
    """A morphism of polynomials given by explicit tables.

    ``on_positions[i] = j``; ``on_directions[i][b] = a`` for each direction
    ``b`` at ``j``; ``on_predicates[(i, b)]`` is a base morphism
    ``c_{i,a} -> d_{j,b}``.  Missing on-predicate entries are filled with the
    unique base morphism when the hom-set is a singleton (always the case in
    thin bases), and otherwise left for :func:`validate_poly_morphism` to
    report.
    """

    __slots__ = ("source", "target", "on_positions", "on_directions", "on_predicates", "_hash")

    def __init__(self, source: Polynomial, target: Polynomial, on_positions: Mapping,
                 on_directions: Mapping, on_predicates: Mapping | None = None, *, fill=True):
        self.source = source
        self.target = target
        self.on_positions = dict(on_positions)
        self.on_directions = {i: dict(m) for i, m in on_directions.items()}
        self.on_predicates = dict(on_predicates or {})
        for i in self.on_positions:
            self.on_directions.setdefault(i, {})
        self._hash = None
        if fill:
            self._fill_predicates()

    def _fill_predicates(self):
        C = self.source.base
        src, tgt = self.source, self.target
        for i, j in self.on_positions.items():
            if not src.has_position(i) or not tgt.has_position(j):
                continue
            back = self.on_directions.get(i, {})
            for b in tgt.directions(j):
                if (i, b) in self.on_predicates or b not in back:
                    continue
                a = back[b]
                if (i, a) not in src._preds:
                    continue
                m = C.unique_morphism(src.predicate(i, a), tgt.predicate(j, b))
                if m is not None:
                    self.on_predicates[(i, b)] = m

    def __call__(self, i):
        return self.on_positions[i]

    def back(self, i, b):
        return self.on_directions[i][b]

    def __eq__(self, other):
        if not isinstance(other, PolyMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.on_positions == other.on_positions
                and self.on_directions == other.on_directions
                and self.on_predicates == other.on_predicates)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.source, self.target, frozenset(self.on_positions.items()),
                               frozenset((i, frozenset(m.items())) for i, m in self.on_directions.items()),
                               frozenset(self.on_predicates.items())))
        return self._hash

    def __repr__(self):
        return f"PolyMorphism({format_polynomial(self.source)} -> {format_polynomial(self.target)})"

    def restrict(self, positions) -> "PolyMorphism":
        """Restriction to a summand of the source; the target shrinks to the image."""
        positions = list(dict.fromkeys(positions))
        keep = set(positions)
        src = self.source.restrict(positions)
        image = [self.on_positions[i] for i in positions]
        return PolyMorphism(src, self.target.restrict(image),
                            {i: self.on_positions[i] for i in positions},
                            {i: self.on_directions.get(i, {}) for i in positions},
                            {k: v for k, v in self.on_predicates.items() if k[0] in keep},
                            fill=False)

    def image(self):
        return list(dict.fromkeys(self.on_positions[i] for i in self.source.positions))


def validate_poly_morphism(phi: PolyMorphism, *, allow_partial=False) -> list[Violation]:
    """Well-typedness of the three layers of data of ``phi``.

    With ``allow_partial`` missing on-direction entries (and hence missing
    on-predicate entries) are tolerated; everything present must still be
    well typed.
    """
    src, tgt = phi.source, phi.target
    _same_base(src, tgt)
    C = src.base
    report = []
    for i in phi.on_positions:
        if not src.has_position(i):
            report.append(Violation("positions-extra", (i,)))
    for i in src.positions:
        if i not in phi.on_positions:
            report.append(Violation("positions-total", (i,)))
            continue
        j = phi.on_positions[i]
        if not tgt.has_position(j):
            report.append(Violation("positions-codomain", (i, j)))
            continue
        back = phi.on_directions.get(i, {})
        for b in back:
            if b not in tgt._dirs[j]:
                report.append(Violation("directions-extra", (i, b)))
        for b in tgt.directions(j):
            if b not in back:
                if not allow_partial:
                    report.append(Violation("directions-total", (i, b)))
                continue
            a = back[b]
            if (i, a) not in src._preds:
                report.append(Violation("directions-codomain", (i, b, a)))
                continue
            c, d = src.predicate(i, a), tgt.predicate(j, b)
            m = phi.on_predicates.get((i, b))
            if m is None:
                report.append(Violation("predicate-missing", (i, b),
                                        f"no base morphism {C.format_object(c)} -> {C.format_object(d)}"))
            elif not isinstance(m, BaseMorphism) or (m.dom, m.cod) != (c, d) or not C.is_morphism(m):
                report.append(Violation("predicate-typing", (i, b),
                                        f"{m} is not a morphism {C.format_object(c)} -> {C.format_object(d)}"))
    return report


def identity_poly(p: Polynomial) -> PolyMorphism:
    C = p.base
    return PolyMorphism(p, p, {i: i for i in p.positions},
                        {i: {a: a for a in p.directions(i)} for i in p.positions},
                        {(i, a): C.identity(p.predicate(i, a)) for i in p.positions
                         for a in p.directions(i)}, fill=False)


def _compose_tables(phi: PolyMorphism, psi: PolyMorphism, target: Polynomial) -> PolyMorphism:
    C = phi.source.base
    on_pos, on_dir, on_pred = {}, {}, {}
    for i in phi.source.positions:
        j = phi.on_positions[i]
        k = psi.on_positions[j]
        on_pos[i] = k
        back_phi = phi.on_directions.get(i, {})
        back_psi = psi.on_directions.get(j, {})
        row = {}
        for c in target.directions(k):
            if c not in back_psi:
                continue
            b = back_psi[c]
            if b not in back_phi:
                continue
            row[c] = back_phi[b]
            f = phi.on_predicates.get((i, b))
            g = psi.on_predicates.get((j, c))
            if f is not None and g is not None:
                on_pred[(i, c)] = C.compose(f, g)
        on_dir[i] = row
    return PolyMorphism(phi.source, target, on_pos, on_dir, on_pred, fill=False)


def compose_poly(phi: PolyMorphism, psi: PolyMorphism) -> PolyMorphism:
    """``psi ∘ phi``: first ``phi: p -> q`` then ``psi: q -> r``."""
    _same_base(phi.source, psi.source)
    if phi.target != psi.source:
        raise NotComposable("target of the first morphism is not the source of the second")
    return _compose_tables(phi, psi, psi.target)


def compose_loose(phi: PolyMorphism, psi: PolyMorphism) -> PolyMorphism:
    """``psi ∘ phi`` where ``phi``'s image need only lie in a summand of ``psi``'s source.

    The target of the result is the summand of ``psi.target`` on the image.
    Used to evaluate large composites only where they are needed.
    """
    _same_base(phi.source, psi.source)
    for j in phi.image():
        if not psi.source.has_position(j) or psi.source.directions(j) != phi.target.directions(j) \
                or any(psi.source.predicate(j, b) != phi.target.predicate(j, b)
                       for b in phi.target.directions(j)):
            raise NotComposable(f"position {format_label(j)} of the middle object does not match")
    image = [psi.on_positions[j] for j in phi.image()]
    return _compose_tables(phi, psi, psi.target.restrict(image))


def hom_count(p: Polynomial, q: Polynomial) -> int:
    """``Π_i Σ_j Π_b Σ_a |C(c_{i,a}, d_{j,b})|``."""
    _same_base(p, q)
    C = p.base
    return prod(
        sum(prod(sum(len(C.hom(p.predicate(i, a), q.predicate(j, b))) for a in p.directions(i))
                 for b in q.directions(j))
            for j in q.positions)
        for i in p.positions)


def _position_choices(p: Polynomial, q: Polynomial, i):
    """All ``(j, back, preds)`` realising position ``i`` of a morphism p -> q."""
    C = p.base
    out = []
    for j in q.positions:
        per_dir = []
        for b in q.directions(j):
            d = q.predicate(j, b)
            per_dir.append([(a, m) for a in p.directions(i) for m in C.hom(p.predicate(i, a), d)])
        bs = q.directions(j)
        for combo in itertools.product(*per_dir):
            out.append((j, {b: am[0] for b, am in zip(bs, combo)},
                        {(i, b): am[1] for b, am in zip(bs, combo)}))
    return out


def iter_hom(p: Polynomial, q: Polynomial):
    """Lazily enumerate every well-typed morphism ``p -> q`` in canonical order."""
    _same_base(p, q)
    choices = [_position_choices(p, q, i) for i in p.positions]
    for combo in itertools.product(*choices):
        on_pos, on_dir, on_pred = {}, {}, {}
        for i, (j, back, preds) in zip(p.positions, combo):
            on_pos[i] = j
            on_dir[i] = back
            on_pred.update(preds)
        yield PolyMorphism(p, q, on_pos, on_dir, on_pred, fill=False)


def enumerate_hom(p: Polynomial, q: Polynomial) -> list[PolyMorphism]:
    return list(iter_hom(p, q))


# -- (co)products ---------------------------------------------------------

INL, INR = "inl", "inr"


def coproduct(p: Polynomial, q: Polynomial):
    """``p + q`` with its two injections; positions are tagged ``(inl, i)``/``(inr, j)``."""
    _same_base(p, q)
    rows = [((INL, i), row) for i, row in p.rows()] + [((INR, j), row) for j, row in q.rows()]
    s = Polynomial(p.base, rows)
    return s, _injection(p, s, INL), _injection(q, s, INR)


def _injection(p, s, tag):
    C = p.base
    return PolyMorphism(p, s, {i: (tag, i) for i in p.positions},
                        {i: {a: a for a in p.directions(i)} for i in p.positions},
                        {(i, a): C.identity(p.predicate(i, a)) for i in p.positions
                         for a in p.directions(i)}, fill=False)


def coproduct_family(family: Mapping) -> Polynomial:
    """``Σ_k p_k`` with positions ``(k, i)``."""
    ps = list(family.values())
    if not ps:
        raise InvalidInput("empty family needs an explicit base; use zero(base)")
    for p in ps[1:]:
        _same_base(ps[0], p)
    return Polynomial(ps[0].base, [((k, i), row) for k, p in family.items() for i, row in p.rows()])


def product(p: Polynomial, q: Polynomial):
    """``p × q`` with its projections.

    Positions are pairs ``(i, j)``; directions are ``(inl, a)`` for ``a ∈ A_i``
    and ``(inr, b)`` for ``b ∈ B_j`` -- the binary case of the distributive law.
    """
    _same_base(p, q)
    C = p.base
    rows = []
    for i, j in itertools.product(p.positions, q.positions):
        row = [((INL, a), p.predicate(i, a)) for a in p.directions(i)]
        row += [((INR, b), q.predicate(j, b)) for b in q.directions(j)]
        rows.append(((i, j), row))
    s = Polynomial(C, rows)
    pi1 = PolyMorphism(s, p, {(i, j): i for i, j in s.positions},
                       {(i, j): {a: (INL, a) for a in p.directions(i)} for i, j in s.positions},
                       {((i, j), a): C.identity(p.predicate(i, a)) for i, j in s.positions
                        for a in p.directions(i)}, fill=False)
    pi2 = PolyMorphism(s, q, {(i, j): j for i, j in s.positions},
                       {(i, j): {b: (INR, b) for b in q.directions(j)} for i, j in s.positions},
                       {((i, j), b): C.identity(q.predicate(j, b)) for i, j in s.positions
                        for b in q.directions(j)}, fill=False)
    return s, pi1, pi2


def product_family(family: Mapping, base: MonoidalBase | None = None) -> Polynomial:
    """``Π_k Σ_i Π_a c`` expanded by the distributive law.

    Positions are tuples of pairs ``((k, i_k), ...)`` (the graph of a choice
    function); directions are pairs ``(k, a)``.  The empty product is the
    one-position, no-direction polynomial.
    """
    keys = list(family)
    if not keys:
        if base is None:
            raise InvalidInput("empty product needs a base")
        return constant(base, [()])
    ps = [family[k] for k in keys]
    for p in ps[1:]:
        _same_base(ps[0], p)
    rows = []
    for choice in itertools.product(*(p.positions for p in ps)):
        row = [((k, a), p.predicate(i, a)) for k, p, i in zip(keys, ps, choice) for a in p.directions(i)]
        rows.append((tuple(zip(keys, choice)), row))
    return Polynomial(ps[0].base, rows)


# -- homogeneous polynomials and Dial(Set) -------------------------------

def is_homogeneous(p: Polynomial) -> bool:
    """True iff every position has literally the same set of direction labels."""
    sets = {p.directions(i) for i in p.positions}
    return len(sets) <= 1


class HomogeneousView:
    """A homogeneous polynomial as ``(I, A, c: I × A -> C)``.

    Over the walking arrow, :attr:`relation` is the Dial(Set) relation
    ``{(i, a) | c_{i,a} = T}``.
    """

    def __init__(self, p: Polynomial):
        self.poly = p
        self.positions = p.positions
        self.directions = p.directions(p.positions[0]) if p.positions else ()
        self.predicates = {(i, a): p.predicate(i, a) for i in p.positions for a in self.directions}

    @property
    def relation(self) -> frozenset:
        from .base import ARROW, TOP

        if self.poly.base != ARROW:
            raise InvalidInput("the Dial(Set) relation is only defined over the arrow base")
        return frozenset(k for k, c in self.predicates.items() if c == TOP)


def as_dialectica(p: Polynomial) -> HomogeneousView:
    if not is_homogeneous(p):
        raise InvalidInput("polynomial is not homogeneous")
    return HomogeneousView(p)


def poly_sort_key(p: Polynomial):
    return tuple((label_key(i), tuple(label_key(a) for a in p.directions(i))) for i in p.positions)
