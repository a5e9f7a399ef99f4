"""Monoidal products on polynomials.

``⊗`` (parallel) and ``◁`` (composition) act on objects and morphisms;
``⋈`` and ``⋊`` on objects only.  Structural isomorphisms (associators,
unitors, the swap, the distributive law and the two forms of ``p ◁ q``) are
built as explicit pairs of morphisms so the monoidal laws can be checked by
composing.

Positions of ``p ◁ q`` are pairs ``(i, jbar)`` where ``jbar`` is the tuple of
``q``-positions assigned to the directions of ``p`` at ``i``, listed in the
canonical order of those directions.

The ``positions=`` arguments of :func:`comp_obj`, :func:`comp_mor` and the
◁-structure maps build only a summand of the (often very large) full
polynomial; morphisms built that way have their target cut down to the image.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidInput, KindArityMismatch, Violation
from .labels import format_label
from .polynomial import (
    PolyMorphism,
    Polynomial,
    compose_poly,
    coproduct,
    coproduct_family,
    identity_poly,
    product,
    product_family,
    unit_polynomial,
    _same_base,
)

STAR = "*"


# -- parallel product ------------------------------------------------------

def parallel_obj(p: Polynomial, q: Polynomial) -> Polynomial:
    """``Σ_{(i,j)} Π_{(a,b)} c_{i,a} · d_{j,b}``."""
    _same_base(p, q)
    C = p.base
    rows = []
    for i, j in itertools.product(p.positions, q.positions):
        rows.append(((i, j), [((a, b), C.tensor(p.predicate(i, a), q.predicate(j, b)))
                              for a in p.directions(i) for b in q.directions(j)]))
    return Polynomial(C, rows)


def parallel_mor(phi: PolyMorphism, psi: PolyMorphism) -> PolyMorphism:
    """``phi ⊗ psi``: both morphisms applied side by side."""
    _same_base(phi.source, psi.source)
    C = phi.source.base
    src = parallel_obj(phi.source, psi.source)
    tgt = parallel_obj(phi.target, psi.target)
    on_pos, on_dir, on_pred = {}, {}, {}
    for (i, j) in src.positions:
        k, l = phi(i), psi(j)
        on_pos[(i, j)] = (k, l)
        row = {}
        for c in phi.target.directions(k):
            for d in psi.target.directions(l):
                row[(c, d)] = (phi.back(i, c), psi.back(j, d))
                f = phi.on_predicates.get((i, c))
                g = psi.on_predicates.get((j, d))
                if f is not None and g is not None:
                    on_pred[((i, j), (c, d))] = C.tensor(f, g)
        on_dir[(i, j)] = row
    return PolyMorphism(src, tgt, on_pos, on_dir, on_pred, fill=False)


# -- composition product ---------------------------------------------------

def jbar_map(p: Polynomial, i, jbar) -> dict:
    """The function ``A_i -> J`` encoded by the tuple ``jbar``."""
    dirs = p.directions(i)
    if not isinstance(jbar, tuple) or len(jbar) != len(dirs):
        raise InvalidInput(f"{format_label(jbar)} does not assign a position to each direction "
                           f"at {format_label(i)}")
    return dict(zip(dirs, jbar))


def _comp_row(p: Polynomial, q: Polynomial, i, jbar):
    C = p.base
    ja = jbar_map(p, i, jbar)
    return [((a, b), C.tensor(p.predicate(i, a), q.predicate(ja[a], b)))
            for a in p.directions(i) for b in q.directions(ja[a])]


def comp_positions(p: Polynomial, q: Polynomial):
    for i in p.positions:
        for jbar in itertools.product(q.positions, repeat=len(p.directions(i))):
            yield (i, jbar)


def comp_obj(p: Polynomial, q: Polynomial, positions=None) -> Polynomial:
    """``p ◁ q`` as ``Σ_i Σ_{jbar: A_i -> J} Π_a Π_{b ∈ B_{jbar a}} c_{i,a} · d_{jbar a, b}``.

    With ``positions`` only that summand is built.
    """
    _same_base(p, q)
    if positions is None:
        positions = comp_positions(p, q)
    return Polynomial(p.base, [((i, jbar), _comp_row(p, q, i, jbar)) for i, jbar in positions])


def comp_obj_def_form(p: Polynomial, q: Polynomial):
    """``p ◁ q`` computed literally as ``Σ_i Π_{a∈A_i} (Σ_j Π_b c_{i,a} · d_{j,b})``.

    The product over ``A_i`` is expanded with the general distributive law, so
    positions come out as ``(i, ((a, j), ...))``.  Returns the polynomial and
    the ``compForm`` isomorphism to :func:`comp_obj`.
    """
    _same_base(p, q)
    C = p.base
    family = {}
    for i in p.positions:
        factors = {a: Polynomial(C, [(j, [(b, C.tensor(p.predicate(i, a), d)) for b, d in row])
                                     for j, row in q.rows()])
                   for a in p.directions(i)}
        family[i] = product_family(factors, base=C)
    if family:
        d = coproduct_family(family)
    else:
        d = Polynomial(C, {})
    lemma = comp_obj(p, q)

    def to_lemma(pos):
        i, graph = pos
        return (i, tuple(j for _, j in graph))

    def to_def(pos):
        i, jbar = pos
        return (i, tuple(zip(p.directions(i), jbar)))

    fwd = _relabel(d, lemma, to_lemma, lambda pos, b: b)
    bwd = _relabel(lemma, d, to_def, lambda pos, b: b)
    return d, CanonicalIso(fwd, bwd, "compForm")


def comp_mor(phi: PolyMorphism, psi: PolyMorphism, positions=None) -> PolyMorphism:
    """``phi ◁ psi : p ◁ q -> r ◁ s`` for ``phi: p -> r`` and ``psi: q -> s``.

    On positions ``(i, jbar) ↦ (phi i, psi ∘ jbar ∘ phi♯_i)``; on directions
    ``(c, d) ↦ (phi♯_i c, psi♯_{j} d)`` with ``j = jbar(phi♯_i c)``; on
    predicates ``phi_{i,c} · psi_{j,d}``.
    """
    _same_base(phi.source, psi.source)
    C = phi.source.base
    p, r, q, s = phi.source, phi.target, psi.source, psi.target
    full = positions is None
    src = comp_obj(p, q, positions)
    on_pos, on_dir, on_pred = {}, {}, {}
    for pos in src.positions:
        i, jbar = pos
        ja = jbar_map(p, i, jbar)
        k = phi(i)
        back_i = phi.on_directions.get(i, {})
        cs = r.directions(k)
        missing = [c for c in cs if c not in back_i]
        if missing:
            raise InvalidInput(f"{format_label(i)}: first factor is undefined on direction "
                               f"{format_label(missing[0])}")
        lbar = tuple(psi(ja[back_i[c]]) for c in cs)
        on_pos[pos] = (k, lbar)
        row = {}
        for c in cs:
            a = back_i[c]
            j = ja[a]
            back_j = psi.on_directions.get(j, {})
            f = phi.on_predicates.get((i, c))
            for d in s.directions(psi(j)):
                if d not in back_j:
                    continue
                row[(c, d)] = (a, back_j[d])
                g = psi.on_predicates.get((j, d))
                if f is not None and g is not None:
                    on_pred[(pos, (c, d))] = C.tensor(f, g)
        on_dir[pos] = row
    if full:
        tgt = comp_obj(r, s)
    else:
        tgt = comp_obj(r, s, list(dict.fromkeys(on_pos.values())))
    return PolyMorphism(src, tgt, on_pos, on_dir, on_pred, fill=False)


def comp_power(p: Polynomial, n: int, positions=None) -> Polynomial:
    """The left-nested ``p ◁ p ◁ ... ◁ p`` with ``n >= 1`` factors (full unless restricted)."""
    if n < 1:
        raise InvalidInput("a ◁-power needs at least one factor")
    if n == 1:
        return p if positions is None else p.restrict(positions)
    if positions is None:
        return comp_obj(comp_power(p, n - 1), p)
    firsts = list(dict.fromkeys(pos[0] for pos in positions))
    return comp_obj(comp_power(p, n - 1, firsts), p, positions)


def comp_mor_power(phi: PolyMorphism, n: int, positions=None) -> PolyMorphism:
    """``phi ◁ ... ◁ phi`` (left nested, ``n`` factors)."""
    if n < 1:
        raise InvalidInput("a ◁-power needs at least one factor")
    if n == 1:
        return phi if positions is None else phi.restrict(positions)
    if positions is None:
        return comp_mor(comp_mor_power(phi, n - 1), phi)
    firsts = list(dict.fromkeys(pos[0] for pos in positions))
    return comp_mor(comp_mor_power(phi, n - 1, firsts), phi, positions)


# -- the other two products --------------------------------------------------

def bowtie_obj(p: Polynomial, q: Polynomial) -> Polynomial:
    """``Σ_{(i,j)} Π_{abar: J -> A_i} Π_{bbar: I -> B_j} c_{i, abar j} · d_{j, bbar i}``."""
    _same_base(p, q)
    C = p.base
    rows = []
    for i, j in itertools.product(p.positions, q.positions):
        row = []
        for abar in itertools.product(p.directions(i), repeat=len(q.positions)):
            a_of = dict(zip(q.positions, abar))
            for bbar in itertools.product(q.directions(j), repeat=len(p.positions)):
                b_of = dict(zip(p.positions, bbar))
                row.append(((abar, bbar), C.tensor(p.predicate(i, a_of[j]), q.predicate(j, b_of[i]))))
        rows.append(((i, j), row))
    return Polynomial(C, rows)


def rtimes_obj(p: Polynomial, q: Polynomial) -> Polynomial:
    """``Σ_{(i,j)} Π_{abar: J -> A_i} Π_{b ∈ B_j} c_{i, abar j} · d_{j, b}``."""
    _same_base(p, q)
    C = p.base
    rows = []
    for i, j in itertools.product(p.positions, q.positions):
        row = []
        for abar in itertools.product(p.directions(i), repeat=len(q.positions)):
            a_of = dict(zip(q.positions, abar))
            for b in q.directions(j):
                row.append(((abar, b), C.tensor(p.predicate(i, a_of[j]), q.predicate(j, b))))
        rows.append(((i, j), row))
    return Polynomial(C, rows)


# -- structural isomorphisms -------------------------------------------------

@dataclass(frozen=True)
class CanonicalIso:
    forward: PolyMorphism
    backward: PolyMorphism
    kind: str

    def verify(self) -> list[Violation]:
        return verify_iso(self)


def _relabel(src: Polynomial, tgt: Polynomial, pos_map, dir_map) -> PolyMorphism:
    """Morphism that renames labels and is the identity on predicates.

    ``dir_map(i, b)`` gives the source direction for target direction ``b``.
    """
    C = src.base
    on_pos, on_dir, on_pred = {}, {}, {}
    for i in src.positions:
        j = pos_map(i)
        on_pos[i] = j
        row = {}
        for b in tgt.directions(j):
            a = dir_map(i, b)
            row[b] = a
            c, d = src.predicate(i, a), tgt.predicate(j, b)
            if c != d:
                raise InvalidInput(f"structure map needs {C.format_object(c)} = {C.format_object(d)}; "
                                   "the base is not strict here")
            on_pred[(i, b)] = C.identity(c)
        on_dir[i] = row
    return PolyMorphism(src, tgt, on_pos, on_dir, on_pred, fill=False)


def _image_target(full_target_builder, src, pos_map, restricted):
    return full_target_builder([pos_map(i) for i in src.positions] if restricted else None)


def assoc_comp(p: Polynomial, q: Polynomial, r: Polynomial, positions=None, inverse=False) -> PolyMorphism:
    """``(p ◁ q) ◁ r -> p ◁ (q ◁ r)`` (or its inverse), optionally on a summand of the source."""
    _same_base(p, q)
    _same_base(q, r)
    restricted = positions is not None

    def build_left(pos_list):
        # (p ◁ q) ◁ r on the given positions
        if pos_list is None:
            return comp_obj(comp_obj(p, q), r)
        firsts = list(dict.fromkeys(x[0] for x in pos_list))
        return comp_obj(comp_obj(p, q, firsts), r, pos_list)

    def build_right(pos_list):
        # p ◁ (q ◁ r) on the given positions
        if pos_list is None:
            return comp_obj(p, comp_obj(q, r))
        inner = list(dict.fromkeys(m for _, mbar in pos_list for m in mbar))
        return comp_obj(p, comp_obj(q, r, inner), pos_list)

    def left_to_right(pos):
        (i, jbar), kbar = pos
        ja = jbar_map(p, i, jbar)
        kab = dict(zip(pq_dirs((i, jbar)), kbar))
        return (i, tuple((ja[a], tuple(kab[(a, b)] for b in q.directions(ja[a]))) for a in p.directions(i)))

    def right_to_left(pos):
        i, mbar = pos
        jbar = tuple(j for j, _ in mbar)
        ma = dict(zip(p.directions(i), mbar))
        kbar = tuple(dict(zip(q.directions(ma[a][0]), ma[a][1]))[b] for a, b in pq_dirs((i, jbar)))
        return ((i, jbar), kbar)

    def pq_dirs(pos):
        i, jbar = pos
        ja = jbar_map(p, i, jbar)
        return [(a, b) for a in p.directions(i) for b in q.directions(ja[a])]

    if not inverse:
        src = build_left(positions)
        tgt = _image_target(build_right, src, left_to_right, restricted)
        return _relabel(src, tgt, left_to_right, lambda pos, abc: ((abc[0], abc[1][0]), abc[1][1]))
    src = build_right(positions)
    tgt = _image_target(build_left, src, right_to_left, restricted)
    return _relabel(src, tgt, right_to_left, lambda pos, abc: (abc[0][0], (abc[0][1], abc[1])))


def unit_comp(p: Polynomial, side="right", positions=None, inverse=False) -> PolyMorphism:
    """Unitors of ◁: ``p ◁ e -> p`` (right) or ``e ◁ p -> p`` (left), or their inverses."""
    e = unit_polynomial(p.base)
    if side == "right":
        def there(pos):
            return pos[0]

        def back(i):
            return (i, (STAR,) * len(p.directions(i)))

        if not inverse:
            src = comp_obj(p, e, positions)
            return _relabel(src, p.restrict([there(x) for x in src.positions]) if positions is not None else p,
                            there, lambda pos, a: (a, STAR))
        src = p if positions is None else p.restrict(positions)
        full = comp_obj(p, e, [back(i) for i in src.positions]) if positions is not None else comp_obj(p, e)
        return _relabel(src, full, back, lambda i, ab: ab[0])
    if side == "left":
        def there(pos):
            return pos[1][0]

        def back(j):
            return (STAR, (j,))

        if not inverse:
            src = comp_obj(e, p, positions)
            tgt = p.restrict([there(x) for x in src.positions]) if positions is not None else p
            return _relabel(src, tgt, there, lambda pos, b: (STAR, b))
        src = p if positions is None else p.restrict(positions)
        full = comp_obj(e, p, [back(j) for j in src.positions]) if positions is not None else comp_obj(e, p)
        return _relabel(src, full, back, lambda j, ab: ab[1])
    raise InvalidInput(f"side must be 'left' or 'right', not {side!r}")


def _unit_par(p: Polynomial, side):
    e = unit_polynomial(p.base)
    if side == "right":
        src = parallel_obj(p, e)
        fwd = _relabel(src, p, lambda pos: pos[0], lambda pos, a: (a, STAR))
        bwd = _relabel(p, src, lambda i: (i, STAR), lambda i, ab: ab[0])
    elif side == "left":
        src = parallel_obj(e, p)
        fwd = _relabel(src, p, lambda pos: pos[1], lambda pos, b: (STAR, b))
        bwd = _relabel(p, src, lambda j: (STAR, j), lambda j, ab: ab[1])
    else:
        raise InvalidInput(f"side must be 'left' or 'right', not {side!r}")
    return fwd, bwd


def _assoc_par(p, q, r):
    left = parallel_obj(parallel_obj(p, q), r)
    right = parallel_obj(p, parallel_obj(q, r))
    fwd = _relabel(left, right, lambda pos: (pos[0][0], (pos[0][1], pos[1])),
                   lambda pos, abc: ((abc[0], abc[1][0]), abc[1][1]))
    bwd = _relabel(right, left, lambda pos: ((pos[0], pos[1][0]), pos[1][1]),
                   lambda pos, abc: (abc[0][0], (abc[0][1], abc[1])))
    return fwd, bwd


def _swap_par(p, q):
    if not p.base.symmetric:
        raise InvalidInput(f"swap needs a symmetric strict base; {p.base.name} is not")
    pq, qp = parallel_obj(p, q), parallel_obj(q, p)
    fwd = _relabel(pq, qp, lambda pos: (pos[1], pos[0]), lambda pos, ba: (ba[1], ba[0]))
    bwd = _relabel(qp, pq, lambda pos: (pos[1], pos[0]), lambda pos, ab: (ab[1], ab[0]))
    return fwd, bwd


def _distrib(p, q, r):
    """``p × (q + r) ≅ (p × q) + (p × r)``."""
    qr, _, _ = coproduct(q, r)
    left, _, _ = product(p, qr)
    pq, _, _ = product(p, q)
    pr, _, _ = product(p, r)
    right, _, _ = coproduct(pq, pr)
    fwd = _relabel(left, right, lambda pos: (pos[1][0], (pos[0], pos[1][1])), lambda pos, d: d)
    bwd = _relabel(right, left, lambda pos: (pos[1][0], (pos[0], pos[1][1])), lambda pos, d: d)
    return fwd, bwd


_ARITY = {"assoc⊗": 3, "unit⊗": 1, "assoc◁": 3, "unit◁": 1, "distrib": 3, "swap⊗": 2, "compForm": 2}
ISO_KINDS = tuple(_ARITY)


def canonical_iso(kind: str, *args: Polynomial, side: str = "right") -> CanonicalIso:
    """The structural isomorphism of the given kind on the given polynomials.

    ``forward`` goes from the bracketed/expanded form to the normalised one:
    ``(p⊗q)⊗r -> p⊗(q⊗r)``, ``p⊗e -> p``, ``(p◁q)◁r -> p◁(q◁r)``, ``p◁e -> p``
    (``side="left"`` for ``e⊗p``/``e◁p``), ``p×(q+r) -> p×q + p×r``,
    ``p⊗q -> q⊗p`` and def-form ``-> `` lemma form of ``p ◁ q``.
    """
    if kind not in _ARITY:
        raise KindArityMismatch(f"unknown iso kind {kind!r}; expected one of {', '.join(ISO_KINDS)}")
    if len(args) != _ARITY[kind]:
        raise KindArityMismatch(f"{kind} takes {_ARITY[kind]} polynomial(s), got {len(args)}")
    for a in args[1:]:
        _same_base(args[0], a)
    if kind == "assoc⊗":
        fwd, bwd = _assoc_par(*args)
    elif kind == "unit⊗":
        fwd, bwd = _unit_par(args[0], side)
    elif kind == "assoc◁":
        fwd, bwd = assoc_comp(*args), assoc_comp(*args, inverse=True)
    elif kind == "unit◁":
        fwd, bwd = unit_comp(args[0], side), unit_comp(args[0], side, inverse=True)
    elif kind == "distrib":
        fwd, bwd = _distrib(*args)
    elif kind == "swap⊗":
        fwd, bwd = _swap_par(*args)
    else:
        _, iso = comp_obj_def_form(*args)
        return iso
    return CanonicalIso(fwd, bwd, kind)


def verify_iso(iso: CanonicalIso) -> list[Violation]:
    """Both composites of an isomorphism must be identities."""
    report = []
    f, g = iso.forward, iso.backward
    if f.target != g.source or g.target != f.source:
        return [Violation("iso-typing", (iso.kind,))]
    if compose_poly(f, g) != identity_poly(f.source):
        report.append(Violation("iso-left-inverse", (iso.kind,)))
    if compose_poly(g, f) != identity_poly(f.target):
        report.append(Violation("iso-right-inverse", (iso.kind,)))
    return report


def find_iso(p: Polynomial, q: Polynomial) -> CanonicalIso | None:
    """Search for any isomorphism ``p ≅ q`` (exhaustive; meant for small inputs)."""
    _same_base(p, q)
    C = p.base
    if p.direction_counts() != q.direction_counts():
        return None

    def match_dirs(i, j):
        # bijections sigma: B_j -> A_i with a base iso at each direction
        As, Bs = list(p.directions(i)), list(q.directions(j))
        used = set()
        chosen = {}

        def go(k):
            if k == len(Bs):
                return dict(chosen)
            b = Bs[k]
            for a in As:
                if a in used:
                    continue
                isos = C.isomorphisms(p.predicate(i, a), q.predicate(j, b))
                if not isos:
                    continue
                used.add(a)
                chosen[b] = (a, isos[0])
                found = go(k + 1)
                if found is not None:
                    return found
                used.discard(a)
                del chosen[b]
            return None

        return go(0)

    assignment = {}
    used_j = set()

    def go(k):
        if k == len(p.positions):
            return True
        i = p.positions[k]
        for j in q.positions:
            if j in used_j or len(q.directions(j)) != len(p.directions(i)):
                continue
            sigma = match_dirs(i, j)
            if sigma is None:
                continue
            assignment[i] = (j, sigma)
            used_j.add(j)
            if go(k + 1):
                return True
            used_j.discard(j)
            del assignment[i]
        return False

    if not go(0):
        return None
    fwd = PolyMorphism(p, q, {i: j for i, (j, _) in assignment.items()},
                       {i: {b: a for b, (a, _) in s.items()} for i, (_, s) in assignment.items()},
                       {(i, b): fg[0] for i, (_, s) in assignment.items() for b, (_, fg) in s.items()},
                       fill=False)
    bwd = PolyMorphism(q, p, {j: i for i, (j, _) in assignment.items()},
                       {j: {a: b for b, (a, _) in s.items()} for i, (j, s) in assignment.items()},
                       {(j, a): fg[1] for i, (j, s) in assignment.items() for b, (a, fg) in s.items()},
                       fill=False)
    return CanonicalIso(fwd, bwd, "found")


def is_isomorphic(p: Polynomial, q: Polynomial) -> bool:
    return find_iso(p, q) is not None
