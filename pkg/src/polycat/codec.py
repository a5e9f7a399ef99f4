"""Conversion between file entities and library objects."""

from __future__ import annotations

from .base import COST, BaseMorphism, FinitePresentedBase
from .comonoid import Comonoid, ComonoidMorphism, validate_comonoid, validate_comonoid_morphism
from .dynamics import DynSystem, MetricSpace, make_dds
from .enriched import EnrichedCategory, EnrichedCofunctor, _witness, validate_cofunctor, validate_enriched
from .errors import BoundViolated, PartialAssignment, PolycatError, Violation
from .polynomial import Polynomial, PolyMorphism, validate_poly_morphism
from .structure import (
    Entity,
    List,
    Map,
    UnresolvedReference,
    ValidationFailure,
    _bool,
    _fields,
    _need_list,
    _need_map,
    format_object,
    mapping,
)

# -- decoding --------------------------------------------------------------


def _obj(base, v, where):
    if not isinstance(v, str):
        raise ValidationFailure(where, [Violation("syntax", (), "an object of the base must be an atom")])
    try:
        return base.parse_object(v)
    except PolycatError as exc:
        raise ValidationFailure(where, [Violation("object-typing", (v,), str(exc))]) from None


def _witness_of(base, v, where):
    if not isinstance(base, FinitePresentedBase):
        raise ValidationFailure(where, [Violation("syntax", (), "witnesses are only given in finite bases")])
    try:
        return base.morphism(v)
    except PolycatError as exc:
        raise ValidationFailure(where, [Violation("predicate-typing", (v,), str(exc))]) from None


def _ref(objects, name, kinds, doc, where):
    if not isinstance(name, str) or name not in objects:
        raise UnresolvedReference(f"{where} refers to undeclared {name!r}")
    if doc.get(name).kind not in kinds:
        raise UnresolvedReference(f"{where}: {name!r} is a {doc.get(name).kind}, expected {' or '.join(kinds)}")
    return objects[name]


def _check(report, where):
    if report:
        raise ValidationFailure(where, report)


def decode_poly(base, v, where):
    m = _need_map(v, where)
    data = {}
    for i, row in m.entries:
        data[i] = {a: _obj(base, c, where) for a, c in _need_map(row, where).entries}
    try:
        return Polynomial(base, data)
    except PolycatError as exc:
        raise ValidationFailure(where, [Violation("syntax", (), str(exc))]) from None


def decode_morphism(base, src, tgt, v, where, validate):
    m = _fields(v, where, {"positions", "directions", "predicates", "partial"}, ("positions",))
    on_pos = _need_map(m.get("positions"), where).as_dict()
    on_dir = {i: _need_map(row, where).as_dict()
              for i, row in _need_map(m.get("directions", Map(())), where).entries}
    on_pred = {k: _witness_of(base, w, where) for k, w in _need_map(m.get("predicates", Map(())), where).entries}
    phi = PolyMorphism(src, tgt, on_pos, on_dir, on_pred)
    if validate:
        _check(validate_poly_morphism(phi, allow_partial=_bool(m.get("partial", "false"), where)), where)
    return phi


def is_partial_morphism(phi: PolyMorphism) -> bool:
    return any(j is not None and phi.target.has_position(j)
               and len(phi.on_directions.get(i, {})) < len(phi.target.directions(j))
               for i, j in phi.on_positions.items())


def decode_enriched(base, v, where, validate):
    m = _fields(v, where, {"objects", "morphisms", "identities", "composition", "eta", "mu", "partial"},
                ("objects", "morphisms", "identities"))
    objects = _need_list(m.get("objects"), where)
    out = {}
    for x, row in _need_map(m.get("morphisms"), where).entries:
        out[x] = {}
        for f, cw in _need_map(row, where).entries:
            if not (isinstance(cw, tuple) and len(cw) == 2):
                raise ValidationFailure(where, [Violation("syntax", (x, f), "a morphism is (codomain, weight)")])
            out[x][f] = (cw[0], _obj(base, cw[1], where))
    for x in out:
        if x not in objects:
            raise ValidationFailure(where, [Violation("morphism-typing", (x,), "unknown domain")])
    ids = _need_map(m.get("identities"), where).as_dict()
    comp = {}
    for k, h in _need_map(m.get("composition", Map(())), where).entries:
        if not (isinstance(k, tuple) and len(k) == 3):
            raise ValidationFailure(where, [Violation("syntax", (), "composition keys are (object, f, g)")])
        comp[k] = h
    eta = {x: _witness_of(base, w, where) for x, w in _need_map(m.get("eta", Map(())), where).entries}
    mu = {k: _witness_of(base, w, where) for k, w in _need_map(m.get("mu", Map(())), where).entries}
    partial = _bool(m.get("partial", "false"), where)
    A = assemble_enriched(base, objects, out, ids, comp, eta, mu, partial)
    if validate:
        _check(validate_enriched(A), where)
    return A


def _unit_fills(out, ids):
    """The composites with an identity that a file may leave out."""
    fills = {}
    for x, row in out.items():
        for f, (c, _) in row.items():
            if x in ids:
                fills[(x, ids[x], f)] = f
            if c in ids and c in out:
                fills[(x, f, ids[c])] = f
    return fills


def _default_eta(C, out, x, i):
    if i not in out.get(x, {}):
        return None
    return _witness(C, out[x][i][1], C.unit)


def _default_mu(C, out, ids, x, f, g, h):
    try:
        y = out[x][f][0]
        wf, wg, wh = out[x][f][1], out[y][g][1], out[x][h][1]
    except KeyError:
        return None
    m = _witness(C, wh, C.tensor(wf, wg))
    if m is None and wh == C.tensor(wf, wg) and (f == ids.get(x) or g == ids.get(y)):
        m = C.identity(wh)
    return m


def assemble_enriched(base, objects, out, ids, comp, eta=None, mu=None, partial=False):
    eta, mu = eta or {}, mu or {}
    comp = dict(comp)
    for k, h in _unit_fills(out, ids).items():
        comp.setdefault(k, h)
    identities = {x: (i, eta.get(x) or _default_eta(base, out, x, i)) for x, i in ids.items()}
    composition = {}
    for (x, f, g), h in comp.items():
        composition[(x, f, g)] = (h, mu.get((x, f, g)) or _default_mu(base, out, ids, x, f, g, h))
    return EnrichedCategory(base, objects, out, identities, composition, partial=partial)


def decode_cofunctor(base, A, B, v, where, validate):
    m = _fields(v, where, {"objects", "lift", "weights"}, ("objects", "lift"))
    om = _need_map(m.get("objects"), where).as_dict()
    weights = {k: _witness_of(base, w, where) for k, w in _need_map(m.get("weights", Map(())), where).entries}
    lift = {}
    for k, g in _need_map(m.get("lift"), where).entries:
        if not (isinstance(k, tuple) and len(k) == 2):
            raise ValidationFailure(where, [Violation("syntax", (), "lift keys are (object, morphism)")])
        lift[k] = (g, weights.get(k))
    F = EnrichedCofunctor(A, B, om, lift)
    if validate:
        _check(validate_cofunctor(F), where)
    return F


def decode(e: Entity, base, objects, doc, validate):
    where = f"{e.kind} {e.name}"
    refs = [objects[r] for r in e.refs]

    def need(n, kinds):
        if len(e.refs) != n:
            raise ValidationFailure(where, [Violation("syntax", (), f"expected {n} header reference(s)")])
        for r in e.refs:
            _ref(objects, r, kinds, doc, where)

    if e.kind == "poly":
        need(0, ())
        return decode_poly(base, e.value, where)
    if e.kind == "morphism":
        need(2, ("poly",))
        return decode_morphism(base, refs[0], refs[1], e.value, where, validate)
    if e.kind == "enriched":
        need(0, ())
        return decode_enriched(base, e.value, where, validate)
    if e.kind == "cofunctor":
        need(2, ("enriched",))
        return decode_cofunctor(base, refs[0], refs[1], e.value, where, validate)
    if e.kind == "comonoid":
        need(0, ())
        m = _fields(e.value, where, {"from", "carrier", "counit", "comult", "partial"})
        if m.get("from") is not None:
            from .comonoid import enriched_to_comonoid

            A = _ref(objects, m.get("from"), ("enriched",), doc, where)
            X = enriched_to_comonoid(A, validate=False)
        else:
            for k in ("carrier", "counit", "comult"):
                if m.get(k) is None:
                    raise ValidationFailure(where, [Violation("syntax", (), f"missing field {k}")])
            X = Comonoid(_ref(objects, m.get("carrier"), ("poly",), doc, where),
                         _ref(objects, m.get("counit"), ("morphism",), doc, where),
                         _ref(objects, m.get("comult"), ("morphism",), doc, where),
                         partial=_bool(m.get("partial", "false"), where))
        if validate:
            _check(validate_comonoid(X), where)
        return X
    if e.kind == "comorphism":
        need(2, ("comonoid",))
        m = _fields(e.value, where, {"map"}, ("map",))
        M = ComonoidMorphism(refs[0], refs[1], _ref(objects, m.get("map"), ("morphism",), doc, where))
        if validate:
            _check(validate_comonoid_morphism(M), where)
        return M
    if e.kind == "dds":
        need(1, ("enriched",))
        m = _fields(e.value, where, {"assignment", "bound"}, ("assignment",))
        A = refs[0]
        if A.base != COST:
            raise ValidationFailure(where, [Violation("space-typing", (), "a dynamical system needs a cost base")])
        assignment = _need_map(m.get("assignment"), where).as_dict()
        bound = m.get("bound")
        bound = None if bound is None else _obj(COST, bound, where)
        if not validate:
            return DynSystem(MetricSpace(A, validate=False), assignment, bound)
        try:
            return make_dds(MetricSpace(A, validate=False), assignment, bound)
        except PartialAssignment as exc:
            raise ValidationFailure(where, [Violation("assignment-total", (), str(exc))]) from None
        except BoundViolated as exc:
            raise ValidationFailure(where, [Violation("bound", (exc.point,),
                                                      f"cost {format_object(COST, exc.cost)} exceeds "
                                                      f"{format_object(COST, exc.bound)}")]) from None
    # trace and cofree sections are reports; keep their value as data
    return e.value


# -- encoding --------------------------------------------------------------

def base_spec(base):
    if not isinstance(base, FinitePresentedBase):
        return base.name
    v = mapping({
        "objects": List(tuple(base.objects)),
        "morphisms": mapping(base.morphisms),
        "identities": mapping(base.identities),
        "composition": mapping(base.composition),
        "tensor_objects": mapping(base.tensor_objects),
        "tensor_morphisms": mapping(base.tensor_morphisms),
        "unit": base.unit,
        "symmetric": "true" if base.symmetric else "false",
    }, sort=False)
    return (base.name, v)


def _weight(base, m):
    return m.witness if isinstance(m, BaseMorphism) else None


def encode_poly(name, p: Polynomial) -> Entity:
    C = p.base
    v = Map(tuple((i, Map(tuple((a, format_object(C, p.predicate(i, a))) for a in p.directions(i)), "Π"))
                  for i in p.positions), "Σ")
    return Entity("poly", name, (), v)


def encode_morphism(name, src, tgt, phi: PolyMorphism) -> Entity:
    C = phi.source.base
    fields = {"positions": mapping({i: phi.on_positions[i] for i in phi.source.positions if i in phi.on_positions}),
              "directions": mapping({i: mapping(phi.on_directions.get(i, {}))
                                     for i in phi.source.positions if i in phi.on_positions})}
    if is_partial_morphism(phi):
        fields["partial"] = "true"
    if not C.thin:
        preds = {k: _weight(C, m) for k, m in phi.on_predicates.items() if _weight(C, m) is not None}
        if preds:
            fields["predicates"] = mapping(preds)
    return Entity("morphism", name, (src, tgt), Map(tuple(fields.items())))


def encode_enriched(name, A: EnrichedCategory) -> Entity:
    C = A.base
    out = {x: {f: (c, w) for f, (c, w) in A.out[x].items()} for x in A.objects}
    ids = {x: i for x, (i, _) in A.identities.items()}
    fills = _unit_fills(out, ids)
    comp = {k: h for k, (h, _) in A.composition.items() if fills.get(k) != h}
    fields = {
        "objects": List(A.objects),
        "morphisms": mapping({x: mapping({f: (c, format_object(C, w)) for f, (c, w) in row.items()})
                              for x, row in out.items()}),
        "identities": mapping(ids),
    }
    if comp:
        fields["composition"] = mapping(comp)
    eta = {x: _weight(C, e) for x, (i, e) in A.identities.items()
           if e is not None and e != _default_eta(C, out, x, i)}
    mu = {k: _weight(C, m) for k, (h, m) in A.composition.items()
          if m is not None and m != _default_mu(C, out, ids, *k, h)}
    if eta:
        fields["eta"] = mapping(eta)
    if mu:
        fields["mu"] = mapping(mu)
    if A.partial:
        fields["partial"] = "true"
    return Entity("enriched", name, (), Map(tuple(fields.items())))


def encode_cofunctor(name, a, b, F: EnrichedCofunctor) -> Entity:
    C = F.source.base
    fields = {"objects": mapping(F.object_map), "lift": mapping({k: g for k, (g, _) in F.lift.items()})}
    if not C.thin:
        ws = {k: w.witness for k, (g, w) in F.lift.items()
              if w is not None and w != _witness(C, F.source.weight(k[0], g), F.target.weight(F(k[0]), k[1]))}
        if ws:
            fields["weights"] = mapping(ws)
    return Entity("cofunctor", name, (a, b), Map(tuple(fields.items())))


def encode_dds(name, space, phi: DynSystem) -> Entity:
    fields = {"assignment": mapping(phi.assignment)}
    if phi.bound is not None:
        fields["bound"] = format_object(COST, phi.bound)
    return Entity("dds", name, (space,), Map(tuple(fields.items())))


def encode_comonoid(name, X: Comonoid) -> list[Entity]:
    """The carrier, counit and comultiplication with their targets, then the comonoid."""
    p, c = f"{name}_carrier", X.counit.target
    out = [encode_poly(p, X.carrier), encode_poly(f"{name}_unit", c),
           encode_poly(f"{name}_square", X.comult.target),
           encode_morphism(f"{name}_counit", p, f"{name}_unit", X.counit),
           encode_morphism(f"{name}_comult", p, f"{name}_square", X.comult)]
    fields = {"carrier": p, "counit": f"{name}_counit", "comult": f"{name}_comult"}
    if X.partial:
        fields["partial"] = "true"
    out.append(Entity("comonoid", name, (), Map(tuple(fields.items()))))
    return out
