from pathlib import Path

import pytest

import polycat as pc
from polycat.structure import List, Map, ParseError, UnresolvedReference, ValidationFailure, load, parse, print_structure

STRUCTURES = Path(__file__).resolve().parent.parent / "structures"

MINIMAL = "base trivial\npoly y2 = Σ{i: Π{a: y, b: y}}\n"


def test_minimal_round_trip():
    doc = parse(MINIMAL)
    assert print_structure(doc) == MINIMAL
    assert load(MINIMAL)["y2"] == pc.Polynomial(pc.TRIVIAL, {"i": {"a": "y", "b": "y"}})


def test_whitespace_and_comments():
    text = "# a comment\nbase   trivial\n\npoly y2=Σ{ i : Π{ a:y,b :y } }   # trailing\n"
    assert print_structure(parse(text)) == MINIMAL
    # key order is kept as written; only layout is normalised
    swapped = print_structure(parse("base trivial\npoly y2 = Σ{i: Π{b: y, a: y}}"))
    assert swapped == "base trivial\npoly y2 = Σ{i: Π{b: y, a: y}}\n"
    assert load(swapped)["y2"] == load(MINIMAL)["y2"]


def test_values():
    doc = parse('base trivial\ntrace t = {xs: [1, (a, b), "q r"], m: {}}\n')
    v = doc.get("t").value
    assert isinstance(v, Map) and isinstance(v.get("xs"), List)
    assert v.get("xs").items[1] == ("a", "b")
    assert v.get("xs").items[2] == "q r"


def test_unresolved_reference():
    text = MINIMAL + "morphism f : y2 -> nowhere = {positions: {i: i}, directions: {i: {}}}\n"
    with pytest.raises(UnresolvedReference):
        load(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse("base trivial\npoly p = Σ{i: Π{a: y}\n")
    assert (exc.value.line, exc.value.col) == (3, 1)
    with pytest.raises(ParseError):
        parse("poly p = Σ{}\n")
    with pytest.raises(ParseError):
        parse("base trivial\nbase arrow\n")
    with pytest.raises(ParseError):
        parse(MINIMAL + "poly y2 = Σ{}\n")
    with pytest.raises(ParseError):
        parse("base trivial\npoly p = Σ{i: Π{}, i: Π{}}\n")


def test_validation_failure_names_entity():
    text = (STRUCTURES / "dialectica.txt").read_text()
    with pytest.raises(ValidationFailure) as exc:
        load(text)
    assert exc.value.entity == "morphism bad"
    assert load(text, validate=False)["good"] is not None


def test_broken_base_rejected():
    with pytest.raises(ValidationFailure):
        load((STRUCTURES / "broken_base.txt").read_text())


@pytest.mark.parametrize("path", sorted(STRUCTURES.glob("*.txt")), ids=lambda p: p.name)
def test_shipped_files_round_trip(path):
    once = print_structure(parse(path.read_text()))
    assert print_structure(parse(once)) == once


def test_loaded_kinds():
    L = load((STRUCTURES / "loop.txt").read_text())
    assert isinstance(L["L"], pc.EnrichedCategory)
    assert isinstance(L["walk"], pc.DynSystem)
    assert isinstance(L["X"], pc.Comonoid)
    assert isinstance(L["psi"], pc.PolyMorphism)
    assert L.kind("walk") == "dds"
    assert pc.validate_comonoid(L["X"]) == []
