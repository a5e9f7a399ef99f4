from collections import Counter
from pathlib import Path

import pytest

import polycat
from polycat.cli import COMMANDS, OPERATIONS, main, run
from polycat.structure import load

STRUCTURES = Path(__file__).resolve().parent.parent / "structures"

# every operation the library exposes to users, grouped by module
LIBRARY_OPERATIONS = {
    "base": ["validate_base", "compose_base", "tensor_base"],
    "polynomial": ["validate_poly_morphism", "identity_poly", "compose_poly", "hom_count", "enumerate_hom",
                   "coproduct", "product", "is_homogeneous", "as_dialectica"],
    "monoidal": ["parallel_obj", "parallel_mor", "comp_obj", "comp_obj_def_form", "comp_mor", "bowtie_obj",
                 "rtimes_obj", "canonical_iso", "find_iso"],
    "enriched": ["validate_enriched", "validate_cofunctor", "compose_cofunctors"],
    "comonoid": ["validate_comonoid", "nfold_comult", "enriched_to_comonoid", "comonoid_to_enriched",
                 "cofunctor_to_comonoid_mor", "comonoid_mor_to_cofunctor", "validate_comonoid_morphism",
                 "cofree_approx", "cofree_lift"],
    "dynamics": ["make_dds", "run_dds", "seq_compose_dds", "dds_to_cofunctor", "cofunctor_to_dds"],
}


def cli(*args):
    return run(list(args))


def path(name):
    return str(STRUCTURES / name)


def test_commands():
    assert set(COMMANDS) == {"validate", "hom-count", "enumerate-hom", "compose", "tensor", "compose-product",
                             "bowtie", "rtimes", "to-comonoid", "to-enriched", "to-cofunctor", "to-dds", "run",
                             "bound-check", "cofree", "iso-check"}


def test_each_operation_reachable_once():
    counts = Counter(op for ops in OPERATIONS.values() for op in ops)
    assert all(n == 1 for n in counts.values())
    wanted = {op for ops in LIBRARY_OPERATIONS.values() for op in ops}
    assert set(counts) == wanted
    for op in counts:
        assert callable(getattr(polycat, op))


def test_dialectica_violation():
    code, out = cli("validate", "-i", path("dialectica.txt"))
    assert code == 1
    assert out.startswith("status violations\n")
    (line,) = [ln for ln in out.splitlines() if ln.startswith("violation")]
    assert "morphism bad" in line and "T -> F" in line


def test_compose_product_four_positions():
    code, out = cli("compose-product", "y2", "y1", "-i", path("substitution.txt"))
    assert code == 0
    p = load(out.partition("\n\n")[2])["y2_comp_y1"]
    assert len(p.positions) == 4
    assert p.direction_counts() == [0, 1, 1, 2]


def test_run_cumulative():
    code, out = cli("run", "walk", "--steps", "3", "-i", path("loop.txt"))
    assert code == 0
    report = out.partition("\n\n")[0]
    traces = [ln for ln in report.splitlines() if ln.startswith("trace ")]
    assert traces[-1] == "trace x, 3, l, 2, 6"
    assert "composite x, l, 2, 6" in report.splitlines()


def test_emitted_structures_reload():
    for args in (["to-comonoid", "L"], ["run", "walk", "--steps", "2"], ["to-cofunctor", "walk"]):
        code, out = cli(*args, "-i", path("loop.txt"))
        assert code == 0
        body = out.partition("\n\n")[2]
        assert load(body) is not None


def test_bound_check():
    assert cli("bound-check", "walk", "-i", path("loop.txt"))[0] == 0
    code, out = cli("bound-check", "walk", "--bound", "1", "-i", path("loop.txt"))
    assert code == 1 and "violation" in out


def test_unresolved_reference_exit_2():
    code, out = cli("hom-count", "y2", "nothing", "-i", path("substitution.txt"))
    assert code == 2
    assert "UnresolvedReference" in out


def test_parse_error_exit_2(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("base trivial\npoly p = Σ{i: Π{a: y}\n")
    code, out = cli("validate", "-i", str(bad))
    assert code == 2
    assert "line 3, column 1" in out


def test_usage_errors():
    assert cli("hom-count", "y2", "-i", path("substitution.txt"))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", "-i", path("substitution.txt")])
    assert exc.value.code == 2


def test_output_flag(tmp_path, capsys):
    out = tmp_path / "out.txt"
    code = main(["hom-count", "y2", "y1", "-i", path("substitution.txt"), "-o", str(out)])
    assert code == 0
    assert "3" in out.read_text()
    assert capsys.readouterr().out == ""


def test_deterministic():
    a = cli("cofree", "r2", "--depth", "3", "-i", path("loop.txt"))
    b = cli("cofree", "r2", "--depth", "3", "-i", path("loop.txt"))
    assert a == b


def test_iso_check():
    assert cli("iso-check", "assoc-comp", "y", "y", "y1", "-i", path("substitution.txt"))[0] == 0
    code, out = cli("iso-check", "y2", "y1", "-i", path("substitution.txt"))
    assert code == 1 and out.startswith("status failed")
