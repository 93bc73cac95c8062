import io
import json

import pytest

from redtensor.catalog import builtin, serialize_category_file
from redtensor.cli import run


def call(*argv, environ=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err, environ=environ or {})
    return code, out.getvalue(), err.getvalue()


def test_validate_builtin():
    code, out, _ = call("validate", "builtin:Ising1")
    assert code == 0
    assert "pentagon OK hexagon OK" in out


def test_mme_group_law():
    code, out, _ = call("mme", "builtin:DoubleSemion", "builtin:DoubleSemion", "--over", "builtin:RepZ2")
    assert code == 0
    assert "identified ToricCode" in out


def test_unknown_base_is_a_usage_error():
    code, out, err = call("redprod", "builtin:Ising1", "builtin:Ising1", "--over", "nonexistent")
    assert code == 2
    assert "nonexistent" in err and not out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["redprod", "ToricCode"],
        ["validate", "ToricCode", "--mode", "symbolic"],
        ["redprod", "ToricCode", "ToricCode"],
    ],
)
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_parse_error_in_a_file(tmp_path):
    bad = tmp_path / "bad.cat"
    bad.write_text("category X\nsimples 1 a\nfusion a a ->\n", encoding="utf-8")
    code, _, err = call("validate", str(bad))
    assert code == 2 and err


def test_validation_failure_exits_one(tmp_path):
    # a semion whose self-braiding squares to 1 cannot satisfy the hexagons
    text = serialize_category_file(builtin("Semion"))
    assert "R s s : 1 = E(4)" in text
    path = tmp_path / "broken.cat"
    path.write_text(text.replace("R s s : 1 = E(4)", "R s s : 1 = 1"), encoding="utf-8")
    code, out, _ = call("validate", str(path))
    assert code == 1
    assert "hexagon FAIL" in out


def test_float_mode_matches_exact():
    code, out, _ = call("modular", "Semion", "--mode", "float")
    assert code == 0
    assert "+0.7071067812" in out


def test_float_mode_refused_for_exact_only_commands():
    code, _, err = call("redprod", "ToricCode", "ToricCode", "--over", "RepZ2", "--mode", "float")
    assert code == 2 and "exact" in err


def test_environment_and_flags():
    _, out, _ = call("redprod", "ToricCode", "ToricCode", "--over", "RepZ2", environ={"REDTENSOR_SEED": "3"})
    assert "seed=3" in out.splitlines()[0]
    _, out, _ = call("redprod", "ToricCode", "ToricCode", "--over", "RepZ2", "--seed", "5", environ={"REDTENSOR_SEED": "3"})
    assert "seed=5" in out.splitlines()[0]
    code, _, _ = call("redprod", "ToricCode", "ToricCode", "--over", "RepZ2", environ={"REDTENSOR_MODE": "float"})
    assert code == 2


def test_emit_round_trips_through_modular(tmp_path):
    path = tmp_path / "tc.cat"
    code, _, _ = call("redprod", "DoubleSemion", "DoubleSemion", "--over", "RepZ2", "--emit", str(path))
    assert code == 0
    code, out, _ = call("modular", str(path))
    assert code == 0
    assert "modular=yes" in out and "central_charge=0" in out


def test_structured_output_is_json():
    code, out, _ = call("redprod", "ToricCode", "DoubleSemion", "--over", "RepZ2", "--format", "structured")
    assert code == 0
    data = json.loads(out)
    assert all(data["checks"].values())
    assert len(data["fusion"]) == 16


def test_redprod_report_is_deterministic():
    first = call("redprod", "ToricCode", "DoubleSemion", "--over", "RepZ2")
    second = call("redprod", "ToricCode", "DoubleSemion", "--over", "RepZ2")
    assert first == second


def test_enrich_table():
    code, out, _ = call("enrich", "ToricCode", "--over", "RepZ2")
    assert code == 0
    assert "hom(m,m) = 1 ; halfbraiding: 1:1=[1] chi:chi=[-1]" in out
    assert out.strip().endswith("commutant 1 e")


def test_centre_structured_round_trips(tmp_path):
    code, out, _ = call("centre", "RepZ2", "--format", "structured")
    assert code == 0
    path = tmp_path / "z.cat"
    path.write_text(out, encoding="utf-8")
    assert call("modular", str(path))[0] == 0
