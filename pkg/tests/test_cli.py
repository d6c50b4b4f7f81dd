import json

import pytest

from diskvar.cli import cli_main
from diskvar.functions import eval_jet, function_from_json
from diskvar.moebius import Jet2


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert err == ""
    return code, json.loads(out)


def test_disk_second_golden(capsys):
    code, out, err = run(
        capsys, "disk", "second", "--z0", "0.5,0", "--delta0", "0.3,0", "--delta1", "0.2,0"
    )
    assert code == 0 and err == ""
    assert out == '{"center":[0.2847288888888889,0.0],"radius":3.106133333333333}\n'


def test_disk_subcommands(capsys):
    code, doc = run_json(capsys, "disk", "schwarz-pick", "--z0", "0.5,0", "--delta0", "0,0")
    assert code == 0
    assert doc == {"center": [0.0, 0.0], "radius": pytest.approx(4.0 / 3.0)}

    code, doc = run_json(capsys, "disk", "rogosinski", "--z0", "0.5,0", "--delta1", "0,0")
    assert code == 0
    assert doc == {"center": [0.0, 0.0], "radius": 0.25}

    code, doc = run_json(capsys, "disk", "mercer", "--z0", "0.5,0", "--w0", "0.25,0", "--z", "0.8,0")
    assert code == 0
    assert doc == {"center": [pytest.approx(0.32), 0.0], "radius": pytest.approx(0.32)}

    code, doc = run_json(capsys, "disk", "dieudonne", "--z0", "0.5,0", "--w0", "0.25,0")
    assert code == 0
    assert doc == {"center": [0.5, 0.0], "radius": 0.5}

    code, doc = run_json(
        capsys, "disk", "dieudonne2", "--z0", "0.5,0", "--w0", "0.25,0", "--delta1", "0.3,0"
    )
    assert code == 0
    assert doc["w1"] == [pytest.approx(0.65), 0.0]
    assert doc["center"] == [pytest.approx(0.74), 0.0]
    assert doc["radius"] == pytest.approx(1.2133333333333333)


def test_bound_szasz_golden(capsys):
    code, out, err = run(capsys, "bound", "szasz", "--r", "0.5")
    assert code == 0 and err == ""
    assert out == '{"value":3.78125,"branch":"szasz","extremal":{"theta":"arbitrary"}}\n'


def test_bound_thm31_accepts_point_or_magnitude(capsys):
    code, by_mag = run_json(capsys, "bound", "thm31", "--r", "0.5", "--R", "0.9")
    assert code == 0
    assert by_mag["branch"] == "deg1"
    # leading minus needs the = form, as usual with argparse
    code, by_point = run_json(capsys, "bound", "thm31", "--z0", "0,0.5", "--delta0=-0.9,0")
    assert code == 0
    assert by_point["value"] == pytest.approx(by_mag["value"])


def test_bound_requires_r_or_z0(capsys):
    code, out, err = run(capsys, "bound", "thm31", "--R", "0.5")
    assert code == 2
    assert "--r or --z0" in err


def test_bound_emit_function_attains(capsys):
    code, doc = run_json(
        capsys, "bound", "thm31", "--z0", "0.3,0.1", "--delta0", "0.2,-0.4", "--emit-function"
    )
    assert code == 0
    g = function_from_json(json.dumps(doc["function"]))
    jet = eval_jet(g, 0.3 + 0.1j)
    assert abs(jet.f2) == pytest.approx(doc["value"], rel=1e-10)


def test_bound_ruscheweyh(capsys):
    code, doc = run_json(capsys, "bound", "ruscheweyh", "--n", "2", "--r", "0.5", "--R", "0.25")
    assert code == 0
    assert doc["value"] == pytest.approx(2.0 * (1.0 - 0.0625) / (0.5**2 * 1.5))
    assert doc["branch"] == "ruscheweyh"


def test_bound_table_csv_and_json(capsys):
    code, out, err = run(capsys, "bound", "table", "--r-grid", "0.5", "--R-grid", "0,0.9", "--csv")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "r,R,thm31,ruscheweyh2,szasz,branch"
    assert len(lines) == 3

    code, rows = run_json(capsys, "bound", "table", "--r-grid", "0.5", "--R-grid", "0,0.9")
    assert code == 0
    assert [row["branch"] for row in rows] == ["deg2-zero", "deg1"]
    assert all(row["dominates"] for row in rows)


def test_extremal_emit_roundtrip(capsys):
    code, doc = run_json(
        capsys,
        "extremal", "emit",
        "--kind", "second-boundary",
        "--z0", "0.4,0", "--delta0", "0.2,0", "--delta1", "0.3,0", "--alpha", "1,0",
    )
    assert code == 0
    assert doc["kind"] == "second-boundary"
    g = function_from_json(json.dumps(doc["function"]))
    jet = eval_jet(g, 0.4 + 0j)
    assert isinstance(jet, Jet2)
    assert jet.f0 == pytest.approx(0.2 + 0j, abs=1e-12)


def test_extremal_verify_pass_and_fail(capsys):
    args = (
        "extremal", "verify",
        "--kind", "schwarz-pick",
        "--z0", "0.3,0", "--delta0", "0.1,0",
    )
    code, doc = run_json(capsys, *args, "--alpha", "1,0")
    assert code == 0
    assert doc["passed"] is True and doc["distance"] < 1e-12

    # interior alpha lands strictly inside the disk: verification fails
    code, doc = run_json(capsys, *args, "--alpha", "0.5,0")
    assert code == 1
    assert doc["passed"] is False


def test_extremal_verify_missing_parameter(capsys):
    code, out, err = run(capsys, "extremal", "verify", "--kind", "schwarz-pick", "--z0", "0.3,0")
    assert code == 2
    assert "requires parameter" in err


def test_malformed_complex_literal(capsys):
    code, out, err = run(capsys, "disk", "schwarz-pick", "--z0", "zebra", "--delta0", "0,0")
    assert code == 2
    assert "RE,IM" in err


def test_domain_error_exit_code(capsys):
    code, out, err = run(capsys, "disk", "dieudonne", "--z0", "0.5,0", "--w0", "0.6,0")
    assert code == 2
    assert err.startswith("error:")
    assert "|w0| < |z0|" in err


def test_verify_membership_exit_zero(capsys):
    code, doc = run_json(capsys, "verify", "membership", "--samples", "60", "--seed", "3")
    assert code == 0
    assert doc["suite"] == "membership:second+dieudonne+mercer"
    assert doc["violations"] == 0


def test_verify_membership_families_subset(capsys):
    code, doc = run_json(
        capsys, "verify", "membership", "--samples", "40", "--families", "mercer"
    )
    assert code == 0
    assert doc["suite"] == "membership:mercer"


def test_verify_attainment_kinds_filter(capsys):
    code, doc = run_json(capsys, "verify", "attainment", "--kinds", "szasz")
    assert code == 0
    assert doc["details"]["kinds"] == ["szasz"]
    assert doc["violations"] == 0


def test_verify_tightness(capsys):
    code, doc = run_json(
        capsys, "verify", "tightness", "--samples", "200", "--r", "0.5", "--R", "0.25"
    )
    assert code == 0
    assert doc["details"]["gap"] <= 1e-6


def test_out_writes_file(capsys, tmp_path):
    path = tmp_path / "disk.json"
    code, out, err = run(
        capsys,
        "disk", "dieudonne", "--z0", "0.5,0", "--w0", "0.25,0", "--out", str(path),
    )
    assert code == 0 and out == "" and err == ""
    assert json.loads(path.read_text()) == {"center": [0.5, 0.0], "radius": 0.5}


def test_repeated_invocations_are_byte_identical(capsys):
    argv = ("verify", "membership", "--samples", "50", "--seed", "11")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_help_exits_zero(capsys):
    code, out, err = run(capsys, "--help")
    assert code == 0
    assert "disk" in out and "bound" in out and "verify" in out
