import json
import subprocess
import sys
from pathlib import Path

from fano64.cli import main

FANS = Path(__file__).resolve().parent.parent / "fans"
P3 = str(FANS / "p3.fan")
X66 = str(FANS / "x66.fan")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_wps_table_output(capsys):
    code, out, _ = run(capsys, "wps", "6", "4", "1", "1")
    assert code == 0
    assert "degree: 72" in out
    assert "anticanonical index: 12" in out
    assert "gorenstein: true" in out
    assert "1/6(4,1,1)" in out
    assert "edge 0-1: 1/2(1,1)" in out


def test_wps_machine_output(capsys):
    code, out, _ = run(capsys, "wps", "6", "4", "1", "1", "--machine")
    assert code == 0
    doc = json.loads(out)
    assert doc["degree"] == "72"
    assert doc["genus"] == 37
    assert doc["ambient_dim"] == 38
    assert doc["gorenstein"] is True
    assert doc["vertex_singularities"] == [
        "1/6(4,1,1)",
        "1/4(2,1,1)",
        "smooth",
        "smooth",
    ]


def test_wps_fractional_degree_has_no_genus_row(capsys):
    code, out, _ = run(capsys, "wps", "2", "1", "1", "1")
    assert code == 0
    assert "degree: 125/2" in out
    assert "genus" not in out


def test_wps_rejects_bad_weights(capsys):
    code, _, err = run(capsys, "wps", "5", "0", "1", "1")
    assert code == 1
    assert "error:" in err


def test_bundle_evaluation(capsys):
    code, out, _ = run(capsys, "bundle", "--base", "F0", "--c1", "2,2", "--c2", "0")
    assert code == 0
    assert "degree: 64" in out
    assert "-K: 2D" in out

    code, out, _ = run(
        capsys, "bundle", "--base", "F2", "--c1=-2,-2", "--c2=-2"
    )
    assert code == 0
    assert "degree: 64" in out
    assert "-K: 2D + pi*(4h+6l)" in out
    assert "chi: 2" in out


def test_bundle_solve_reports_non_integral_c2(capsys):
    code, out, _ = run(
        capsys, "bundle", "--base", "P2", "--c1", "0", "--solve-degree", "64"
    )
    assert code == 0
    assert "-5/4" in out
    assert "NON-INTEGRAL" in out


def test_bundle_solve_machine(capsys):
    code, out, _ = run(
        capsys,
        "bundle",
        "--base",
        "F1",
        "--c1=-2,-2",
        "--solve-degree",
        "64",
        "--machine",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["c2"] == "-1"
    assert doc["integral"] is True


def test_bundle_argument_errors(capsys):
    code, _, err = run(capsys, "bundle", "--base", "F9", "--c1", "1,1", "--c2", "0")
    assert code == 1
    assert "invalid choice" in err

    code, _, err = run(capsys, "bundle", "--base", "P2", "--c1", "1,2", "--c2", "0")
    assert code == 1
    assert "single coefficient" in err

    code, _, err = run(capsys, "bundle", "--base", "F0", "--c1", "1,1")
    assert code == 1  # needs --c2 or --solve-degree


def test_toric_degree_with_matching_expectation(capsys):
    code, out, _ = run(capsys, "toric", P3, "degree", "--expect", "64")
    assert code == 0
    assert "degree: 64" in out
    assert "match" in out


def test_toric_degree_reports_value_next_to_expectation(capsys):
    code, out, _ = run(capsys, "toric", X66, "degree", "--expect", "66")
    assert code == 0
    assert "degree: 66" in out
    assert "expected: 66 (match)" in out


def test_toric_degree_mismatch_exits_two(capsys):
    code, out, _ = run(capsys, "toric", X66, "degree", "--expect", "64")
    assert code == 2
    assert "MISMATCH" in out


def test_toric_degree_machine(capsys):
    code, out, _ = run(capsys, "toric", X66, "degree", "--expect", "66", "--machine")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"degree": "66", "expected": 66, "match": True, "vertices": 5}


def test_toric_validate_lists_findings(capsys):
    code, out, _ = run(capsys, "toric", X66, "validate")
    assert code == 0
    assert "cone 2 is not strongly convex" in out
    assert "cone 2 has no integral Gorenstein support vector" in out

    code, out, _ = run(capsys, "toric", P3, "validate")
    assert code == 0
    assert "clean" in out


def test_toric_singularity_report(capsys):
    code, out, _ = run(capsys, "toric", X66, "singularities")
    assert code == 0
    assert "index 2, transverse-A1, witness (0,-1,1)" in out
    assert "no integral Gorenstein support" in out
    assert "non-simplicial" in out


def test_toric_file_errors(capsys):
    code, _, err = run(capsys, "toric", str(FANS / "missing.fan"), "degree")
    assert code == 1
    assert "error:" in err


def test_toric_rejects_float_entries(tmp_path, capsys):
    bad = tmp_path / "bad.fan"
    bad.write_text('{"rays": [[1, 0, 0.5]], "cones": [[0]]}')
    code, _, err = run(capsys, "toric", str(bad), "degree")
    assert code == 1
    assert "only integers" in err


def test_reproduce_table(capsys):
    code, out, _ = run(capsys, "reproduce")
    assert code == 0
    assert "all checks passed" in out
    assert "survives: cone over P1 x P1" in out
    assert "survives: cone over F1" in out
    assert "degree 64: P3" in out


def test_reproduce_machine(capsys):
    code, out, _ = run(capsys, "reproduce", "--machine")
    assert code == 0
    doc = json.loads(out)
    assert doc["failures"] == []
    assert sorted(doc["parts"]) == [
        "classification",
        "p1-bundles",
        "quadric-filter",
        "twisted-sweep",
    ]
    assert len(doc["parts"]["classification"]) == 7
    assert sorted(doc["parts"]["twisted-sweep"]) == ["F0", "F2", "F3", "F4", "P2"]


def test_reproduce_single_part(capsys):
    code, out, _ = run(capsys, "reproduce", "--part", "p1-bundles", "--machine")
    assert code == 0
    doc = json.loads(out)
    assert sorted(doc["parts"]) == ["p1-bundles"]
    assert len(doc["parts"]["p1-bundles"]) == 10


def test_machine_records_round_trip_through_the_serializer(capsys):
    from fano64.elimination import eliminate_p1_bundles, record_from_payload

    code, out, _ = run(capsys, "reproduce", "--part", "p1-bundles", "--machine")
    assert code == 0
    doc = json.loads(out)
    rebuilt = [record_from_payload(p) for p in doc["parts"]["p1-bundles"]]
    assert rebuilt == eliminate_p1_bundles(64)


def test_no_arguments_is_a_usage_error(capsys):
    code, _, _ = run(capsys)
    assert code == 1


def test_console_script_is_installed():
    out = subprocess.run(
        [sys.executable, "-m", "fano64.cli", "wps", "1", "1", "1", "1"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert "degree: 64" in out.stdout
