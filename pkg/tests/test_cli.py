"""Command-line surface: subcommands, exit codes, output shape."""

import json
import subprocess
import sys

import pytest

from nilforms.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_filiform_text(capsys):
    code, out, _ = run(capsys, "analyze", "(0,0,12,13)")
    assert code == 0
    assert "betti" in out
    assert "(1, 2, 2, 2, 1)" in out or "1, 2, 2, 2, 1" in out
    assert "genuine" in out


def test_analyze_json_is_valid_and_deterministic(capsys):
    code, out, _ = run(capsys, "analyze", "(0,0,12,13)", "--json")
    assert code == 0
    first = json.loads(out)
    assert first["betti"] == [1, 2, 2, 2, 1]
    assert first["lcs"]["genuine_witness"]["theta"]["terms"] == [["1", [2]]]
    code, out2, _ = run(capsys, "analyze", "(0,0,12,13)", "--json")
    assert out == out2


def test_analyze_reports_kahler_admissibility(capsys):
    _, torus_out, _ = run(capsys, "analyze", "(0,0,0,0)")
    assert "Kahler admissible: yes" in torus_out
    _, kt_out, _ = run(capsys, "analyze", "(0,0,0,12)")
    assert "Kahler admissible: no" in kt_out


def test_analyze_quiet_one_liner(capsys):
    code, out, _ = run(capsys, "analyze", "kodaira_thurston", "--quiet")
    assert code == 0
    assert len(out.strip().splitlines()) == 1


def test_analyze_catalog_name_with_hermitian_defaults(capsys):
    code, out, _ = run(capsys, "analyze", "kodaira_thurston", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["hermitian"]["label"] == "vaisman"


def test_analyze_reads_json_file(tmp_path, capsys):
    doc = {"dim": 4, "d": {"4": [["1", [1, 2]]]}}
    path = tmp_path / "algebra.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "analyze", str(path), "--json")
    assert code == 0
    assert json.loads(out)["betti"] == [1, 3, 4, 3, 1]


def test_search_lcs_torus_reports_honestly(capsys):
    code, out, _ = run(capsys, "search-lcs", "(0,0,0,0)", "--height", "1")
    assert code == 0
    assert "NOT_FOUND_UP_TO_HEIGHT(1)" in out
    assert "81" in out
    assert "nonexistent" not in out.lower()


def test_search_lcs_filiform_finds_the_pair(capsys):
    code, out, _ = run(capsys, "search-lcs", "(0,0,12,13)", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "FOUND"
    assert doc["genuine_witness"]["theta"]["terms"] == [["1", [2]]]


def test_search_symplectic(capsys):
    code, out, _ = run(capsys, "search-symplectic", "(0,0,0,12)")
    assert code == 0
    assert "x1^x4 + x2^x3" in out


def test_search_symplectic_reports_exhaustive_nonexistence(capsys):
    # dx2=e12, dx3=e13, dx4=e14 has no closed nondegenerate 2-form
    doc = json.dumps({"dim": 4, "d": {
        "2": [["1", [1, 2]]], "3": [["1", [1, 3]]], "4": [["1", [1, 4]]]}})
    import io, sys as _sys
    _sys.stdin = io.StringIO(doc)
    try:
        code = main(["search-symplectic", "-"])
    finally:
        _sys.stdin = _sys.__stdin__
    out = capsys.readouterr().out
    assert code == 0
    assert "NONE" in out and "exhaustive" in out


def test_cohomology_with_twist(capsys):
    code, out, _ = run(capsys, "cohomology", "(0,0,12,13)", "--theta", "x2",
                       "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["betti"] == [0, 0, 0, 0, 0]


def test_verify_paper_passes(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "machine checks pass" in out
    assert "FAIL" not in out
    assert "NOTE" in out  # documented facts are printed, not asserted


def test_verify_paper_json(capsys):
    code, out, _ = run(capsys, "verify-paper", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_machine_pass"] is True
    assert any(c["provenance"] == "literature" for c in doc["checks"])


def test_model_check(capsys):
    code, out, _ = run(capsys, "model-check")
    assert code == 0
    assert "PASS structure_equations" in out


def test_exit_code_2_on_syntax_error(capsys):
    assert main(["analyze", "(0,0,1x)"]) == 2
    assert main(["analyze", "(0,0,21)"]) == 2


def test_exit_code_3_on_invalid_algebra(capsys):
    assert main(["analyze", "(0,0,12,34)"]) == 3
    err = capsys.readouterr().err
    assert "Jacobi" in err or "jacobi" in err


def test_exit_code_3_on_missing_file(capsys):
    assert main(["analyze", "no_such_file.json"]) == 3


def test_exit_code_2_on_schema_violation(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": 4, "d": {"4": [["1", [2, 1]]]}}))
    assert main(["analyze", str(path)]) == 2


def test_console_script_is_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "nilforms", "analyze", "(0,0,0,0)", "--quiet"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip()


def test_metric_without_acs_is_a_usage_error(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps([[1, 0, 0, 0], [0, 1, 0, 0],
                                [0, 0, 1, 0], [0, 0, 0, 1]]))
    assert main(["analyze", "(0,0,0,12)", "--metric", str(path)]) == 2
