import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from polyode.cli import main

SCHEMA = json.loads(resources.files("polyode").joinpath("schema/output.schema.json").read_text())
HERMITE = ["--a20", "0", "--a21", "0", "--a22", "1", "--a10", "-2", "--a11", "0"]
LAGUERRE = ["--a20", "0", "--a21", "1", "--a22", "0", "--a10", "-1", "--a11", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def doc(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    d = json.loads(out)
    jsonschema.validate(d, SCHEMA)
    return code, d


def test_docs_schema_matches_packaged():
    docs = Path(__file__).resolve().parents[1] / "docs" / "output.schema.json"
    assert json.loads(docs.read_text()) == SCHEMA


def test_solve_all_methods(capsys):
    code, d = doc(capsys, "solve", *HERMITE, "--n", "2", "--method", "all")
    assert code == 0
    r = d["results"]
    assert r["methods_agree"]
    for m in ("recurrence", "closed", "oracle"):
        assert r["methods"][m]["coeffs"] == ["-2/1", "0/1", "4/1"]
    assert r["tau"] == "-4/1"
    assert r["case"] == "IV"
    assert d["schema_version"] == "1"


def test_solve_degree_zero(capsys):
    code, d = doc(capsys, "solve", *HERMITE, "--n", "0")
    assert code == 0
    assert d["results"]["methods"]["recurrence"]["coeffs"] == ["1/1"]


def test_solve_no_degenerate_denominator_in_documented_example(capsys):
    # a10 = -4 a20 only hits 2n a20 + a10 = 0 at n = 2, which the n = 2 family never evaluates
    code, d = doc(capsys, "solve", "--a20", "1", "--a21", "0", "--a22", "0", "--a10", "-4", "--a11", "1", "--n", "2")
    assert code == 0
    assert d["results"]["methods"]["recurrence"]["engine"] == "recurrence"


def test_solve_fallback_and_refusal(capsys):
    args = ["--a20", "1", "--a21", "0", "--a22", "0", "--a10", "-1", "--a11", "1", "--n", "3"]
    code, d = doc(capsys, "solve", *args)
    assert code == 0
    rec = d["results"]["methods"]["recurrence"]
    assert rec["engine"] == "series_oracle"
    assert rec["coeffs"] == ["1/1", "3/1", "6/1", "6/1"]
    assert any("series oracle" in s for s in d["diagnostics"])
    code, d = doc(capsys, "solve", *args, "--no-fallback")
    assert code == 3
    assert "error" in d["results"]["methods"]["recurrence"]


def test_solve_csv_and_latex(capsys):
    code, out, _ = run(capsys, "solve", *HERMITE, "--n", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["method,power,coefficient", "recurrence,0,0/1", "recurrence,1,12/1",
                                "recurrence,2,0/1", "recurrence,3,-8/1"]
    code, out, _ = run(capsys, "solve", *HERMITE, "--n", "3", "--format", "latex")
    assert "y_{3}(x) = -8x^{3} + 12x" in out


def test_parse_errors_exit_2(capsys):
    code, _, err = run(capsys, "solve", "--a20", "x", "--a21", "0", "--a22", "1", "--a10", "-2", "--a11", "0",
                       "--n", "1")
    assert code == 2
    code, _, err = run(capsys, "solve", *HERMITE)
    assert code == 2 and "--n" in err
    code, _, err = run(capsys, "solve", "--a20", "0", "--a21", "0", "--a22", "0", "--a10", "1", "--a11", "0",
                       "--n", "1")
    assert code == 2 and "second order" in err
    code, _, err = run(capsys, "solve", *HERMITE, "--n", "-1")
    assert code == 2


def test_classify(capsys):
    code, d = doc(capsys, "classify", *LAGUERRE, "--n", "2")
    assert code == 0
    assert d["results"]["case"] == "V"
    assert d["results"]["closed_form"]["kind"] == "1F1"


def test_weight(capsys):
    code, d = doc(capsys, "weight", *LAGUERRE, "--nmax", "2")
    assert code == 0
    r = d["results"]
    assert r["gram"][1][1] == pytest.approx(1.0, rel=1e-10)
    assert abs(r["gram"][0][2]) < 1e-8
    assert r["support"] == [0.0, "inf"]


def test_weight_cap_and_violation(capsys):
    code, d = doc(capsys, "weight", "--a20", "1", "--a21", "0", "--a22", "0", "--a10", "-6", "--a11", "1",
                  "--nmax", "5")
    assert code == 0
    assert d["results"]["nmax"] == 3
    assert any("reduced" in s for s in d["diagnostics"])
    code, d = doc(capsys, "weight", "--a20", "0", "--a21", "0", "--a22", "1", "--a10", "2", "--a11", "0")
    assert code == 3
    assert not d["results"]["constraints"][1]["satisfied"]


def test_weight_env_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("POLYODE_QUAD_TOL", "1e-6")
    code, d = doc(capsys, "weight", *LAGUERRE, "--nmax", "1")
    assert code == 0
    assert d["inputs"]["quad_tol"] is None
    assert d["results"]["gram"][1][1] == pytest.approx(1.0, rel=1e-6)


def test_verify_passes_and_is_deterministic(capsys):
    argv = ["verify", "--trials", "10", "--nmax", "4", "--seed", "7"]
    code, first, _ = run(capsys, *argv)
    assert code == 0
    d = json.loads(first)
    jsonschema.validate(d, SCHEMA)
    assert d["results"]["all_passed"]
    names = {s["name"] for s in d["results"]["suites"]}
    assert {"oracle", "closed_form", "orthogonality", "pearson", "aim"} <= names
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_verify_case_filter(capsys):
    code, d = doc(capsys, "verify", "--case", "V", "--trials", "4", "--nmax", "3", "--suite", "oracle")
    assert code == 0
    assert d["results"]["suites"][0]["trials"] == 4
    code, _, _ = run(capsys, "verify", "--case", "VII")
    assert code == 2


def test_aim(capsys):
    code, d = doc(capsys, "aim", *HERMITE, "--nmax", "3")
    assert code == 0
    assert d["results"]["zero_set"] == ["-6/1", "-4/1", "-2/1", "0/1"]
    assert d["results"]["factorization_ok"]
    code, _, _ = run(capsys, "aim", *HERMITE, "--nmax", "8")
    assert code == 2


def test_theorem2(capsys):
    code, d = doc(capsys, "theorem2", *LAGUERRE, "--Q", "0,0,1", "--n", "2")
    assert code == 0
    assert d["results"]["max_residual"] <= 1e-8
    assert d["results"]["exact_residual_zero"]


def test_catalog(capsys):
    code, d = doc(capsys, "catalog", "--name", "laguerre", "--args", "alpha=0", "--nmax", "3")
    assert code == 0
    assert [r["ratio"] for r in d["results"]["rows"]] == ["1/1", "1/1", "2/1", "6/1"]
    code, d = doc(capsys, "catalog", "--list")
    assert len(d["results"]["entries"]) == 11
    code, _, _ = run(capsys, "catalog", "--name", "nope")
    assert code == 2
    code, _, _ = run(capsys, "catalog", "--name", "jacobi", "--args", "alpha=1")
    assert code == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "polyode", "solve", *HERMITE, "--n", "1"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["results"]["methods"]["recurrence"]["coeffs"] == ["0/1", "-2/1"]
