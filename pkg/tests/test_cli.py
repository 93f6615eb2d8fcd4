import io
import json
import shutil
import subprocess
import sys

import pytest

from garside_growth import _fixtures
from garside_growth.cli import dump_json, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_growth_a2():
    code, out, _ = run("growth", "A2", "--terms", "4")
    assert code == 0
    assert out.splitlines() == ["1 - 2*t + t^3", "1, 2, 4, 7, 12"]


@pytest.mark.parametrize("argv", [
    ("growth", "Z9"),
    ("moebius", "A0"),
    ("table", "E6", "--rows", "3"),
    ("moebius", "E6", "--method", "det"),
    ("theta", "--terms", "1", "--estimate"),
    ("table", "A3"),
    ("rate", "E8", "--sequence", "5"),
    ("frobnicate",),
])
def test_usage_errors(argv):
    code, _, err = run(*argv)
    assert code == 2
    assert err


def test_moebius_json():
    code, out, _ = run("moebius", "A3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == ["spec", "method", "polynomial", "degree"]
    assert doc == {"spec": "A3", "method": "det", "polynomial": ["1", "-3", "1", "2", "0", "0", "-1"], "degree": "6"}


def test_moebius_methods_agree():
    outs = {run("moebius", "D5", "--method", m)[1] for m in ("det", "ie", "rec")}
    assert len(outs) == 1


@pytest.mark.parametrize("argv", [
    ("moebius", "E7", "--json"),
    ("table", "B3", "--rows", "6", "--json"),
    ("table", "Ainf", "--rows", "6", "--json"),
    ("theta", "--terms", "30", "--estimate", "--json"),
    ("theta", "--terms", "10", "--power", "3", "--json"),
    ("rate", "H4", "--json"),
    ("rate", "A", "--sequence", "4", "--json"),
    ("growth", "I2(7)", "--terms", "12", "--json"),
])
def test_json_round_trip(argv):
    code, out, _ = run(*argv)
    assert code == 0
    assert dump_json(json.loads(out)) == out


def test_json_integers_are_strings():
    _, out, _ = run("theta", "--terms", "60", "--json")
    doc = json.loads(out)
    assert all(isinstance(x, str) for x in doc["coefficients"])
    assert int(doc["coefficients"][60]) > 2**64


def test_table_csv_matches_figure():
    code, out, _ = run("table", "A3", "--rows", "6", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,1,2,3,4"
    rows = [[int(x) for x in line.split(",")[1:]] for line in lines[1:]]
    assert rows == _fixtures.reference_tables()["A3"]


def test_table_plain_ainf():
    code, out, _ = run("table", "Ainf", "--rows", "4", "--columns", "3", "--route", "delegate")
    assert code == 0
    assert len(out.splitlines()) == 6


def test_rate_plain_and_json():
    _, out, _ = run("rate", "A2")
    assert out.startswith("1.6180339887498948")
    _, out, _ = run("rate", "A2", "--bits", "32", "--json")
    doc = json.loads(out)
    assert list(doc) == ["spec", "root_lo", "root_hi", "rho", "bits"]
    assert doc["bits"] == "32"


def test_rate_sequence_plain():
    code, out, _ = run("rate", "B", "--sequence", "3")
    assert code == 0
    assert len(out.splitlines()) == 3


def test_theta_estimate_is_labelled():
    code, out, _ = run("theta", "--terms", "40", "--estimate")
    assert code == 0
    assert "estimate at depth 40" in out


def test_verify_d4():
    code, out, _ = run("verify", "D4", "--max-k", "6")
    assert code == 0
    assert "FAIL" not in out
    assert "oracle 732 = table 732 = series 732" in out


def test_verify_default():
    code, out, _ = run("verify")
    assert code == 0
    assert out.splitlines()[-1].endswith("0 failed")


def test_verify_budget_skips(monkeypatch):
    monkeypatch.setenv("GARSIDE_ORACLE_BUDGET", "10")
    code, out, _ = run("verify", "A3", "--max-k", "4")
    assert code == 0
    assert "SKIP" in out


def test_verify_reports_corrupt_fixture(tmp_path):
    src = _fixtures.fixture_dir()
    for name in _fixtures.FIXTURE_FILES:
        shutil.copy(src / name, tmp_path / name)
    doc = json.loads((tmp_path / _fixtures.TABLES).read_text())
    doc["tables"]["B3"][4][1] += 1
    (tmp_path / _fixtures.TABLES).write_text(json.dumps(doc))
    code, out, _ = run("verify", "--fixtures", str(tmp_path))
    assert code == 1
    fails = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert fails and all(_fixtures.TABLES in line for line in fails)
    assert "B3" in fails[0]


def test_verify_missing_fixture(tmp_path):
    code, out, _ = run("verify", "--fixtures", str(tmp_path))
    assert code == 1
    assert _fixtures.THETA in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "garside_growth", "growth", "A1", "--terms", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "1, 1, 1, 1"
