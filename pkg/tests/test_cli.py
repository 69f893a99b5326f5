import json
import subprocess
import sys

import pytest

from sheffer_dunkl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gamma_pretty(capsys):
    code, out, _ = run(capsys, "gamma", "--nu", "-1/2", "--max", "5")
    assert code == 0
    assert [line.split(" = ")[1] for line in out.splitlines()] == ["1", "1", "2", "6", "24", "120"]


def test_gamma_json_and_csv(capsys):
    _, out, _ = run(capsys, "gamma", "--nu", "0", "--max", "3", "--format", "json")
    assert json.loads(out) == {"nu": "0", "gamma": ["1", "2", "4", "16"]}
    _, out, _ = run(capsys, "gamma", "--nu", "0", "--max", "2", "--format", "csv")
    assert out == "n,gamma\n0,1\n1,2\n2,4\n"


def test_verify_thorne_exit_codes(capsys):
    code, out, _ = run(capsys, "verify-thorne", "--family", "euler", "--nu", "1/4", "--n-max", "8")
    assert code == 0 and out.strip().endswith("all_pass: True")
    code, out, _ = run(capsys, "verify-thorne", "--family", "truncated", "--nu", "0", "--n-max", "4",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["all_pass"] and len(data["pairs"]) == 15


def test_usage_errors(capsys):
    assert run(capsys, "sequence", "--family", "truncated", "--nu", "-2")[0] == 2
    assert run(capsys, "sequence", "--family", "laguerre", "--nu", "0")[0] == 2
    assert run(capsys, "sequence", "--family", "truncated", "--nu", "0", "-N", "20")[0] == 2
    assert run(capsys, "sequence", "--family", "truncated", "--nu", "zero")[0] == 2
    assert run(capsys, "besselk-check", "--density", "besselK_signed", "--nu", "0.5")[0] == 2


def test_order_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("SHEFFER_DUNKL_ORDER", "4")
    assert run(capsys, "sequence", "--family", "euler", "--nu", "0", "-N", "5")[0] == 2
    assert run(capsys, "sequence", "--family", "euler", "--nu", "0", "-N", "5", "--order", "5")[0] == 0
    code, out, _ = run(capsys, "sequence", "--family", "euler", "--nu", "0", "--format", "json")
    assert code == 0 and len(json.loads(out)["polys"]) == 5


def test_sequence_json_schema(capsys):
    code, out, _ = run(capsys, "sequence", "--family", "truncated", "--nu", "0", "-N", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "family": "truncated",
        "nu": "0",
        "polys": [{"coeffs": ["1"], "nu": "0"}, {"coeffs": ["2", "1"], "nu": "0"},
                  {"coeffs": ["4", "2", "1"], "nu": "0"}],
    }


@pytest.mark.parametrize("family", ["truncated", "bernoulli", "boole"])
def test_verify_sheffer(capsys, family):
    code, out, _ = run(capsys, "verify-sheffer", "--family", family, "--nu", "1/4", "--n-max", "6",
                       "--format", "json")
    assert code == 0 and json.loads(out)["all_pass"]


def test_moments(capsys):
    code, out, _ = run(capsys, "moments", "--family", "truncated", "--nu", "0", "-N", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["mu"] == ["1", "-2", "0", "0"]
    assert data["omega"] == ["1", "2", "4", "16"]
    assert data["two_pi_F"] == {"real": ["1", "0", "0", "0"], "imag": ["0", "-2", "0", "0"]}


def test_besselk_check(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "besselk-check", "--density", "besselK_even", "--nu", "0", "--n-max", "4",
                       "--format", "json", "--output", str(target))
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert data["pass"] and data["density"] == "besselK_even" and len(data["rows"]) == 5


def test_failed_check_exits_one(capsys):
    code, out, _ = run(capsys, "besselk-check", "--density", "besselK_signed", "--nu", "-3/4", "--n-max", "3",
                       "--tol", "1e-30")
    assert code == 1 and "pass: False" in out


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "sheffer_dunkl.cli", "verify-thorne", "--family", "boole", "--nu", "3/2",
           "--n-max", "6", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
