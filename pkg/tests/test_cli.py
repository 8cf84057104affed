import json
import subprocess
import sys

import pytest

from higgsforms.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_tables(capsys):
    assert run_json(capsys, "tables", "--n", "5")["f"] == \
        {"0": "-5", "1": "-1", "2": "0", "3": "0", "4": "1", "5": "5"}
    out = run_json(capsys, "tables", "--n", "3", "--k", "3")
    assert out["F"] == {"0": "-3", "1": "-1", "2": "1", "3": "3"}


@pytest.mark.parametrize("argv", [
    ["tables", "--n", "4"],
    ["tables", "--n", "1"],
    ["tables", "--n", "x"],
    ["hhym", "--n", "4", "--lambda", "0", "--C", "0"],
    ["hhym", "--n", "3", "--lambda", "1/0", "--C", "0"],
    ["slope", "--n", "3", "--set", "1,1"],
    ["slope", "--n", "3", "--set", "9"],
    ["verdict", "--n", "5", "--k", "3", "--deg-sign", "0", "--set", "5"],
    ["verdict", "--n", "5", "--k", "3", "--deg-sign", "0", "--set", "1,2"],
    ["verdict", "--n", "5", "--k", "4", "--deg-sign", "0", "--set", "1,5"],
    ["check", "--suite", "higgs", "--n", "7"],
    ["check", "--suite", "higgs", "--n", "3", "--k", "2"],
    ["check", "--suite", "warp", "--n", "3"],
    ["nonsense"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_slope(capsys):
    assert run_json(capsys, "slope", "--n", "3", "--set", "0,1,2,3")["report"]["slope_coeff"] == "1/2"
    assert run_json(capsys, "slope", "--n", "3", "--set", "0,1,2,3", "--against", "3")["diff"] == "-1/2"
    assert run_json(capsys, "slope", "--n", "5", "--set", "even", "--against", "odd")["diff"] == "0"
    assert run_json(capsys, "slope", "--n", "4", "--set", "E2")["set"] == [2, 3, 4]


@pytest.mark.parametrize("argv,tag", [
    (["--n", "5", "--k", "3", "--deg-sign", "-1", "--set", "1,3,5"], "ObstructedCaseI"),
    (["--n", "5", "--k", "3", "--deg-sign", "0", "--set", "4,5"], "NoObstructionFound"),
    (["--n", "5", "--k", "3", "--deg-sign", "0", "--set", "1,3,5"], "ObstructedCaseII"),
    (["--n", "5", "--k", "5", "--deg-sign", "1", "--set", "1,5", "--contains-omega"], "ObstructedCaseIII"),
    (["--n", "5", "--k", "5", "--deg-sign", "1", "--set", "1,5", "--contains-omega", "true"], "ObstructedCaseIII"),
])
def test_verdict(capsys, argv, tag):
    assert run_json(capsys, "verdict", *argv)["verdict"] == tag


def test_hhym(capsys):
    out = run_json(capsys, "hhym", "--n", "3", "--lambda", "0", "--C", "0")
    assert out["c"] == {"0": "1", "1": "1/3", "2": "-1/3", "3": "-1"}
    assert out["bookkeeping_identity"] is True
    shifted = run_json(capsys, "hhym", "--n", "3", "--lambda", "0", "--C", "3")
    assert shifted["c"] == {"0": "2", "1": "4/3", "2": "2/3", "3": "0"}
    # decimal input is read exactly
    assert run_json(capsys, "hhym", "--n", "3", "--lambda", "0.5", "--C", "0")["lambda"] == "1/2"


def test_check_suites(capsys):
    out = run_json(capsys, "check", "--suite", "higgs", "--n", "5", "--trials", "3")
    assert out["failed"] == 0
    assert any("trace" in c["check"] and c["pass"] for c in out["checks"])
    assert run_json(capsys, "check", "--suite", "nakano", "--n", "3", "--k", "3",
                    "--trials", "20", "--seed", "7")["failed"] == 0
    assert run_json(capsys, "check", "--suite", "all", "--n", "2", "--trials", "3")["failed"] == 0


def test_failed_check_exits_1(capsys, monkeypatch):
    from higgsforms import cli
    from higgsforms.checks import CheckResult
    monkeypatch.setattr(cli, "run_suite",
                        lambda *a: [CheckResult("higgs", "planted", False, {"word": 3})])
    code, out, err = run(capsys, "check", "--suite", "higgs", "--n", "3")
    assert code == 1
    assert json.loads(out)["failed"] == 1
    assert "planted" in err


def test_check_is_deterministic(capsys):
    argv = ["check", "--suite", "curvature", "--n", "3", "--seed", "11", "--trials", "4"]
    first = run(capsys, *argv)
    assert first == run(capsys, *argv)


def test_formats(capsys):
    code, out, _ = run(capsys, "--format", "csv", "hhym", "--n", "3", "--lambda", "1/2", "--C", "1")
    assert code == 0
    assert out.splitlines()[:2] == ["degree,c_p", "0,4/3"]
    code, text, _ = run(capsys, "hhym", "--n", "3", "--lambda", "0", "--C", "0", "--format", "text")
    assert code == 0 and "1/3" in text
    for fmt in ("csv", "text"):
        for argv in (["tables", "--n", "3"], ["slope", "--n", "3", "--set", "odd"],
                     ["verdict", "--n", "5", "--k", "3", "--deg-sign", "0", "--set", "E1"],
                     ["check", "--suite", "exterior", "--n", "2", "--trials", "2"]):
            code, out, _ = run(capsys, "--format", fmt, *argv)
            assert code == 0 and out.strip()


def test_no_floats_in_output(capsys):
    _, out, _ = run(capsys, "hhym", "--n", "5", "--lambda", "2/7", "--C", "-1/3")
    assert "." not in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "higgsforms", "tables", "--n", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["f"]["3"] == "3"
