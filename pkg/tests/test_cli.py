import json
import subprocess
import sys

import pytest

from painleve_tau.adler_moser import pii_rational, yv_polynomial
from painleve_tau.cli import run, sample_rows
from painleve_tau.ohyama import rho_recurrence
from painleve_tau.serialize import from_jsonable, loads


def call(argv, capsys):
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_ohyama_rho3(capsys):
    code, out, _ = call(["ohyama", "--n", "3", "--route", "wronskian"], capsys)
    assert code == 0
    assert out.strip() == '{"var":"s","lowest":0,"coeffs":["5","4","1"]}'


@pytest.mark.parametrize("route", ["wronskian", "recurrence", "bc"])
@pytest.mark.parametrize("profile", ["canonical", "alternate"])
def test_ohyama_routes_round_trip(route, profile, capsys):
    code, out, _ = call(["ohyama", "--n", "-5", "--route", route, "--profile", profile], capsys)
    assert code == 0 and loads(out) == rho_recurrence(-5)


def test_ohyama_other_objects(capsys):
    for obj in ("P", "V", "theta", "sigma"):
        code, out, _ = call(["ohyama", "--n", "2", "--object", obj], capsys)
        assert code == 0 and json.loads(out)
    code, out, _ = call(["ohyama", "--n", "3", "--format", "csv"], capsys)
    assert out.splitlines() == ["power,coefficient", "0,5", "1,4", "2,1"]


def test_yv(capsys):
    code, out, _ = call(["yv", "--n", "2"], capsys)
    assert code == 0
    assert json.loads(out) == {"var": "z", "lowest": 0, "coeffs": ["4/3", "0", "0", "1/3"]}
    code, out2, _ = call(["yv", "--n", "2", "--route", "determinant"], capsys)
    assert out2 == out
    for n in range(6):
        _, out, _ = call(["yv", "--n", str(n)], capsys)
        assert loads(out) == yv_polynomial(n)


def test_pii(capsys):
    code, out, _ = call(["pii", "--alpha", "1"], capsys)
    data = json.loads(out)
    assert code == 0 and data["ell"] == "3/2"
    assert from_jsonable(data["q"]) == pii_rational(1).q


def test_verify_passes(capsys):
    code, out, err = call(["verify", "--suite", "ohyama", "--n-max", "2"], capsys)
    assert code == 0
    checks = json.loads(out)
    assert checks and all(c["ok"] for c in checks)
    assert "all passed" in err


def test_verify_fail_demo(capsys):
    code, out, err = call(["verify", "--suite", "ohyama", "--n-max", "2", "--then-fail-demo"], capsys)
    assert code == 1
    failed = [c for c in json.loads(out) if not c["ok"]]
    assert failed == [{"suite": "ohyama", "identity": "P3D7", "index": 2, "ok": False}]
    assert "injected failure: suite=ohyama identity=P3D7 index=2" in err


@pytest.mark.parametrize("suite", ["adler_moser", "genfun"])
def test_verify_other_suites(suite, capsys):
    code, _, _ = call(["verify", "--suite", suite, "--n-max", "2"], capsys)
    assert code == 0
    code, out, err = call(["verify", "--suite", suite, "--n-max", "2", "--then-fail-demo", "--format", "csv"], capsys)
    assert code == 1 and "injected failure" in err
    assert out.startswith("suite,identity,index,ok")


def test_usage_errors(capsys):
    code, out, err = call(["yv", "--n", "2", "--bogus"], capsys)
    assert code == 2 and out == "" and "usage:" in err
    code, _, err = call(["frobnicate"], capsys)
    assert code == 2 and "usage:" in err
    code, _, _ = call(["yv", "--n", "-1"], capsys)
    assert code == 2
    code, _, _ = call(["verify", "--n-max", "0"], capsys)
    assert code == 2
    code, _, _ = call(["sample", "--expr", "q", "--grid", "1,2"], capsys)
    assert code == 2
    code, _, _ = call(["genfun", "--delta", "3"], capsys)
    assert code == 2


def test_sample_examples():
    _, rows = sample_rows("P", 0, [1])
    assert rows[0][1:] == ("1", "1")
    _, rows = sample_rows("P", 1, [1])
    assert rows[0][2] == "4/3"
    _, rows = sample_rows("q", 1, [2])
    assert rows[0][1:] == ("-0.5", "-1/2")


def test_sample_cli_flags_poles(capsys):
    code, out, err = call(["sample", "--expr", "q", "--alpha", "2", "--grid=-2:2:5", "--digits", "6"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "z,value,exact"
    assert "0,pole,pole" in lines
    assert "pole" in err
    code, out, _ = call(["sample", "--expr", "V", "--n", "1", "--grid", "1", "--format", "json"], capsys)
    assert json.loads(out)[0]["exact"] == "-19/144"


def test_genfun(capsys):
    code, out, _ = call(["genfun", "--delta", "-1", "--order", "4", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and len(data["coeffs"]) == 5
    assert data["coeffs"][1]["body"]["coeffs"][0] == ["0", "5/18", "0", "0"]
    code, out, _ = call(["genfun", "--lax"], capsys)
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "zeta,lambda,residual1,residual2" and len(rows) == 10
    assert all(float(r.split(",")[2]) < 1e-8 and float(r.split(",")[3]) < 1e-8 for r in rows[1:])


def test_deterministic_output(capsys):
    argv = ["verify", "--suite", "adler_moser", "--n-max", "3"]
    _, first, _ = call(argv, capsys)
    _, second, _ = call(argv, capsys)
    assert first == second


def test_out_file(tmp_path, capsys):
    target = tmp_path / "rho.json"
    code, out, _ = call(["ohyama", "--n", "4", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert loads(target.read_text()) == rho_recurrence(4)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "painleve_tau", "ohyama", "--n", "2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == '{"var":"s","lowest":0,"coeffs":["1","1"]}'
