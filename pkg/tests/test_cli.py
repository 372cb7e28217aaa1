import io
import json
import subprocess
import sys

import pytest

from alteuler.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv, expected", [
    (("gen", "--family", "alt-eulerian", "--n", "5", "--format", "csv"), "16,26,36,26,16\n"),
    (("gen", "--family", "derivative", "--n", "4", "--format", "csv"), "0,16,0,40,0,24\n"),
    (("gen", "--family", "alt-eulerian", "--n", "1", "--format", "csv"), "1\n"),
    (("gen", "--family", "tilde-p", "--n", "2", "--format", "csv"), "0,-2,0,2\n"),
    (("gen", "--family", "peak", "--n", "3", "--format", "text"), "4 + 2*x\n"),
])
def test_gen(argv, expected):
    assert run(*argv) == (0, expected)


def test_gen_header_and_json():
    code, out = run("gen", "--family", "eulerian", "--n", "4", "--format", "csv", "--header")
    assert out == "x^0,x^1,x^2,x^3\n1,11,11,1\n"
    code, out = run("gen", "--family", "alt-eulerian", "--n", "30", "--format", "json")
    rec = json.loads(out)
    assert out.endswith("\n") and out.count("\n") == 1
    assert rec["schema_version"] == "1" and rec["kind"] == "row"
    coeffs = [int(c) for c in rec["payload"]["coeffs"]]
    assert all(isinstance(c, str) for c in rec["payload"]["coeffs"])
    assert sum(coeffs) == 265252859812191058636308480000000  # 30!


def test_gen_usage_errors():
    assert run("gen", "--family", "alt-eulerian", "--n", "0")[0] == 2
    assert run("gen", "--family", "bogus", "--n", "3")[0] == 2


def test_zeros():
    code, out = run("zeros", "--n", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)["payload"]
    (z,) = payload["zeros"]
    assert z["re"] == pytest.approx(-0.5) and z["conjugate_pair"]
    code, out = run("zeros", "--n", "4", "--format", "csv")
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert float(rows[0][0]) == -1.0 and float(rows[1][0]) == pytest.approx(-0.2)
    assert run("zeros", "--n", "1")[0] == 2
    assert run("zeros", "--n", "25")[0] == 2


def test_zeros_floats_round_trip():
    code, out = run("zeros", "--n", "9", "--format", "json")
    from alteuler.zeros import alt_eulerian_zeros
    zr = alt_eulerian_zeros(9)
    got = [(z["re"], z["im"]) for z in json.loads(out)["payload"]["zeros"]]
    assert got == list(zr.zeros)


@pytest.mark.parametrize("suite", ["routes", "halfangle", "convolution", "symmetry"])
def test_check_suites_pass(suite):
    code, out = run("check", "--suite", suite, "--n-max", "10")
    assert code == 0 and "PASS" in out


def test_check_interlacing_reports_margins():
    code, out = run("check", "--suite", "interlacing", "--n-max", "20", "--format", "json")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["passed"] and float(payload["info"]["min_real_margin"]) > 1e-10


def test_check_failure_exit_code():
    # an absurd tolerance makes the modulus suite fail
    code, out = run("check", "--suite", "zeros-modulus", "--n-max", "5", "--tol", "-1")
    assert code == 1 and "FAIL" in out and "first counterexample" in out


def test_check_usage_errors():
    assert run("check", "--suite", "nonsense")[0] == 2
    assert run("check", "--suite", "egf-alt", "--n-max", "99")[0] == 2
    assert run("check", "--suite", "routes", "--n-max", "0")[0] == 2


def test_bruteforce():
    assert run("bruteforce", "--stat", "altdes", "--n", "4") == (0, "5,7,7,5\n")
    assert run("bruteforce", "--stat", "3des", "--n", "5", "--restrict-first") == (0, "5,7,7,5\n")
    assert run("bruteforce", "--stat", "peak", "--n", "11")[0] == 2


def test_deterministic_output():
    a = run("check", "--suite", "all", "--format", "json")
    b = run("check", "--suite", "all", "--format", "json")
    assert a == b and a[0] == 0
    from alteuler.cli import SUITES
    assert len(a[1].strip().splitlines()) == len(SUITES)
    for line in a[1].splitlines():
        json.loads(line)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "alteuler", "gen", "--family", "alt-eulerian",
                           "--n", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "5,7,7,5\n"
