import io
import json
import subprocess
import sys

import pytest

from cfrsa.cli import main

from conftest import E1, E2, N, P, Q


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_cf_expand_half():
    code, out, _ = run("cf", "expand", "--num", 1, "--den", 2)
    assert code == 0
    doc = json.loads(out)
    assert doc["quotients"] == ["0", "2"]
    assert doc["convergents"] == [{"p": "0", "q": "1"}, {"p": "1", "q": "2"}]


def test_cf_expand_example_1():
    code, out, _ = run("cf", "expand", "--num", E1, "--den", N)
    doc = json.loads(out)
    assert code == 0
    assert {"p": "141", "q": "313"} in doc["convergents"]


def test_approx_enum():
    code, out, _ = run("approx", "enum", "--alpha-num", 1, "--alpha-den", 2,
                       "--c-num", 1, "--c-den", 2, "--bmax", 10)
    assert code == 0
    sols = json.loads(out)["solutions"]
    assert [(s["a"], s["b"]) for s in sols] == [("1", "2")]


@pytest.mark.parametrize("method", ["wiener", "wiener-f", "vvt", "variant"])
def test_attack_example_1(method):
    code, out, _ = run("attack", method, "--n", N, "--e", E1, "--d-bound", 561)
    doc = json.loads(out)
    assert code == 0 and doc["found"]
    assert (doc["d"], doc["p"], doc["q"]) == ("313", str(P), str(Q))


def test_attack_example_2():
    code, out, _ = run("attack", "variant", "--n", N, "--e", E2, "--d-bound", 10**7)
    doc = json.loads(out)
    assert code == 0 and doc["d"] == "5936963"
    assert doc["witness"] == {"coefficients": {"s": "12195", "t": "77"}, "family": "st-", "m": 5}


def test_attack_not_found():
    code, out, _ = run("attack", "wiener", "--n", N, "--e", E2, "--d-bound", 100)
    assert code == 1 and json.loads(out)["found"] is False


@pytest.mark.parametrize("argv", [
    ("attack", "vvt", "--n", N, "--e", E1),  # no bound
    ("attack", "vvt", "--n", N, "--e", E1, "--d-bound", 5, "--D-bound", 1),
    ("attack", "wiener", "--n", N + 1, "--e", E1),
    ("cf", "expand", "--num", 1, "--den", 0),
    ("keygen", "--bits", 64),
    ("nonsense",),
])
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and err


def test_keygen_then_attack_round_trip():
    code, out, _ = run("keygen", "--bits", 96, "--D-max", "3/2", "--seed", 11)
    key = json.loads(out)
    assert code == 0
    code, out, _ = run("attack", "variant", "--n", key["n"], "--e", key["e"], "--D-bound", "3/2")
    assert code == 0 and json.loads(out)["d"] == key["d"]


def test_hex_input():
    code, out, _ = run("attack", "wiener", "--n", hex(N), "--e", hex(E1))
    assert code == 0 and json.loads(out)["d"] == "313"


def test_sweep_and_csv(tmp_path):
    path = tmp_path / "rows.csv"
    code, out, _ = run("sweep", "vvt", "--n", N, "--p", P, "--q", Q,
                       "--d-from", 100, "--d-to", 200, "--csv", path)
    doc = json.loads(out)
    assert code == 0
    assert doc["count"] + doc["skipped_non_coprime"] == 101
    assert len(path.read_text().splitlines()) == doc["count"] + 1


def test_repeat_runs_byte_identical():
    argv = [sys.executable, "-m", "cfrsa", "attack", "vvt", "--n", str(N), "--e", str(E1),
            "--d-bound", "561"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["d"] == "313"
