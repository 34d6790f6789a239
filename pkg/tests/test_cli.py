import io
import json
import pathlib
import subprocess
import sys
from fractions import Fraction

import pytest

from gwcalc.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name,argv", [
    ("gw_5_5_1_1_1.json", "gw --N 5 --k 5 --d 1 --a 1 --b 1"),
    ("gw_5_5_2_1_1.json", "gw --N 5 --k 5 --d 2 --a 1 --b 1"),
    ("gw_5_5_2_1_1.csv", "gw --N 5 --k 5 --d 2 --a 1 --b 1 --format csv"),
    ("ek_5.json", "ek --k 5 --format json"),
    ("intersect_4_2.json", "intersect quasimap --N 4 --d 2 --exps 2,5,3"),
    ("w_5_5_1_1_1.json", "w --N 5 --k 5 --d 1 --a 1 --b 1"),
    ("toric_2_2.json", "toric emit --N 2 --d 2 --format json"),
    ("verify_mp_2.json", "verify --lemma mp --n 2"),
])
def test_golden(name, argv):
    code, out, _ = run(*argv.split())
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_golden_values():
    gw1 = json.loads((GOLDEN / "gw_5_5_1_1_1.json").read_text())
    assert gw1["value"] == {"num": "2875", "den": "1"}
    assert gw1["consistent"] is True
    gw2 = json.loads((GOLDEN / "gw_5_5_2_1_1.json").read_text())
    assert gw2["value"] == {"num": "4876875", "den": "2"}
    assert set(gw2["paths"]) == {"formula", "expanded", "stablemap"}
    assert json.loads((GOLDEN / "intersect_4_2.json").read_text())["value"] == {
        "num": "1", "den": "4"}
    assert json.loads((GOLDEN / "w_5_5_1_1_1.json").read_text())["value"]["num"] == "6725"


def test_ek_text():
    code, out, _ = run("ek", "--k", "5")
    assert (code, out) == (0, "600 3850 6725 3850 600\n")


def test_gw_text():
    code, out, _ = run("gw", "--N", "5", "--k", "5", "--d", "1", "--a", "1", "--b", "1",
                       "--format", "text")
    assert code == 0
    assert "= 2875" in out and "stablemap" in out


def test_degree_mismatch_warns_but_succeeds():
    code, out, _ = run("gw", "--N", "5", "--k", "5", "--d", "1", "--a", "2", "--b", "2")
    data = json.loads(out)
    assert code == 0
    assert data["value"] == {"num": "0", "den": "1"} and data["warning"]


@pytest.mark.parametrize("argv", [
    "gw --N 5 --k 5 --d 3 --a 1 --b 1",
    "gw --N 5 --k 5 --d 1 --a -1 --b 1",
    "gw --N 5 --k 3 --d 2 --a 1 --b 2",
    "gw --N 5 --k 5",
    "gw --N five --k 5 --d 1 --a 1 --b 1",
    "gw --N 5 --k 5 --d 1 --a 1 --b 1 --method guess",
    "ek --k 0",
    "verify --lemma bogus --n 2",
    "verify --lemma mp",
    "verify --lemma mp --n 0",
    "intersect quasimap --N 4 --d 2 --exps 2,x,3",
    "intersect quasimap --N 4 --d 2 --exps 2,5",
    "w --N 5 --k 0 --d 1 --a 1 --b 1",
    "toric emit --N 0 --d 2",
    "--jobs 0 ek --k 3",
    "frobnicate",
    "",
])
def test_malformed_input_exit_1(argv):
    code, out, err = run(*argv.split())
    assert code == 1
    assert err


def test_lemma_failure_exit_2(monkeypatch):
    from gwcalc import cli, verify

    def failing(lemma, n):
        report = verify.VerificationReport(lemma, n)
        report.check("forced", False, "injected")
        return report

    monkeypatch.setattr(cli, "verify_lemma", failing)
    code, out, _ = run("verify", "--lemma", "mp", "--n", "1")
    assert code == 2
    assert json.loads(out)["passed"] is False


def test_disagreement_exit_2(monkeypatch):
    import importlib
    gwmod = importlib.import_module("gwcalc.gw")

    monkeypatch.setitem(gwmod._PATHS[1], "formula", lambda q: Fraction(1))
    code, out, _ = run("gw", "--N", "5", "--k", "5", "--d", "1", "--a", "1", "--b", "1")
    assert code == 2
    assert json.loads(out)["consistent"] is False


def test_verify_all_text():
    code, out, _ = run("verify", "--all", "--max-n", "1", "--format", "text")
    assert code == 0
    assert out.endswith("all claims pass\n")
    assert "FAIL" not in out


def _subprocess(*argv):
    return subprocess.run([sys.executable, "-m", "gwcalc", *argv], capture_output=True)


@pytest.mark.parametrize("argv", [
    ("gw", "--N", "5", "--k", "5", "--d", "2", "--a", "1", "--b", "1"),
    ("verify", "--all", "--max-n", "1"),
])
def test_byte_identical_across_runs_and_threads(argv):
    outs = {_subprocess(*argv).stdout for _ in range(2)}
    outs |= {_subprocess("--jobs", str(j), *argv).stdout for j in (2, 8)}
    assert len(outs) == 1


def test_module_exit_code():
    proc = _subprocess("gw", "--N", "1", "--k", "5", "--d", "1", "--a", "1", "--b", "1")
    assert proc.returncode == 1
