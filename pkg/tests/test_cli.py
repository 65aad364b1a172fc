import json
import subprocess
import sys
from pathlib import Path

import pytest

from hcone.cli import run

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("argv,code,text", [
    (["member", "-n", "2", "--h", "2,1,2,0,1"], 0, "member"),
    (["member", "-n", "2", "--h", "1,0,0,0,1"], 1, "not a member"),
])
def test_member(argv, code, text):
    assert run(argv) == (code, text)


def test_lexseg():
    code, out = run(["lexseg", "-n", "2", "--h", "1,1,2,2,2,1"])
    assert code == 0
    assert "generators: x^4, x^3*y, x^2*y^2, y^3" in out
    assert "staircase: (4,3,2)" in out
    code, out = run(["lexseg", "-n", "2", "--h", "1,1,2,2,2,1", "--format", "json"])
    assert json.loads(out) == {"rows": [4, 3, 2], "generators": ["x^4", "x^3*y", "x^2*y^2", "y^3"]}
    code, out = run(["lexseg", "-n", "2", "--h", "1,2"])
    assert code == 2 and out.startswith("error[not-o-sequence]")


@pytest.mark.parametrize("name,argv", [
    ("decompose_n3_worked.txt", ["decompose", "-n", "3", "--h", "3,3,2,4,2,1,2,1"]),
    ("decompose_n4_glued.txt", ["decompose", "-n", "4", "--h", "3,3,2,2,3,3,2,0,1,1"]),
    ("decompose_n2_nonunique.txt", ["decompose", "-n", "2", "--h", "2,1,2,0,1"]),
])
def test_golden_decompositions(name, argv):
    code, out = run(argv + ["--check-oracle"])
    assert code == 0
    assert out + "\n" == (GOLDEN / name).read_text()


def test_decompose_json():
    code, out = run(["decompose", "-n", "2", "--h", "2,1,2,0,1", "--format", "json"])
    data = json.loads(out)
    assert code == 0 and data["member"] is True
    assert data["terms"][0] == {
        "coeff": "1",
        "point": {"kind": "glued", "d": 4, "inner": {"kind": "max", "d": 1}},
        "expansion": [1, 1, 2, 0, 1],
    }
    code, out = run(["decompose", "-n", "2", "--h", "1,0,0,0,1", "--format", "json"])
    assert code == 1
    assert json.loads(out)["witness"]["step"] == "tower_negative"


def test_decompose_text_rejection():
    code, out = run(["decompose", "-n", "2", "--h", "1,0,0,1"])
    assert code == 1
    assert out == "not a member\nwitness: step=reduced_top degree=3 depth=0"


def test_check_oracle_disagreement_is_internal_error(monkeypatch):
    import hcone.cli as cli
    from hcone.oracle import OracleResult

    monkeypatch.setattr(cli, "membership_oracle", lambda n, h: OracleResult(False))
    code, out = run(["decompose", "-n", "2", "--h", "1,1", "--check-oracle"])
    assert code == 3 and "LP oracle" in out


def test_ex():
    code, out = run(["ex", "-n", "2", "-d", "3"])
    assert code == 0
    assert out.splitlines()[3] == "t^2  (1,0,1)"
    code, out = run(["ex", "-n", "2", "-d", "6", "--format", "json"])
    assert len(json.loads(out)) == 17


def test_render():
    assert run(["render", "-n", "2", "--rows", "4,3,2"]) == (0, "4 5\n2 3 4\n0 1 2 3")
    code, out = run(["render", "-n", "2", "--h", "2,1,2,0,1"])
    assert code == 0 and out.startswith("level 1 (h=1):")
    code, out = run(["render", "-n", "2", "--rows", "2,1", "--format", "svg"])
    assert out.startswith("<svg")
    assert run(["render", "-n", "2", "--h", "1,0,0,0,1"])[0] == 1


@pytest.mark.parametrize("argv,flag", [
    (["member", "-n", "0", "--h", "1"], "-n"),
    (["member", "-n", "x", "--h", "1"], "-n"),
    (["member", "-n", "2", "--h", "1,-1"], "--h"),
    (["member", "-n", "2"], "--h"),
    (["selftest", "--n-max", "0"], "--n-max"),
    (["selftest", "--d-max", "-1"], "--d-max"),
    (["render", "-n", "2", "--rows", "1,2"], "--rows"),
    (["render", "-n", "2"], "--rows"),
    (["ex", "-n", "2", "-d", "3", "--format", "xml"], "--format"),
])
def test_usage_errors_name_the_flag(argv, flag):
    code, out = run(argv)
    assert code == 2
    assert out.startswith("usage error") and flag in out


def test_unknown_subcommand():
    assert run(["frobnicate"])[0] == 2
    assert run([])[0] == 2


def test_selftest_guard_and_small_run():
    code, out = run(["selftest", "--n-max", "3", "--d-max", "12", "--entry-max", "3"])
    assert code == 2 and "--force" in out
    code, out = run(["selftest", "--n-max", "1", "--d-max", "3", "--entry-max", "1"])
    assert code == 0 and out.endswith("all properties pass")


def test_selftest_failure_exits_3(monkeypatch):
    import hcone.cli as cli
    from hcone.selftest import PropertyResult, Report

    bad = PropertyResult("broken", cases=1, failures=[("x", "hcone member -n 1 --h 1")])
    monkeypatch.setattr(cli, "run_selftest", lambda *a, **k: Report(
        {"n_max": 1, "d_max": 0, "entry_max": 0, "seed": 0}, [bad]))
    code, out = run(["selftest", "--n-max", "1", "--d-max", "0", "--entry-max", "0"])
    assert code == 3 and "FAIL broken" in out and "repro: hcone member" in out


def test_determinism():
    argv = ["selftest", "--n-max", "2", "--d-max", "3", "--entry-max", "2", "--seed", "5"]
    assert run(argv) == run(argv)


def test_color(monkeypatch):
    monkeypatch.delenv("HCONE_NO_COLOR", raising=False)
    code, out = run(["member", "-n", "2", "--h", "1"], color=True)
    assert "\x1b[" in out
    monkeypatch.setenv("HCONE_NO_COLOR", "1")
    assert run(["member", "-n", "2", "--h", "1"], color=True) == (0, "member")


def test_version():
    code, out = run(["--version"])
    assert code == 0 and out.startswith("hcone ")
    code, out = run(["member", "--help"])
    assert code == 0 and "--h" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hcone.cli", "member", "-n", "2", "--h", "1,0,0,0,1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1 and proc.stdout.strip() == "not a member"
    proc = subprocess.run([sys.executable, "-m", "hcone.cli", "member", "-n", "0", "--h", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "-n" in proc.stderr
