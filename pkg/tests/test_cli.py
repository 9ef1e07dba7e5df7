import json
import subprocess
import sys

import pytest

from dpsocle.cli import dumps, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_richardson(capsys):
    code, out, _ = run(capsys, "richardson", "2,1,2")
    assert code == 0 and out.strip() == "Y = 3,2; dim O = 16"


def test_assumption_a(capsys):
    code, out, _ = run(capsys, "assumption-a", "2,1")
    assert code == 0 and out.splitlines()[0] == "assumption A: false"


def test_socle_u_json(capsys):
    code, out, _ = run(capsys, "socle-u", "1", "1", "1", "1", "0", "-1", "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data["constituents"]) == 2 and data["gk_dim"] == 1
    assert {"pair", "h", "diagram"} <= set(data["constituents"][0])
    assert dumps(data) == out


@pytest.mark.parametrize("argv", [
    ["richardson", "2,1,2"],
    ["signed", "2,1", "2", "1"],
    ["assvar", "m=1,0,1", "n=0,1,0"],
    ["normal", "1", "1", "1,1"],
    ["range", "m=1,2", "n=0,1", "0,3"],
    ["decompose", "1", "1", "1", "3/2", "0", "-3/2"],
    ["socle-u", "2", "2", "1,1", "0,0", "0", "0,0"],
    ["socle-glc", "2,1,2"],
    ["socle-glc", "2,1"],
    ["socle-glr", "3", "1,1,1"],
    ["socle-glh", "2", "1,1"],
    ["assumption-a", "1,1"],
])
def test_json_round_trips(capsys, argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    assert dumps(json.loads(out)) == out


def test_hypothesis_not_met_is_a_valid_answer(capsys):
    code, out, _ = run(capsys, "socle-u", "1", "1", "1", "-1", "0", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["constituents"] == []
    assert data["extras"]["hypothesis_met"] is False
    code, out, _ = run(capsys, "socle-glh", "3", "2,1", "--json")
    assert code == 0 and json.loads(out)["extras"]["hypothesis_met"] is False


def test_negative_vectors_parse_as_positionals(capsys):
    code, out, _ = run(capsys, "socle-u", "2", "2", "1,1", "2,1", "0", "-2,-1", "--json")
    assert code == 0 and len(json.loads(out)["constituents"]) == 2


@pytest.mark.parametrize("argv", [
    ["bogus"],
    [],
    ["richardson", "2,x"],
    ["signed", "2", "2", "1"],
    ["socle-u", "1", "1", "2", "1", "0", "-1"],
    ["decompose", "1", "1", "1", "1", "0", "-1"],
    ["range", "m=1,0", "n=0,1", "1/2,0"],
])
def test_bad_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_limits_exit_3(capsys):
    assert run(capsys, "selftest", "--max-size", "50")[0] == 3
    code, _, _ = run(capsys, "decompose", "3", "3", "1,1,1", "1/2,1/2,1/2", "0", "-1/2,-1/2,-1/2",
                     "--max-blocks", "2")
    assert code == 3


def test_convention_flag(capsys):
    code, out, _ = run(capsys, "socle-u", "1", "1", "1", "1", "0", "-1", "--json",
                       "--convention", "printed")
    data = json.loads(out)
    assert code == 0 and data["extras"]["delta"] == ["1"]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "socle-glc", "1,1", "--out", str(target))
    assert code == 0 and "GK dimension: 2" in out
    assert json.loads(target.read_text())["gk_dim"] == 2


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--max-size", "3")
    assert code == 0 and out.count("[PASS]") == out.count("\n")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "dpsocle", "richardson", "1,1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "Y = 2; dim O = 2"
