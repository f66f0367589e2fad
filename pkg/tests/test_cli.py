import json
import subprocess
import sys

import pytest

from cardgeom.cli import run


def cli(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_deck_gen_json(capsys):
    code, out, _ = cli(capsys, "deck", "gen", "--game", "socks", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["cards"]) == 63
    assert payload["cards"][0]["code"] == 1


def test_deck_gen_spotit_and_csv(capsys):
    code, out, _ = cli(capsys, "deck", "gen", "--game", "spotit", "--q", "5", "--format", "json")
    assert code == 0 and len(json.loads(out)["cards"]) == 31
    code, out, _ = cli(capsys, "deck", "gen", "--game", "set", "--format", "csv")
    assert code == 0 and len(out.strip().splitlines()) == 82


def test_deck_gen_writes_file(capsys, tmp_path):
    target = tmp_path / "quads.json"
    assert run(["deck", "gen", "--game", "quads", "--format", "json", "--out", str(target)]) == 0
    assert len(json.loads(target.read_text())["cards"]) == 64


def test_prob_table(capsys):
    code, out, _ = cli(capsys, "prob", "table", "--max", "31")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 17
    assert "1/61" in lines[2] and "0.01639344262" in lines[2]
    code, out, _ = cli(capsys, "prob", "table", "--closed-form", "--format", "json")
    rows = json.loads(out)
    assert rows[-1] == {
        "n": 31,
        "exact": "703591154207/45029832938783",
        "decimal": "0.01562500032",
        "minus_1_64": "0.00000000032",
    }


def test_verify_all_passes(capsys):
    code, out, _ = cli(capsys, "verify", "all")
    assert code == 0
    assert "FAIL" not in out


def test_verify_group_json(capsys):
    code, out, _ = cli(capsys, "verify", "planes", "--format", "json")
    assert code == 0
    assert all(r["ok"] and r["group"] == "planes" for r in json.loads(out))


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["deck", "gen", "--game", "poker"])
    assert exc.value.code == 2
    code, _, err = cli(capsys, "grid", "--code", "0101")
    assert code == 2 and "error" in err
    code, _, _ = cli(capsys, "deck", "gen", "--game", "set", "--q", "3")
    assert code == 2
    code, _, _ = cli(capsys, "simulate", "--game", "set", "--variant", "tower", "--seed", "1")
    assert code == 2


def test_correspond_and_grid(capsys):
    code, out, _ = cli(capsys, "correspond", "--code", "011010")
    assert code == 0
    assert "2 Yellow Circles" in out and "blue, green, purple" in out
    code, out, _ = cli(capsys, "grid", "--code", "011100", "--format", "json")
    assert json.loads(out) == {"bits": "011100", "row": 2, "col": 6}


def test_search_noquad_json(capsys):
    code, out, _ = cli(capsys, "search", "noquad", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and len(payload["pile"]) == 9 and payload["internal_count"] == 0


def test_search_cap_small(capsys):
    code, out, _ = cli(capsys, "search", "cap", "--dim", "3", "--format", "json")
    assert code == 0 and len(json.loads(out)["pile"]) == 9


def test_estimate(capsys):
    code, out, _ = cli(capsys, "estimate", "noquad", "--samples", "10000", "--seed", "1", "--format", "json")
    assert code == 0 and json.loads(out)["samples"] == 10000


def test_simulate_is_byte_identical():
    cmd = [sys.executable, "-m", "cardgeom", "simulate", "--game", "socks", "--seed", "42", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["config"]["seed"] == 42


def test_simulate_batch_text(capsys):
    code, out, _ = cli(capsys, "simulate", "--game", "socks", "--variant", "official", "--seed", "0", "--runs", "20")
    assert code == 0 and "stranded" in out
