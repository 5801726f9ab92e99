import csv
import io
import json

import pytest

from whurwitz.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


def test_characters_csv(capsys):
    status, out = run(capsys, "characters", "--n", "3", "--format", "csv")
    assert status == 0
    assert list(csv.reader(io.StringIO(out))) == [["1", "1", "1"], ["-1", "0", "2"], ["1", "-1", "1"]]


def test_characters_json(capsys):
    status, out = run(capsys, "characters", "--n", "2")
    doc = json.loads(out)
    assert status == 0 and doc["n"] == 2


def test_hurwitz_classical(capsys):
    status, out = run(capsys, "hurwitz", "classical", "--profiles", "[2,1];[2,1];[3]")
    assert status == 0
    assert json.loads(out) == {"value": "1"}


def test_frobenius(capsys):
    status, out = run(capsys, "frobenius", "--profiles", "[2];[2]")
    assert json.loads(out) == {"value": "1/2", "count_raw": "1"}


def test_paths_count(capsys):
    status, out = run(capsys, "paths", "count", "--mu", "[1,1,1]", "--nu", "[1,1,1]",
                      "--signature", "[2]")
    assert json.loads(out) == {"value": "3", "count_raw": "3"}


def test_weighted_rows(capsys):
    status, out = run(capsys, "hurwitz", "weighted", "--preset", "E", "--n", "2",
                      "--degree", "1", "--route", "all")
    rows = json.loads(out)
    assert status == 0
    assert rows[0] == {"d": 0, "mu": [2], "nu": [2], "value": "1/2", "genus": 0}
    assert len(rows) == 8


def test_weighted_pretty_and_csv(capsys):
    _, out = run(capsys, "hurwitz", "weighted", "--preset", "H", "--n", "2", "--degree", "1",
                 "--format", "pretty")
    assert out.splitlines()[0].split() == ["d", "mu", "nu", "value", "genus"]
    _, out = run(capsys, "hurwitz", "weighted", "--preset", "H", "--n", "2", "--degree", "1",
                 "--format", "csv")
    assert out.splitlines()[0] == "d,mu,nu,value,genus"


def test_unsupported_geometric(capsys):
    status, out = run(capsys, "hurwitz", "weighted", "--preset", "hl:1/2:1", "--n", "2",
                      "--route", "geometric")
    assert status != 0
    assert json.loads(out)["error"] == "unsupported_preset"


def test_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("HURWITZ_CAP_N", "3")
    status, out = run(capsys, "frobenius", "--profiles", "[4];[4]")
    assert status != 0
    assert json.loads(out)["error"] == "cap_exceeded"


def test_bad_partition(capsys):
    status, out = run(capsys, "frobenius", "--profiles", "2,1")
    assert status != 0 and json.loads(out)["error"] == "parameter_error"


def test_config_file_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"preset": "E", "n": 2, "degree": 1, "format": "csv"}))
    _, out = run(capsys, "hurwitz", "weighted", "--config", str(cfg))
    assert out.startswith("d,mu,nu")
    _, out = run(capsys, "hurwitz", "weighted", "--config", str(cfg), "--format", "json")
    assert len(json.loads(out)) == 8


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    status, out = run(capsys, "characters", "--n", "2", "--output", str(target))
    assert status == 0 and out == ""
    assert json.loads(target.read_text())["n"] == 2


def test_tau_and_multispecies(capsys):
    _, out = run(capsys, "tau", "table", "--preset", "exp", "--n", "2", "--degree", "1")
    assert {"d": 1, "mu": [2], "nu": [1, 1], "value": "1/2"} in json.loads(out)
    _, out = run(capsys, "multispecies", "--n", "2", "--factor", "E@1", "--factor", "~E@1")
    assert json.loads(out)[0] == {"mu": [2], "nu": [2], "value": "1/2"}


def test_macdonald(capsys):
    _, out = run(capsys, "macdonald", "decompose", "--q", "1/3", "--c", "1", "--mu", "[2]",
                 "--nu", "[2]", "--degree", "0")
    assert json.loads(out)["coefficients"] == ["1/2"]


def test_verify_is_deterministic(capsys):
    _, a = run(capsys, "verify", "--suite", "core", "--n", "3", "--degree", "2", "--jobs", "1")
    _, b = run(capsys, "verify", "--suite", "core", "--n", "3", "--degree", "2", "--jobs", "3")
    assert a == b
    assert json.loads(a)["status"] == "pass"


def test_seed_table(capsys, tmp_path):
    status, out = run(capsys, "seed-table", "--out", str(tmp_path), "--n", "2", "--degree", "1")
    assert status == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == [
        "characters.json", "hurwitz_character_tables.json"]


def test_missing_arguments():
    with pytest.raises(SystemExit):
        main(["hurwitz", "classical"])
