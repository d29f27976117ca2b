import json

import pytest

from sdrmatrix.cli import main
from sdrmatrix.triangle import load_window, materialize


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_pass(capsys):
    code, out, _ = run(capsys, "check", "--tri", "builtin:pascal", "--order", "5", "--rows", "12")
    assert code == 0 and "pass" in out


def test_check_rows_below_order(capsys):
    code, _, err = run(capsys, "check", "--tri", "product:a=ones,b=ones,c=ones",
                       "--order", "3", "--rows", "2")
    assert code == 2 and "--rows" in err


def test_minor_piped_to_check(capsys, tmp_path):
    path = tmp_path / "a2.json"
    code, _, _ = run(capsys, "minor", "--tri", "builtin:aerated", "--j", "2", "--rows", "7",
                     "--json", str(path))
    assert code == 0
    assert load_window(path).n_rows == 6
    rep = tmp_path / "rep.json"
    code, out, _ = run(capsys, "check", "--tri", f"file:{path}", "--order", "3", "--rows", "6",
                       "--json", str(rep))
    assert code == 1 and "p=2 r=0 n=2 k=0" in out
    obj = json.loads(rep.read_text())
    assert obj["verdict"] == "fail"
    assert obj["violations"][0] == {"p": 2, "r": 0, "n": 2, "k": 0, "lhs": "54", "rhs": "48"}


def test_check_file_with_too_many_rows(capsys, tmp_path):
    path = tmp_path / "p.json"
    run(capsys, "print", "--tri", "builtin:pascal", "--rows", "4", "--json", str(path))
    code, _, err = run(capsys, "check", "--tri", f"file:{path}", "--order", "3", "--rows", "6")
    assert code == 2 and "--tri" in err


def test_print_table(capsys):
    code, out, _ = run(capsys, "print", "--tri", "builtin:narayana", "--rows", "6")
    assert code == 0
    assert out.splitlines()[-1].split() == ["1", "15", "50", "50", "15", "1"]
    assert out.splitlines()[0] == " 1"


def test_rationals_render_without_unit_denominator(capsys):
    code, out, _ = run(capsys, "hadamard", "--inv", "builtin:pascal", "--rows", "5")
    assert code == 0
    assert "1/6" in out and "/1 " not in out


def test_max_order(capsys, tmp_path):
    path = tmp_path / "m.json"
    code, out, _ = run(capsys, "max-order", "--tri", "builtin:aerated", "--rows", "12",
                       "--cap", "8", "--json", str(path))
    assert code == 0 and "max verified order: 3" in out
    assert json.loads(path.read_text())["max_order"] == 3


def test_invert_and_power(capsys, tmp_path):
    path = tmp_path / "inv.json"
    code, _, _ = run(capsys, "invert", "--tri", "builtin:pascal", "--rows", "4",
                     "--json", str(path))
    assert code == 0
    assert [[int(x) for x in r] for r in load_window(path).rows] == \
        [[1], [-1, 1], [1, -2, 1], [-1, 3, -3, 1]]
    code, out, _ = run(capsys, "power", "--tri", "builtin:pascal", "--exp", "2", "--rows", "3")
    assert code == 0 and out.split() == ["1", "2", "1", "4", "4", "1"]
    code, _, err = run(capsys, "invert", "--tri", "builtin:aerated", "--rows", "3")
    assert code == 0
    code, _, err = run(capsys, "power", "--tri", "rowseq:list:0,1,1", "--exp", "-1",
                       "--rows", "3")
    assert code == 2 and "--exp" in err


def test_hadamard(capsys):
    code, out, _ = run(capsys, "hadamard", "--a", "diagseq:list:1,-1,0", "--b",
                       "builtin:pascal", "--rows", "3")
    assert code == 0 and out.split() == ["1", "-1", "1", "0", "-2", "1"]
    code, _, err = run(capsys, "hadamard", "--inv", "builtin:aerated", "--rows", "4")
    assert code == 2 and "(1,0)" in err
    code, _, _ = run(capsys, "hadamard", "--a", "builtin:pascal", "--rows", "4")
    assert code == 2


def test_riordan(capsys, tmp_path):
    code, out, _ = run(capsys, "riordan", "window", "--d", "geomrec:1", "--h", "tgeomrec:1",
                       "--rows", "6")
    assert code == 0
    path = tmp_path / "sq.json"
    code, out, _ = run(capsys, "riordan", "mul", "--d", "geomrec:1", "--h", "tgeomrec:1",
                       "--d2", "geomrec:1", "--h2", "tgeomrec:1", "--rows", "6",
                       "--json", str(path))
    assert code == 0 and "d = [1, 2, 4, 8, 16, 32" in out
    code, out, _ = run(capsys, "riordan", "inverse", "--d", "geomrec2", "--h", "tgeomrec2",
                       "--rows", "9")
    assert code == 0 and "d = [1, 0, -1, 0, 2, 0, -5, 0, 14" in out
    code, _, err = run(capsys, "riordan", "window", "--d", "0,1", "--h", "tgeomrec:1",
                       "--rows", "4")
    assert code == 2
    code, _, err = run(capsys, "riordan", "mul", "--d", "1", "--h", "0,1", "--rows", "4")
    assert code == 2 and "--d2" in err


def test_conjecture(capsys, tmp_path):
    path = tmp_path / "h.json"
    code, out, _ = run(capsys, "conjecture", "minor", "--family", "builtin:aerated",
                       "--trials", "2", "--rows", "8", "--seed", "0", "--j", "2",
                       "--json", str(path))
    assert code == 0 and "expected-failure=1" in out
    recs = json.loads(path.read_text())
    assert recs[0]["verdict"] == "expected-failure"
    code, _, err = run(capsys, "conjecture", "inverse", "--family", "nope", "--trials", "1")
    assert code == 2 and "--family" in err


def test_spec_errors_exit_2(capsys):
    code, _, err = run(capsys, "print", "--tri", "builtin:catalan", "--rows", "3")
    assert code == 2 and "--tri" in err and len(err.strip().splitlines()) == 1
    with pytest.raises(SystemExit) as exc:
        main(["check", "--tri", "builtin:pascal"])
    assert exc.value.code == 2


def test_max_cells_env(capsys, monkeypatch):
    monkeypatch.setenv("SDR_MAX_CELLS", "10")
    code, _, err = run(capsys, "check", "--tri", "builtin:pascal", "--order", "5", "--rows", "12")
    assert code == 2 and "cap" in err
    monkeypatch.setenv("SDR_MAX_CELLS", "lots")
    code, _, err = run(capsys, "check", "--tri", "builtin:pascal", "--order", "5", "--rows", "12")
    assert code == 2


def test_json_round_trip_through_file_schema(capsys, tmp_path):
    path = tmp_path / "lah.json"
    run(capsys, "print", "--tri", "builtin:lah", "--rows", "7", "--json", str(path))
    assert load_window(path) == materialize("builtin:lah", 7)
    path2 = tmp_path / "lah2.json"
    run(capsys, "print", "--tri", f"file:{path}", "--rows", "7", "--json", str(path2))
    assert json.loads(path2.read_text())["rows"] == json.loads(path.read_text())["rows"]
