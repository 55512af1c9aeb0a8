import json
import subprocess
import sys

import pytest

import wpfermat.genus
from wpfermat import report
from wpfermat.cli import main, parse_range, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_report_json(capsys):
    code, out, _ = run(capsys, "report", "--a", "1", "--m", "2", "--n", "3", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["genus"] == 1 and d["agreement"] is True
    assert all(d["checks"].values())


def test_json_round_trip_is_byte_stable(capsys):
    _, first, _ = run(capsys, "report", "--a", "2", "--m", "3", "--n", "5", "--format", "json")
    _, second, _ = run(capsys, "report", "--a", "2", "--m", "3", "--n", "5", "--format", "json")
    assert first == second
    assert report.dumps(json.loads(first)) == first


def test_large_integers_become_strings():
    assert report.num(2**53) == str(2**53)
    assert report.num(-(2**53)) == str(-(2**53))
    assert report.num(2**53 - 1) == 2**53 - 1


def test_swap_is_noted(capsys):
    code, out, _ = run(capsys, "report", "--a", "1", "--m", "3", "--n", "2", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["weights"] == {"a": 1, "m": 2, "n": 3}
    assert d["input"] == {"a": 1, "m": 3, "n": 2}
    assert d["notes"]


def test_non_coprime_rejected_without_output(capsys):
    code, out, err = run(capsys, "report", "--a", "1", "--m", "2", "--n", "4")
    assert code == 2 and out == ""
    assert "--m" in err and "coprime" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["report", "--m", "2"],
        ["report", "--m", "x", "--n", "3"],
        ["report", "--m", "0", "--n", "3"],
        ["report", "--m", "3", "--n", "3"],
        ["frobnicate"],
        ["sweep", "--a", "1", "--m", "3", "--n", "2"],
        ["sweep", "--a", "3..1", "--m", "1", "--n", "2"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_corrupted_oracle_gives_exit_1(capsys, monkeypatch):
    real = wpfermat.genus.newton_polygon_genus_oracle
    monkeypatch.setattr(wpfermat.genus, "newton_polygon_genus_oracle", lambda w: real(w) + 1)
    code, out, _ = run(capsys, "report", "--m", "2", "--n", "3", "--format", "json")
    assert code == 1
    assert json.loads(out)["agreement"] is False
    code, _, _ = run(capsys, "sweep", "--a", "1", "--m", "2", "--n", "3")
    assert code == 1


def test_internal_error_gives_exit_1(capsys, monkeypatch):
    def boom(w):
        raise RuntimeError("planted failure")

    monkeypatch.setattr(wpfermat.genus, "dual_projection_genus", boom)
    code, out, err = run(capsys, "sweep", "--a", "1", "--m", "1..2", "--n", "3")
    assert code == 1 and "planted failure" in err


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--a", "1..2", "--m", "1..4", "--n", "2..5", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["all_pass"]
    assert all(r["m"] < r["n"] for r in d["rows"])
    code, out, _ = run(capsys, "sweep", "--a", "1..1", "--m", "2..2", "--n", "3..3", "--format", "json")
    rows = json.loads(out)["rows"]
    assert len(rows) == 1 and rows[0]["genus"] == 1


def test_resolve(capsys):
    code, out, _ = run(capsys, "resolve", "--m", "3", "--n", "5", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["b"] == [2, 2]
    assert d["rays"] == [[0, 1], [-1, -1], [-2, -3], [-3, -5]]
    code, out, _ = run(capsys, "resolve", "--m", "1", "--n", "4")
    assert code == 0 and "chart already smooth" in out and "(-1,-4)" in out.replace(" ", "")
    code, out, _ = run(capsys, "resolve", "--m", "2", "--n", "3", "--format", "json")
    d = json.loads(out)
    assert all(isinstance(d[k], list) for k in ("b", "r_seq", "t_seq", "rays"))


def test_smoothness_and_text(capsys):
    code, out, _ = run(capsys, "smoothness", "--a", "2", "--m", "3", "--n", "5")
    assert code == 0 and "smooth" in out
    code, out, _ = run(capsys, "report", "--m", "2", "--n", "3")
    assert code == 0 and "genus = 1" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "report", "--m", "2", "--n", "3", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["genus"] == 1


def test_parse_range():
    assert parse_range("2..4", "a") == range(2, 5)
    assert parse_range("7", "a") == range(7, 8)
    with pytest.raises(UsageError):
        parse_range("a..b", "a")


def test_subprocess_entry_point():
    p = subprocess.run(
        [sys.executable, "-m", "wpfermat", "report", "--m", "2", "--n", "3", "--format", "json"],
        capture_output=True, text=True,
    )
    assert p.returncode == 0 and json.loads(p.stdout)["genus"] == 1
    p = subprocess.run([sys.executable, "-m", "wpfermat", "report", "--m", "2", "--n", "4"],
                       capture_output=True, text=True)
    assert p.returncode == 2 and p.stdout == ""
