import io
import json
import subprocess
import sys

import pytest

from kecrit import cli, suite
from kecrit.formats import from_graph6
from kecrit.generators import path


def run(argv, stdin=b""):
    proc = subprocess.run(
        [sys.executable, "-m", "kecrit", *argv], input=stdin, capture_output=True
    )
    return proc.returncode, proc.stdout.decode(), proc.stderr.decode()


@pytest.fixture
def fixture_dir(tmp_path):
    assert cli.main(["fixtures", "-o", str(tmp_path)]) == 0
    return tmp_path


def test_fixtures_command(fixture_dir):
    names = sorted(p.name for p in fixture_dir.iterdir())
    assert names == ["fig1_g1.edges", "fig1_g2.edges", "fig2_g.edges", "fig3_g.edges", "fixtures.g6"]
    assert len((fixture_dir / "fixtures.g6").read_text().split()) == 3


def test_analyze_json(fixture_dir, capsys):
    assert cli.main(["analyze", str(fixture_dir / "fig1_g1.edges"), "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["ker"] == ["a", "b", "c"]
    assert d["nucleus"] == ["a", "b", "c", "d", "g"]
    assert d["is_ke"] is False


def test_analyze_text_matches_json(fixture_dir, capsys):
    f = str(fixture_dir / "fig3_g.edges")
    cli.main(["analyze", f, "--json"])
    d = json.loads(capsys.readouterr().out)
    cli.main(["analyze", f])
    text = capsys.readouterr().out
    rows = {line.split()[0]: line.split(None, 1)[1] for line in text.splitlines()}
    assert rows["core"] == "{a, b}"
    assert rows["corona"] == "{a, b, c, d, e, f}"
    assert rows["is_ke"] == "False"
    assert d["core"] == ["a", "b"] and d["corona"] == ["a", "b", "c", "d", "e", "f"]
    for key in ("alpha", "alpha_prime", "mu", "d"):
        assert rows[key] == str(d[key])


def test_analyze_stdin_graph6():
    code, out, _ = run(["analyze", "-", "--format", "g6", "--json"], b"C~\n")
    d = json.loads(out)
    assert code == 0
    assert (d["n"], d["alpha"], d["mu"], d["is_ke"]) == (4, 1, 2, False)


def test_analyze_errors():
    code, _, err = run(["analyze", "-", "--format", "g6"], b"C~~\n")
    assert code == 2 and "error" in err
    code, _, err = run(["analyze", "/nonexistent.edges"])
    assert code == 2
    code, _, err = run(["analyze", "-", "--format", "g6", "--engine", "oracle"], b"Q" + b"?" * 26 + b"\n")
    assert code == 2 and "16" in err


def test_verify_all_n(capsys):
    assert cli.main(["verify", "--all-n", "5", "--json", "--jobs", "1"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["graphs"] == 1024 and d["violations"] == [] and d["ok"]
    assert d["ker_poly_gate"] == "passed"


def test_verify_fixture_corpus(fixture_dir, capsys):
    code = cli.main(["verify", "--corpus", str(fixture_dir / "fixtures.g6"), "--jobs", "1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "graphs checked: 3" in out and out.rstrip().endswith("OK")


def test_verify_limits(capsys):
    assert cli.main(["verify", "--all-n", "8"]) == 2
    assert cli.main(["verify"]) == 2


def test_verify_violation_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(suite.poly, "ker_poly", lambda g: 0)
    assert cli.main(["verify", "--all-n", "1", "--jobs", "1"]) == 1
    out = capsys.readouterr().out
    assert "VIOLATION poly_ker on graph #0 graph6=@" in out
    assert "experimental-failed" in out


def test_gen_all_n(tmp_path):
    out = tmp_path / "out.g6"
    assert cli.main(["gen", "--all-n", "4", "-o", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 64


def test_gen_deterministic(tmp_path):
    a, b = tmp_path / "a.g6", tmp_path / "b.g6"
    for f in (a, b):
        cli.main(["gen", "gnp", "--n", "12", "--p", "0.3", "--count", "100", "--seed", "7", "-o", str(f)])
    assert a.read_bytes() == b.read_bytes()
    assert len(a.read_text().splitlines()) == 100


def test_gen_path_round_trip():
    code, out, _ = run(["gen", "path", "--n", "6"])
    assert code == 0
    assert from_graph6(out.strip().encode()) == path(6)


def test_gen_bad_params():
    assert run(["gen", "gnp", "--n", "5", "--p", "1.5"])[0] == 2
    assert run(["gen", "cycle", "--n", "2"])[0] == 2
    assert run(["gen", "gnp", "--n", "5"])[0] == 2
    assert run(["gen"])[0] == 2
