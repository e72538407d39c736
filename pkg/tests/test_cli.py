import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from paramgb.cli import main, parse_session, run

ROOT = Path(__file__).resolve().parent.parent
SESSIONS = ROOT / "sessions"
GOLDEN = Path(__file__).resolve().parent / "golden"


def run_text(tmp_path, text, **kw):
    path = tmp_path / "s.session"
    path.write_text(text)
    out, err = io.StringIO(), io.StringIO()
    code = run(path, stdout=out, stderr=err, **kw)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", ["worked_example", "ideal_ops", "circle"])
def test_golden(name):
    out = io.StringIO()
    assert run(SESSIONS / f"{name}.session", stdout=out) == 0
    assert out.getvalue() == (GOLDEN / f"{name}.jsonl").read_text()


def test_worked_groebner_document():
    out = io.StringIO()
    run(SESSIONS / "worked_example.session", stdout=out)
    first = json.loads(out.getvalue().splitlines()[0])
    assert first["basis"] == ["x + y", "y^2"]
    assert first["locus"] == ["s + 1"]
    assert first["reduced"] is True
    assert first["space"] == []


def test_output_is_byte_deterministic():
    a, b = io.StringIO(), io.StringIO()
    run(SESSIONS / "worked_example.session", stdout=a)
    run(SESSIONS / "worked_example.session", stdout=b)
    assert a.getvalue() == b.getvalue()
    for line in a.getvalue().splitlines():
        doc = json.loads(line)
        assert "locus" in doc and "space" in doc
        assert list(doc) == sorted(doc)


def test_empty_session(tmp_path):
    assert run_text(tmp_path, "") == (0, "", "")
    assert run_text(tmp_path, "# only a comment\n\nvars: x\n") == (0, "", "")


def test_hilbert_command(tmp_path):
    code, out, _ = run_text(tmp_path, "params: s\nvars: x, y\nideal I: x^2 + s*y^2, x + y\nhilbert I\n")
    doc = json.loads(out)
    assert code == 0 and doc["hp"] == "2" and doc["stabilization_degree"] == 1


@pytest.mark.parametrize("text,kind,line,column", [
    ("vars: x, y\nideal I: x + 2*z\n", "UnknownSymbol", 2, 16),
    ("vars: x\nideal I: x\nfrobnicate I\n", "SessionError", 3, 1),
    ("vars: x\nideal I: x\ngroebner J\n", "SessionError", 3, 10),
    ("params: s\nvars: x\nideal I: x/(s - s)\n", "ZeroDenominator", 3, 11),
    ("params: s\nspace: s, s - 1\nvars: x\nideal I: x\n", "InconsistentSpace", 2, 1),
    ("vars: x\nideal I: x\nvars: y\n", "SessionError", 3, 1),
    ("vars: x\norder: weird\n", "SessionError", 2, 8),
    ("vars: x, y\norder: grevlex\nideal I: x - y\neliminate I 1\n", "OrderNotLex", 4, 1),
])
def test_input_errors(tmp_path, text, kind, line, column):
    code, out, err = run_text(tmp_path, text)
    assert code == 1
    diag = json.loads(err)
    assert (diag["error"], diag["line"], diag["column"]) == (kind, line, column)


def test_budget_exit_code(tmp_path):
    text = ("vars: x, y, z\nideal I: x^3 - y*z^2 + 1, y^3 - x*z + 2, z^3 - x^2*y - 3, x*y*z - 1\n"
            "groebner I\n")
    code, _, err = run_text(tmp_path, text, budget=3)
    assert code == 2 and json.loads(err)["error"] == "BudgetExceeded"


def test_results_before_an_error_are_kept(tmp_path):
    code, out, err = run_text(tmp_path, "vars: x\nideal I: x^2\ngroebner I\ngroebner Q\n")
    assert code == 1 and len(out.splitlines()) == 1 and err


def test_named_results(tmp_path):
    text = "vars: x, y\nideal A: x\nideal B: y\nintersect A B as C\nquotient C B\nsaturate C y as D\ngroebner D\n"
    code, out, _ = run_text(tmp_path, text)
    docs = [json.loads(l) for l in out.splitlines()]
    assert code == 0
    assert docs[0]["result"] == "C" and docs[1]["basis"] == ["x"]
    assert docs[2]["N"] == 1 and docs[3]["basis"] == ["x"]


def test_split_with_quoted_arguments(tmp_path):
    code, out, _ = run_text(tmp_path, "vars: x, y\nideal J: x*y + y^2\nsplit J y \"x + y\"\n")
    doc = json.loads(out)
    assert code == 0 and doc["N"] == 1 and doc["J1"] == ["x + y"] and doc["J2"] == ["y"]


def test_space_is_echoed(tmp_path):
    code, out, _ = run_text(tmp_path, "params: s, t\nspace: s^2 + t^2 - 1\nvars: x\nideal I: s*x - t\ngroebner I\n")
    doc = json.loads(out)
    assert doc["space"] == ["s^2 + t^2 - 1"] and doc["locus"] == ["s"]


def test_out_dir_and_csv(tmp_path):
    out_dir = tmp_path / "out"
    assert run(SESSIONS / "worked_example.session", out_dir=out_dir, stdout=io.StringIO()) == 0
    names = sorted(p.name for p in out_dir.iterdir())
    assert names[0] == "001-groebner.json" and "008-sweep.csv" in names
    doc = json.loads((out_dir / "001-groebner.json").read_text())
    assert doc["basis"] == ["x + y", "y^2"]
    rows = (out_dir / "008-sweep.csv").read_text().splitlines()
    assert rows[0].startswith("point,on_locus")
    assert rows[-1].startswith("-1,True,True,d + 1")


def test_order_override_and_text_format(tmp_path):
    out = io.StringIO()
    path = tmp_path / "s.session"
    path.write_text("params: s\nvars: x, y\nideal I: x^2 + s*y^2, x + y\ngroebner I\n")
    assert run(path, order="grevlex", fmt="text", stdout=out) == 0
    text = out.getvalue()
    assert text.startswith("[line 4] groebner")
    assert 'basis: ["y^2", "x + y"]' in text


def test_parse_session_structure():
    sess = parse_session("params: s\nvars: x, y\nspace: s^2 - 1\nideal I: x, y\ngroebner I\n")
    assert sess.params == ["s"] and sess.vars == ["x", "y"]
    assert sess.ideals["I"][2] == ["x", "y"]
    assert [c.name for c in sess.commands] == ["ideal", "groebner"]


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "paramgb", str(SESSIONS / "worked_example.session")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "worked_example.jsonl").read_text()


def test_main_argparse(tmp_path, capsys):
    path = tmp_path / "s.session"
    path.write_text("brownawell 2 2 2\n")
    assert main([str(path), "--seed", "7"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["e_prime"] == 324 and doc["locus"] == []
