import json
import math
import subprocess
import sys

import numpy as np
import pytest

from kamean.cli import main
from kamean.io import parse_matrix_document, serialize_matrix
from kamean.matrix import Matrix, diag, identity


@pytest.fixture
def write(tmp_path):
    def _write(name, X):
        p = tmp_path / name
        p.write_text(serialize_matrix(X) if isinstance(X, Matrix) else X)
        return str(p)
    return _write


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mean(write, capsys):
    a, b = write("a.json", identity(2)), write("b.json", diag([4.0, 9.0]))
    code, out, _ = run(["mean", "--f", "geometric", a, b], capsys)
    assert code == 0
    np.testing.assert_allclose(parse_matrix_document(out).data, np.diag([2.0, 3.0]), atol=1e-14)
    code, out, _ = run(["mean", "--f", "weighted_geometric", "--t", "0.5", "--closed-form", a, b], capsys)
    assert code == 0
    np.testing.assert_allclose(parse_matrix_document(out).data, np.diag([2.0, 3.0]), atol=1e-14)


def test_dist_prints_17_digits(write, capsys):
    a, b = write("a.json", identity(2)), write("b.json", identity(2) * math.e ** 2)
    code, out, _ = run(["dist", a, b], capsys)
    assert code == 0
    assert float(out) == pytest.approx(2 * math.sqrt(2), rel=1e-15)
    assert out.strip() == format(float(out), ".17g")


def test_bary(write, capsys):
    a, b = write("a.json", identity(2)), write("b.json", identity(2) * math.e ** 2)
    code, out, _ = run(["bary", "--weights", "0.5,0.5", a, b], capsys)
    assert code == 0
    np.testing.assert_allclose(parse_matrix_document(out).data, math.e * np.eye(2), rtol=1e-14)
    code, _, err = run(["bary", "--weights", "0.5,0.6", a, b], capsys)
    assert code == 2 and "sum" in err


def test_embed_extract_round_trip(write, capsys, tmp_path):
    for src, to, back in (("C", "R", "R"), ("H", "C", "C")):
        code, out, _ = run(["gen", "--algebra", src, "--n", "2", "--seed", "3"], capsys)
        f = write(f"x{src}.json", out)
        code, emb, _ = run(["embed", "--to", to, f], capsys)
        assert code == 0
        g = write(f"y{src}.json", emb)
        code, ext, _ = run(["extract", "--from", back, g], capsys)
        assert code == 0
        np.testing.assert_array_equal(parse_matrix_document(ext).data, parse_matrix_document(out).data)
    code, out, _ = run(["embed", "--to", "R", f], capsys)
    assert code == 0 and parse_matrix_document(out).n == 8


def test_embed_and_extract_errors(write, capsys):
    r = write("r.json", identity(2))
    assert run(["embed", "--to", "C", r], capsys)[0] == 2
    assert run(["extract", "--from", "R", write("bad.json", diag([1.0, 2.0]))], capsys)[0] == 2
    assert run(["extract", "--from", "C", r], capsys)[0] == 2


def test_project(write, capsys):
    a = write("a.json", Matrix([[2.0, 1.0], [1.0, 4.0]]))
    code, out, _ = run(["project", "--structure", "complex", a], capsys)
    assert code == 0
    np.testing.assert_allclose(parse_matrix_document(out).data, 3 * np.eye(2), atol=1e-15)
    code, out, _ = run(["project", "--structure", "hermitian", a], capsys)
    assert code == 0
    c = write("c.json", Matrix(np.diag([1.0, 3.0]) + 0j, "C"))
    code, out, _ = run(["project", "--structure", "quaternionic", c], capsys)
    np.testing.assert_allclose(parse_matrix_document(out).data, 2 * np.eye(2), atol=1e-15)


def test_gen_is_deterministic(capsys):
    outs = [run(["gen", "--algebra", "H", "--n", "3", "--seed", "11"], capsys)[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["algebra"] == "H"


def test_input_errors_exit_2(write, capsys, tmp_path):
    good = write("g.json", identity(2))
    assert run(["dist", str(tmp_path / "missing.json"), good], capsys)[0] == 2
    assert run(["dist", write("bad.json", "{oops"), good], capsys)[0] == 2
    assert run(["dist", write("three.json", identity(3)), good], capsys)[0] == 2
    assert run(["dist", write("neg.json", diag([1.0, -1.0])), good], capsys)[0] == 2
    assert run(["mean", "--f", "weighted_geometric", "--t", "2", good, good], capsys)[0] == 2


def test_numerical_failure_exit_3(write, capsys, monkeypatch):
    from kamean import means
    from kamean.errors import ConvergenceFailure

    def boom(*a, **k):
        raise ConvergenceFailure("forced")

    monkeypatch.setattr(means, "kubo_ando_mean", boom)
    g = write("g.json", identity(2))
    code, _, err = run(["mean", "--f", "geometric", g, g], capsys)
    assert code == 3 and "numerical" in err


def test_verify(capsys):
    code, out, _ = run(["verify", "--suite", "counterexample"], capsys)
    assert code == 0
    rec = json.loads(out)
    assert rec["suite"] == "counterexample" and rec["passed"] and rec["max_residual"] > 0.01
    code, out, _ = run(["verify", "--suite", "correspondence-C", "--trials", "5", "--seed", "1"], capsys)
    rec = json.loads(out)
    assert code == 0 and rec["trials"] == 5 and rec["seed"] == 1


def test_verify_failure_exit_1(capsys, monkeypatch):
    from kamean import verify
    monkeypatch.setattr(verify, "psi1", lambda X: Matrix(np.kron(np.eye(2), X.data.real)))
    code, out, _ = run(["verify", "--suite", "embeddings", "--trials", "3"], capsys)
    assert code == 1 and not json.loads(out)["passed"]


def test_unknown_suite_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kamean.cli", "gen", "--algebra", "R", "--n", "1", "--seed", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert parse_matrix_document(proc.stdout).n == 1
