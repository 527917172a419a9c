"""Matrix documents and random test matrices.

A matrix document is JSON of the form::

    {"algebra": "C", "n": 2, "data": [[[1, 0], [0, 1]], [[0, -1], [2, 0]]]}

Real entries are numbers, complex entries ``[re, im]`` and quaternionic
entries ``[a, b, c, d]``.  Floats are written with ``repr`` so a
parse/serialize round trip is bit-exact.
"""
from __future__ import annotations

import json
import math

import numpy as np

from .algebra import qmatmul
from .errors import ArityError, ParseError, ShapeError
from .matrix import Algebra, Matrix, adjoint, identity

ARITY = {Algebra.R: 1, Algebra.C: 2, Algebra.H: 4}


def _number(x) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ParseError(f"expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise ParseError("entries must be finite")
    return x


def _entry(raw, tag: Algebra) -> list[float]:
    arity = ARITY[tag]
    if tag is Algebra.R:
        if isinstance(raw, list):
            raise ArityError(f"real entry must be a number, got a list of {len(raw)}")
        return [_number(raw)]
    if not isinstance(raw, list) or len(raw) != arity:
        got = len(raw) if isinstance(raw, list) else "a scalar"
        raise ArityError(f"{tag.value} entry must have {arity} components, got {got}")
    return [_number(x) for x in raw]


def document_to_matrix(doc: dict) -> Matrix:
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    try:
        tag = Algebra(doc["algebra"])
        n = doc["n"]
        data = doc["data"]
    except KeyError as exc:
        raise ParseError(f"missing field {exc}") from None
    except ValueError:
        raise ParseError(f"unknown algebra {doc.get('algebra')!r}") from None
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ShapeError(f"n must be a positive integer, got {n!r}")
    if not isinstance(data, list) or len(data) != n or any(
        not isinstance(row, list) or len(row) != n for row in data
    ):
        raise ShapeError(f"data must be an {n}x{n} nested list")
    comps = np.array([[_entry(e, tag) for e in row] for row in data], dtype=np.float64)
    if tag is Algebra.R:
        return Matrix(comps[..., 0], tag)
    if tag is Algebra.C:
        return Matrix(comps[..., 0] + 1j * comps[..., 1], tag)
    return Matrix(comps, tag)


def parse_matrix_document(text: str | bytes) -> Matrix:
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    return document_to_matrix(doc)


def matrix_to_document(X: Matrix) -> dict:
    if X.tag is Algebra.R:
        data = X.data.tolist()
    elif X.tag is Algebra.C:
        data = np.stack([X.data.real, X.data.imag], axis=-1).tolist()
    else:
        data = X.data.tolist()
    return {"algebra": X.tag.value, "n": X.n, "data": data}


def serialize_matrix(X: Matrix) -> str:
    return json.dumps(matrix_to_document(X))


def read_matrix(path) -> Matrix:
    with open(path, "rb") as fh:
        return parse_matrix_document(fh.read())


def format_scalar(x: float) -> str:
    """Decimal with 17 significant digits."""
    return format(float(x), ".17g")


def random_matrix(algebra: Algebra | str, n: int, rng: np.random.Generator) -> Matrix:
    """Matrix with every real component uniform in [-1, 1]."""
    tag = Algebra(algebra)
    if tag is Algebra.R:
        return Matrix(rng.uniform(-1.0, 1.0, (n, n)), tag)
    if tag is Algebra.C:
        comps = rng.uniform(-1.0, 1.0, (n, n, 2))
        return Matrix(comps[..., 0] + 1j * comps[..., 1], tag)
    return Matrix(rng.uniform(-1.0, 1.0, (n, n, 4)), tag)


def random_hpd(algebra: Algebra | str, n: int, rng: np.random.Generator,
               ridge: float | None = None) -> Matrix:
    """``G G* + ridge I`` with ``G`` from :func:`random_matrix`;
    ``ridge`` defaults to ``0.001 n``."""
    if n < 1:
        raise ValueError("n must be positive")
    G = random_matrix(algebra, n, rng)
    Gs = adjoint(G)
    if G.tag is Algebra.H:
        M = Matrix(qmatmul(G.data, Gs.data), G.tag)
    else:
        M = Matrix(G.data @ Gs.data, G.tag)
    # exact Hermitian symmetry before adding the ridge
    M = Matrix(0.5 * (M.data + adjoint(M).data), M.tag)
    ridge = 0.001 * n if ridge is None else ridge
    return M + identity(n, M.tag) * ridge


def gen_random_hpd(algebra: Algebra | str, n: int, seed: int) -> Matrix:
    """Deterministic random Hermitian positive definite matrix for ``seed``."""
    return random_hpd(algebra, n, np.random.default_rng(seed))
