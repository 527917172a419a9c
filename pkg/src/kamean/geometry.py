"""Frobenius norms and Log-Euclidean geometry on positive definite cones."""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .embed import in_image_psi1, in_image_psi2
from .errors import NotInImage, WeightMismatch
from .matrix import Algebra, Matrix, _check_pair, fro_norm
from .spectral import mexp, mlog

WEIGHT_TOL = 1e-12


def frobenius_norm(X: Matrix) -> float:
    """``sqrt(tr(X* X))``: the root sum of squared component magnitudes."""
    return fro_norm(X)


def log_euclidean_distance(A: Matrix, B: Matrix) -> float:
    """``||log A - log B||_F``."""
    _check_pair(A, B)
    return fro_norm(mlog(A) - mlog(B))


def scaled_distance_on_image(A: Matrix, B: Matrix, which: str) -> float:
    """Log-Euclidean distance rescaled by ``1/sqrt(2)`` on an embedded cone.

    ``which`` is ``"psi1_image"`` (real matrices commuting with K) or
    ``"psi2_image"`` (complex matrices with ``K conj(Y) = Y K``).  With this
    scaling the embeddings are isometries.
    """
    if which == "psi1_image":
        member = in_image_psi1
        tag = Algebra.R
    elif which == "psi2_image":
        member = in_image_psi2
        tag = Algebra.C
    else:
        raise ValueError(f"which must be 'psi1_image' or 'psi2_image', got {which!r}")
    for name, X in (("A", A), ("B", B)):
        if X.tag is not tag or not member(X):
            raise NotInImage(f"{name} is not in the {which}")
    return log_euclidean_distance(A, B) / math.sqrt(2.0)


def check_weights(w: Sequence[float], k: int) -> np.ndarray:
    w = np.asarray(w, dtype=np.float64)
    if w.ndim != 1 or w.shape[0] != k:
        raise WeightMismatch(f"expected {k} weights, got {w.shape}")
    if np.any(w <= 0):
        raise WeightMismatch("weights must be positive")
    if abs(float(w.sum()) - 1.0) > WEIGHT_TOL:
        raise WeightMismatch(f"weights sum to {w.sum()!r}, not 1")
    return w


def log_euclidean_barycenter(As: Sequence[Matrix], w: Sequence[float] | None = None) -> Matrix:
    """Weighted Log-Euclidean barycenter ``exp(sum_j w_j log A_j)``.

    Uniform weights when ``w`` is None.
    """
    As = list(As)
    if not As:
        raise WeightMismatch("need at least one matrix")
    if w is None:
        w = np.full(len(As), 1.0 / len(As))
        w[-1] = 1.0 - w[:-1].sum()
    w = check_weights(w, len(As))
    for A in As[1:]:
        _check_pair(As[0], A)
    acc = sum((mlog(A) * float(wj) for A, wj in zip(As[1:], w[1:])), mlog(As[0]) * float(w[0]))
    return mexp(acc)
