"""Frobenius-nearest structured matrices.

The subspaces targeted here are the Hermitian matrices, the real symmetric
matrices commuting with ``K = [[0, I], [-I, 0]]`` (the image of psi1), and the
complex Hermitian matrices with ``K conj(P) K^t = P`` (the image of psi2).
Each projection is the average of a matrix with its image under an
involutive isometry, so it is an orthogonal projection and it maps positive
definite matrices to positive definite matrices.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embed import structure_matrix
from .errors import AlgebraMismatch, NotPositiveDefinite, OddDimension
from .matrix import Algebra, Matrix, fro_norm, hermitian_sym, is_positive_definite


def hermitian_part(A: Matrix) -> Matrix:
    """``(A + A*) / 2``, the nearest Hermitian matrix."""
    return hermitian_sym(A)


def _prepare(A: Matrix, tag: Algebra) -> np.ndarray:
    if A.tag is not tag:
        raise AlgebraMismatch(f"expected a {tag.value} matrix, got {A.tag.value}")
    if A.n % 2:
        raise OddDimension(f"size {A.n} is odd")
    if not is_positive_definite(A):
        raise NotPositiveDefinite("input must be positive definite")
    return structure_matrix(A.n // 2)


def project_to_complex_structure(A: Matrix) -> Matrix:
    """Nearest symmetric matrix commuting with K: ``(A + K A K^t) / 2``.

    In block form ``A = [[X, Y], [Y^t, W]]`` the result is
    ``[[(X+W)/2, S], [-S, (X+W)/2]]`` with ``S = (Y - Y^t)/2``.
    """
    K = _prepare(A, Algebra.R)
    P = 0.5 * (A.data + K @ A.data @ K.T)
    return Matrix(0.5 * (P + P.T), Algebra.R)


def project_to_quaternionic_structure(A: Matrix) -> Matrix:
    """Nearest Hermitian matrix with ``K conj(P) K^t = P``:
    ``(A + K conj(A) K^t) / 2``."""
    K = _prepare(A, Algebra.C)
    P = 0.5 * (A.data + K @ np.conj(A.data) @ K.T)
    return Matrix(0.5 * (P + np.conj(P.T)), Algebra.C)


@dataclass(frozen=True)
class ComplexStructureReport:
    """Compares the orthogonal projection with the block recipe that keeps
    the off-diagonal block ``Y`` unchanged.

    The two agree exactly when ``Y`` is skew-symmetric, i.e. when
    ``symmetric_offdiag_defect = ||Y + Y^t||_F`` vanishes.
    """

    projection: Matrix
    distance: float
    block_recipe: Matrix
    block_recipe_distance: float
    symmetric_offdiag_defect: float


def complex_structure_report(A: Matrix) -> ComplexStructureReport:
    P = project_to_complex_structure(A)
    n = A.n // 2
    X, Y, W = A.data[:n, :n], A.data[:n, n:], A.data[n:, n:]
    Z = 0.5 * (X + W)
    recipe = Matrix(np.block([[Z, Y], [-Y, Z]]), Algebra.R)
    return ComplexStructureReport(
        projection=P,
        distance=fro_norm(A - P),
        block_recipe=recipe,
        block_recipe_distance=fro_norm(A - recipe),
        symmetric_offdiag_defect=float(np.linalg.norm(Y + Y.T)),
    )
