"""Realification of complex matrices and complexification of quaternionic ones.

``psi1(A + iB) = [[A, B], [-B, A]]`` maps ``Mat_n(C)`` into ``Mat_2n(R)`` and
``psi2(Z1 + Z2 j) = [[Z1, Z2], [-conj(Z2), conj(Z1)]]`` maps ``Mat_n(H)`` into
``Mat_2n(C)``.  Both are injective algebra morphisms that carry adjoints to
adjoints.  Their images are characterised by commutation with the structure
matrix ``K = [[0, I], [-I, 0]]``: ``K Y = Y K`` for psi1 and
``K conj(Y) = Y K`` for psi2.
"""
from __future__ import annotations

import numpy as np

from . import algebra as alg
from .errors import AlgebraMismatch, NotInImage, OddDimension
from .matrix import Algebra, Matrix

IMAGE_RTOL = 1e-10


def structure_matrix(n: int) -> np.ndarray:
    """The 2n-by-2n block matrix ``[[0, I_n], [-I_n, 0]]``."""
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


def _require(X: Matrix, tag: Algebra, op: str) -> None:
    if X.tag is not tag:
        raise AlgebraMismatch(f"{op} expects a {tag.value} matrix, got {X.tag.value}")


def _half(Y: Matrix) -> int:
    if Y.n % 2:
        raise OddDimension(f"size {Y.n} is odd")
    return Y.n // 2


def psi1(X: Matrix) -> Matrix:
    _require(X, Algebra.C, "psi1")
    A, B = X.data.real, X.data.imag
    return Matrix(np.block([[A, B], [-B, A]]), Algebra.R)


def psi2(X: Matrix) -> Matrix:
    _require(X, Algebra.H, "psi2")
    Z1, Z2 = alg.split_array(X.data)
    return Matrix(np.block([[Z1, Z2], [-np.conj(Z2), np.conj(Z1)]]), Algebra.C)


def psi12(X: Matrix) -> Matrix:
    """Composite embedding ``psi1(psi2(X))`` of ``Mat_n(H)`` into ``Mat_4n(R)``."""
    return psi1(psi2(X))


def psi1_commutator(Y: Matrix) -> float:
    """``||K Y - Y K||_F`` for a real matrix of even size."""
    _require(Y, Algebra.R, "psi1 image test")
    K = structure_matrix(_half(Y))
    return float(np.linalg.norm(K @ Y.data - Y.data @ K))


def psi2_commutator(Y: Matrix) -> float:
    """``||K conj(Y) - Y K||_F`` for a complex matrix of even size."""
    _require(Y, Algebra.C, "psi2 image test")
    K = structure_matrix(_half(Y))
    return float(np.linalg.norm(K @ np.conj(Y.data) - Y.data @ K))


def _scaled(tol: float, Y: Matrix) -> float:
    return tol * max(1.0, float(np.linalg.norm(Y.data)))


def in_image_psi1(Y: Matrix, tol: float = IMAGE_RTOL) -> bool:
    return psi1_commutator(Y) <= _scaled(tol, Y)


def in_image_psi2(Y: Matrix, tol: float = IMAGE_RTOL) -> bool:
    return psi2_commutator(Y) <= _scaled(tol, Y)


def psi1_inv(Y: Matrix, tol: float = IMAGE_RTOL) -> Matrix:
    """Recover ``A + iB`` from the top block row of ``Y``.

    The bottom block row must equal ``(-B, A)`` within tolerance; no
    averaging is done.
    """
    n = _half(Y)
    if not in_image_psi1(Y, tol):
        raise NotInImage("matrix does not commute with K")
    A, B = Y.data[:n, :n], Y.data[:n, n:]
    dev = np.linalg.norm(Y.data[n:, :n] + B) + np.linalg.norm(Y.data[n:, n:] - A)
    if dev > _scaled(tol, Y):
        raise NotInImage(f"bottom block row deviates from (-B, A) by {dev:.3e}")
    return Matrix(A + 1j * B, Algebra.C)


def psi2_inv(Y: Matrix, tol: float = IMAGE_RTOL) -> Matrix:
    """Recover ``Z1 + Z2 j`` from the top block row of ``Y``."""
    n = _half(Y)
    if not in_image_psi2(Y, tol):
        raise NotInImage("matrix fails K conj(Y) = Y K")
    Z1, Z2 = Y.data[:n, :n], Y.data[:n, n:]
    dev = np.linalg.norm(Y.data[n:, :n] + np.conj(Z2)) + np.linalg.norm(Y.data[n:, n:] - np.conj(Z1))
    if dev > _scaled(tol, Y):
        raise NotInImage(f"bottom block row deviates by {dev:.3e}")
    return Matrix(alg.join_array(Z1, Z2), Algebra.H)
