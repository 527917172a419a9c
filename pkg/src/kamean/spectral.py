"""Hermitian eigendecomposition and functional calculus.

Real and complex Hermitian matrices are diagonalised with a cyclic Jacobi
method.  Rotations are applied in round-robin order, so each round acts on
n/2 disjoint index pairs at once.  Quaternionic Hermitian matrices are
diagonalised through their complexification: the 2n eigenvectors of
``psi2(X)`` come in pairs ``(v, K conj(v))``, one member of each pair is kept
and read back as a quaternionic column.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from . import algebra as alg
from .embed import psi2, structure_matrix
from .errors import ConvergenceFailure, FunctionDomainError, NotPositiveDefinite
from .matrix import (
    PD_TOL,
    Algebra,
    Matrix,
    adjoint,
    fro_norm,
    matmul,
    require_hermitian,
)

JACOBI_TOL = 1e-14
MAX_SWEEPS = 100
PAIRING_RTOL = 1e-8


@dataclass(frozen=True)
class EigenDecomposition:
    """``X = U diag(lambdas) U*`` with ``lambdas`` ascending."""

    U: Matrix
    lambdas: np.ndarray

    def reconstruct(self) -> Matrix:
        return _synthesize(self.U, self.lambdas)


@lru_cache(maxsize=None)
def _round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Rounds of disjoint index pairs covering every pair exactly once."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(a, b), max(a, b)) for a, b in pairs if a < n and b < n]
        if pairs:
            p, q = zip(*pairs)
            rounds.append((np.array(p), np.array(q)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _offdiag(A: np.ndarray) -> float:
    return float(np.linalg.norm(A - np.diag(np.diagonal(A))))


def jacobi_eigh(a: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = MAX_SWEEPS):
    """Eigenvalues (ascending) and eigenvectors of a real symmetric or complex
    Hermitian array.

    Sweeps stop once the off-diagonal Frobenius mass is at most
    ``tol * ||a||_F``.  A sweep that no longer halves the off-diagonal mass
    while it sits below ``1e-12 * ||a||_F`` is taken as the rounding floor.
    """
    A = 0.5 * (a + np.conj(a.T))
    n = A.shape[0]
    is_complex = np.iscomplexobj(A)
    V = np.eye(n, dtype=A.dtype)
    scale = float(np.linalg.norm(A))
    if n == 1 or scale == 0.0:
        return np.real(np.diagonal(A)).copy(), V
    rounds = _round_robin(n)
    off = _offdiag(A)
    for _ in range(max_sweeps):
        if off <= tol * scale:
            break
        for p, q in rounds:
            apq = A[p, q]
            mag = np.abs(apq)
            active = mag > 0.0
            safe = np.where(active, mag, 1.0)
            phase = np.where(active, apq / safe, 1.0)
            tau = (np.real(A[q, q]) - np.real(A[p, p])) / (2.0 * safe)
            sgn = np.where(tau >= 0.0, 1.0, -1.0)
            with np.errstate(over="ignore"):
                t = sgn / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
            t = np.where(np.isfinite(tau) & active, t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            cph = np.conj(phase) if is_complex else phase
            J = np.eye(n, dtype=A.dtype)
            J[p, p] = c
            J[p, q] = s
            J[q, p] = -s * cph
            J[q, q] = c * cph
            A = np.conj(J.T) @ A @ J
            V = V @ J
        new_off = _offdiag(A)
        if new_off > 0.5 * off and new_off <= 1e-12 * scale:
            off = new_off
            break
        off = new_off
    else:
        if off > tol * scale:
            raise ConvergenceFailure(f"Jacobi did not converge in {max_sweeps} sweeps (off={off:.3e})")
    w = np.real(np.diagonal(A)).copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def _normalize_columns(V: np.ndarray) -> np.ndarray:
    """Rotate each column so its first non-negligible component is real positive."""
    V = V.copy()
    for k in range(V.shape[1]):
        col = V[:, k]
        idx = np.flatnonzero(np.abs(col) > 1e-10 * max(np.max(np.abs(col)), 1e-300))
        if idx.size:
            z = col[idx[0]]
            V[:, k] = col * (np.conj(z) / abs(z))
    return V


def _normalize_quaternion_columns(U: np.ndarray) -> np.ndarray:
    """Right-multiply each quaternionic column by a unit quaternion making its
    first non-negligible entry real positive."""
    U = U.copy()
    mags = np.sqrt(np.sum(U ** 2, axis=-1))
    for k in range(U.shape[1]):
        col = mags[:, k]
        idx = np.flatnonzero(col > 1e-10 * max(col.max(), 1e-300))
        if idx.size:
            q = U[idx[0], k]
            unit = alg.qconj_array(q) / np.linalg.norm(q)
            U[:, k] = alg.qmul_array(U[:, k], unit)
    return U


def _quaternionic_eigh(X: Matrix) -> EigenDecomposition:
    n = X.n
    Y = psi2(X).data
    w, V = jacobi_eigh(Y)
    K = structure_matrix(n)
    tol = PAIRING_RTOL * max(1.0, fro_norm(X))
    # clusters of (numerically) equal eigenvalues
    bounds = [0]
    for i in range(1, 2 * n):
        if w[i] - w[i - 1] > tol:
            bounds.append(i)
    bounds.append(2 * n)
    lambdas, cols = [], []
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        size = hi - lo
        if size % 2:
            raise ConvergenceFailure(
                f"eigenvalue cluster near {w[lo]:.6g} has odd multiplicity {size}; cannot pair"
            )
        W = V[:, lo:hi].copy()
        for _ in range(size // 2):
            norms = np.linalg.norm(W, axis=0)
            k = int(np.argmax(norms))
            if norms[k] < 0.5:
                raise ConvergenceFailure("eigenvector pairing lost rank")
            v = W[:, k] / norms[k]
            partner = K @ np.conj(v)
            W = W - np.outer(v, np.conj(v) @ W) - np.outer(partner, np.conj(partner) @ W)
            lambdas.append(float(np.real(np.conj(v) @ Y @ v)))
            cols.append(v)
    vecs = np.array(cols).T
    # first column of psi2(u) for u = u1 + u2 j is [u1; -conj(u2)]
    u1 = vecs[:n]
    u2 = -np.conj(vecs[n:])
    lambdas = np.array(lambdas)
    order = np.argsort(lambdas, kind="stable")
    U = _normalize_quaternion_columns(alg.join_array(u1, u2)[:, order])
    return EigenDecomposition(Matrix(U, Algebra.H), lambdas[order])


def eig_hermitian(X: Matrix) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix over R, C or H.

    Over H the eigenvalues are the (real) right eigenvalues, ``X u = u lam``.
    """
    require_hermitian(X)
    if X.tag is Algebra.H:
        return _quaternionic_eigh(X)
    w, V = jacobi_eigh(X.data)
    return EigenDecomposition(Matrix(_normalize_columns(V), X.tag), w)


def eigvalsh(X: Matrix) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix (each once, also over H)."""
    if X.tag is Algebra.H:
        w, _ = jacobi_eigh(psi2(X).data)
        return 0.5 * (w[0::2] + w[1::2])
    return jacobi_eigh(X.data)[0]


def _synthesize(U: Matrix, values: np.ndarray) -> Matrix:
    values = np.asarray(values, dtype=np.float64)
    if U.tag is Algebra.H:
        scaled = Matrix(U.data * values[None, :, None], Algebra.H)
    else:
        scaled = Matrix(U.data * values[None, :], U.tag)
    M = matmul(scaled, adjoint(U))
    return Matrix(0.5 * (M.data + adjoint(M).data), U.tag)


def _check_pd(X: Matrix, eig: EigenDecomposition, tol: float = PD_TOL) -> None:
    if eig.lambdas[0] <= tol * max(1.0, fro_norm(X)):
        raise NotPositiveDefinite(f"smallest eigenvalue {eig.lambdas[0]:.3e} is not positive")


def function_of(eig: EigenDecomposition, f: Callable) -> Matrix:
    """``U f(Lambda) U*`` for an already computed decomposition."""
    with np.errstate(all="ignore"):
        values = np.asarray(f(eig.lambdas), dtype=np.float64)
    if values.shape != eig.lambdas.shape:
        values = np.broadcast_to(values, eig.lambdas.shape)
    if not np.all(np.isfinite(values)):
        raise FunctionDomainError("function is not finite on the spectrum")
    return _synthesize(eig.U, values)


def apply_function(X: Matrix, f: Callable) -> Matrix:
    """Functional calculus ``f(X)`` for positive definite ``X``.

    ``f`` is applied to the numpy array of eigenvalues.
    """
    eig = eig_hermitian(X)
    _check_pd(X, eig)
    return function_of(eig, f)


def mexp(X: Matrix) -> Matrix:
    """Matrix exponential of a Hermitian matrix."""
    return function_of(eig_hermitian(X), np.exp)


def mlog(X: Matrix) -> Matrix:
    return apply_function(X, np.log)


def mpow(X: Matrix, t: float) -> Matrix:
    """``exp(t log X)`` for positive definite ``X``."""
    return apply_function(X, lambda lam: np.power(lam, t))
