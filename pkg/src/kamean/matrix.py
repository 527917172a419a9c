"""Dense square matrices over R, C and H.

A :class:`Matrix` pairs an :class:`Algebra` tag with a numpy array:

* ``R``: float64 array of shape ``(n, n)``
* ``C``: complex128 array of shape ``(n, n)``
* ``H``: float64 array of shape ``(n, n, 4)`` holding quaternion components

Quaternionic matrices act on column vectors with scalars on the right, so
``A v = v lam`` is the eigenvalue convention throughout.
"""
from __future__ import annotations

from enum import Enum

import numpy as np

from . import algebra as alg
from .errors import AlgebraMismatch, DimensionMismatch, NotHermitian

HERMITIAN_RTOL = 1e-10
PD_TOL = 1e-12
LOEWNER_TOL = 1e-10


class Algebra(str, Enum):
    R = "R"
    C = "C"
    H = "H"


class Matrix:
    """Immutable n-by-n matrix over a tagged division algebra."""

    __slots__ = ("tag", "data")

    def __init__(self, data, tag: Algebra | str = Algebra.R):
        tag = Algebra(tag)
        if tag is Algebra.R:
            arr = np.array(data, dtype=np.float64)
            if arr.ndim != 2:
                raise DimensionMismatch(f"real matrix needs 2 axes, got shape {arr.shape}")
        elif tag is Algebra.C:
            arr = np.array(data, dtype=np.complex128)
            if arr.ndim != 2:
                raise DimensionMismatch(f"complex matrix needs 2 axes, got shape {arr.shape}")
        else:
            arr = np.array(data, dtype=np.float64)
            if arr.ndim != 3 or arr.shape[2] != 4:
                raise DimensionMismatch(f"quaternion matrix needs shape (n, n, 4), got {arr.shape}")
        if arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise DimensionMismatch(f"matrix must be square and non-empty, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("matrix entries must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def n(self) -> int:
        return self.data.shape[0]

    def __repr__(self) -> str:
        return f"Matrix(tag={self.tag.value}, n={self.n},\n{self.data!r})"

    def __add__(self, other: "Matrix") -> "Matrix":
        return add(self, other)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return sub(self, other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def __neg__(self) -> "Matrix":
        return Matrix(-self.data, self.tag)

    def __mul__(self, s) -> "Matrix":
        return scale(s, self)

    def __rmul__(self, s) -> "Matrix":
        return scale(s, self)

    def __truediv__(self, s: float) -> "Matrix":
        return scale(1.0 / s, self)

    @property
    def H(self) -> "Matrix":
        return adjoint(self)


# -- constructors -----------------------------------------------------------

def identity(n: int, tag: Algebra | str = Algebra.R) -> Matrix:
    return diag(np.ones(n), tag)


def zeros(n: int, tag: Algebra | str = Algebra.R) -> Matrix:
    tag = Algebra(tag)
    shape = (n, n, 4) if tag is Algebra.H else (n, n)
    return Matrix(np.zeros(shape), tag)


def diag(values, tag: Algebra | str = Algebra.R) -> Matrix:
    """Diagonal matrix with real diagonal ``values``."""
    tag = Algebra(tag)
    values = np.asarray(values, dtype=np.float64)
    n = values.shape[0]
    if tag is Algebra.H:
        arr = np.zeros((n, n, 4))
        arr[np.arange(n), np.arange(n), 0] = values
        return Matrix(arr, tag)
    return Matrix(np.diag(values), tag)


def from_quaternions(rows) -> Matrix:
    """Build a quaternionic matrix from nested lists of :class:`Quaternion`
    (or length-4 sequences)."""
    arr = np.array([[q.to_array() if isinstance(q, alg.Quaternion) else q for q in row]
                    for row in rows], dtype=np.float64)
    return Matrix(arr, Algebra.H)


def entry(X: Matrix, i: int, j: int):
    """Entry ``(i, j)`` as a Python scalar (Quaternion over H)."""
    if X.tag is Algebra.H:
        return alg.Quaternion.from_array(X.data[i, j])
    if X.tag is Algebra.C:
        return complex(X.data[i, j])
    return float(X.data[i, j])


# -- ring operations --------------------------------------------------------

def _check_pair(A: Matrix, B: Matrix) -> None:
    if A.tag is not B.tag:
        raise AlgebraMismatch(f"cannot combine {A.tag.value} and {B.tag.value} matrices")
    if A.n != B.n:
        raise DimensionMismatch(f"sizes differ: {A.n} vs {B.n}")


def add(A: Matrix, B: Matrix) -> Matrix:
    _check_pair(A, B)
    return Matrix(A.data + B.data, A.tag)


def sub(A: Matrix, B: Matrix) -> Matrix:
    _check_pair(A, B)
    return Matrix(A.data - B.data, A.tag)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    _check_pair(A, B)
    if A.tag is Algebra.H:
        return Matrix(alg.qmatmul(A.data, B.data), A.tag)
    return Matrix(A.data @ B.data, A.tag)


def scale(s, X: Matrix) -> Matrix:
    """Left scalar multiplication ``s X``.

    ``s`` may be real, complex (for C) or a :class:`Quaternion` (for H).
    """
    if isinstance(s, alg.Quaternion):
        if X.tag is not Algebra.H:
            raise AlgebraMismatch("quaternion scalar on a non-quaternionic matrix")
        return Matrix(alg.qmul_array(s.to_array(), X.data), X.tag)
    if isinstance(s, complex) or np.iscomplexobj(s):
        if X.tag is Algebra.R:
            raise AlgebraMismatch("complex scalar on a real matrix")
        if X.tag is Algebra.H:
            return scale(alg.complex_join(s, 0.0), X)
    return Matrix(s * X.data, X.tag)


def conj_entries(X: Matrix) -> Matrix:
    """Entrywise conjugation (no transpose)."""
    if X.tag is Algebra.H:
        return Matrix(alg.qconj_array(X.data), X.tag)
    if X.tag is Algebra.C:
        return Matrix(np.conj(X.data), X.tag)
    return X


def transpose(X: Matrix) -> Matrix:
    """Plain transpose (no conjugation)."""
    axes = (1, 0, 2) if X.tag is Algebra.H else (1, 0)
    return Matrix(np.transpose(X.data, axes), X.tag)


def adjoint(X: Matrix) -> Matrix:
    """Conjugate transpose under the tag's conjugation."""
    return transpose(conj_entries(X))


# -- norms and predicates ---------------------------------------------------

def fro_norm(X: Matrix) -> float:
    return float(np.sqrt(np.sum(np.abs(X.data) ** 2)))


def max_entry_norm(X: Matrix) -> float:
    if X.tag is Algebra.H:
        return float(np.max(np.sqrt(np.sum(X.data ** 2, axis=-1))))
    return float(np.max(np.abs(X.data)))


def inner(X: Matrix, Y: Matrix) -> float:
    """Real Frobenius inner product ``Re tr(X* Y)``."""
    _check_pair(X, Y)
    return float(np.sum((np.conj(X.data) * Y.data).real))


def default_hermitian_tol(X: Matrix) -> float:
    return HERMITIAN_RTOL * max(1.0, fro_norm(X))


def is_hermitian(X: Matrix, tol: float | None = None) -> bool:
    if tol is None:
        tol = default_hermitian_tol(X)
    return max_entry_norm(sub(X, adjoint(X))) <= tol


def require_hermitian(X: Matrix, tol: float | None = None, what: str = "matrix") -> None:
    if not is_hermitian(X, tol):
        raise NotHermitian(f"{what} is not Hermitian")


def is_positive_definite(X: Matrix, tol: float = PD_TOL) -> bool:
    """True iff the smallest eigenvalue exceeds ``tol * max(1, ||X||_F)``.

    Raises NotHermitian for non-Hermitian input.
    """
    from .spectral import eigvalsh

    require_hermitian(X)
    return float(eigvalsh(X)[0]) > tol * max(1.0, fro_norm(X))


def loewner_leq(A: Matrix, B: Matrix, tol: float = LOEWNER_TOL) -> bool:
    """``A <= B`` in the Loewner order, i.e. ``B - A`` is positive semidefinite."""
    from .spectral import eigvalsh

    _check_pair(A, B)
    require_hermitian(A, what="A")
    require_hermitian(B, what="B")
    D = hermitian_sym(sub(B, A))
    return float(eigvalsh(D)[0]) >= -tol * max(1.0, fro_norm(D))


def hermitian_sym(X: Matrix) -> Matrix:
    return Matrix(0.5 * (X.data + adjoint(X).data), X.tag)


def trace(X: Matrix):
    """Sum of the diagonal; a Quaternion over H."""
    d = np.diagonal(X.data, axis1=0, axis2=1)
    if X.tag is Algebra.H:
        return alg.Quaternion.from_array(d.sum(axis=-1))
    if X.tag is Algebra.C:
        return complex(d.sum())
    return float(d.sum())


def reduced_trace(X: Matrix) -> float:
    """Real part of the trace.  Over H the input must be Hermitian."""
    if X.tag is Algebra.H:
        require_hermitian(X)
        return float(np.trace(X.data[:, :, 0]))
    return float(np.real(np.trace(X.data)))
