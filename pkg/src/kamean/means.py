"""Kubo-Ando means of positive definite matrices.

A mean is generated by its representing function ``f`` (operator monotone on
``(0, inf)`` with ``f(1) = 1``)::

    A sigma B = A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}

For 2x2 inputs the same mean is an affine combination ``alpha A + beta B``
whose coefficients depend only on the two eigenvalues of
``X = A^{-1/2} B A^{-1/2}``, which in turn follow from its trace and
determinant.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .embed import in_image_psi1, psi1, psi2
from .errors import (
    DegenerateFit,
    DimensionMismatch,
    FunctionDomainError,
    InvalidSpectrumData,
    MonotonicitySmokeWarning,
    NotInImage,
    NotPositiveDefinite,
)
from .matrix import (
    Algebra,
    Matrix,
    _check_pair,
    adjoint,
    fro_norm,
    hermitian_sym,
    inner,
    matmul,
    reduced_trace,
    require_hermitian,
)
from .spectral import EigenDecomposition, _check_pd, eig_hermitian, function_of

GAP_RTOL = 1e-7
EXACT_GAP_RTOL = 1e-12
FD_RSTEP = 1e-5
_GRID = np.logspace(-6, 6, 121)


@dataclass(frozen=True)
class RepresentingFunction:
    """A named scalar function ``f`` on ``(0, inf)`` with ``f(1) = 1``.

    ``eval`` must accept numpy arrays.  Construction checks the normalisation
    and positivity on a log grid; a failed monotonicity smoke test only warns,
    since operator monotonicity cannot be decided numerically.
    """

    name: str
    eval: Callable[[np.ndarray], np.ndarray] = field(repr=False)

    def __post_init__(self):
        one = float(np.asarray(self.eval(np.array([1.0])))[0])
        if abs(one - 1.0) > 1e-12:
            raise ValueError(f"{self.name}: f(1) = {one!r}, expected 1")
        with np.errstate(all="ignore"):
            vals = np.asarray(self.eval(_GRID), dtype=np.float64)
        if not np.all(np.isfinite(vals)) or np.any(vals <= 0):
            raise ValueError(f"{self.name}: f must be finite and positive on (0, inf)")
        if np.any(np.diff(vals) < -1e-12 * np.abs(vals[1:])):
            warnings.warn(f"{self.name}: f is not monotone on the sample grid",
                          MonotonicitySmokeWarning, stacklevel=3)

    def __call__(self, x):
        return self.eval(np.asarray(x, dtype=np.float64))

    @property
    def value_at_one(self) -> float:
        return float(self(np.array([1.0]))[0])


def _logarithmic(x: np.ndarray) -> np.ndarray:
    u = x - 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        out = u / np.log1p(u)
    return np.where(u == 0.0, 1.0, out)


def weighted_geometric(t: float) -> RepresentingFunction:
    """``f(x) = x**t`` for ``t`` in ``[0, 1]``."""
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"weighted geometric parameter must lie in [0, 1], got {t}")
    return RepresentingFunction(f"weighted_geometric[t={t:g}]", lambda x: np.power(x, t))


arithmetic = RepresentingFunction("arithmetic", lambda x: 0.5 * (1.0 + x))
geometric = RepresentingFunction("geometric", np.sqrt)
harmonic = RepresentingFunction("harmonic", lambda x: 2.0 * x / (1.0 + x))
logarithmic = RepresentingFunction("logarithmic", _logarithmic)

DEFAULT_WEIGHT = 0.25


def catalog() -> list[RepresentingFunction]:
    return [arithmetic, geometric, harmonic, weighted_geometric(DEFAULT_WEIGHT), logarithmic]


def by_name(name: str, t: float | None = None) -> RepresentingFunction:
    """Look up a catalog mean; ``weighted_geometric`` takes the parameter ``t``."""
    fixed = {f.name: f for f in (arithmetic, geometric, harmonic, logarithmic)}
    if name in fixed:
        return fixed[name]
    if name == "weighted_geometric":
        return weighted_geometric(DEFAULT_WEIGHT if t is None else t)
    raise KeyError(f"unknown mean {name!r}; choose from {sorted(fixed) + ['weighted_geometric']}")


@dataclass(frozen=True)
class MeanResult:
    value: Matrix
    path: str
    eigen_gap: float = math.nan
    residual: float = 0.0  # ||M - M*||_F before symmetrisation


def _symmetrized(M: Matrix) -> tuple[Matrix, float]:
    return hermitian_sym(M), fro_norm(M - adjoint(M))


def _pd_eig(X: Matrix, what: str) -> EigenDecomposition:
    require_hermitian(X, what=what)
    eig = eig_hermitian(X)
    try:
        _check_pd(X, eig)
    except NotPositiveDefinite as exc:
        raise NotPositiveDefinite(f"{what}: {exc}") from None
    return eig


def _congruence_parts(A: Matrix, B: Matrix):
    """``(A^{1/2}, A^{-1/2} B A^{-1/2})`` from one decomposition of ``A``."""
    _check_pair(A, B)
    eigA = _pd_eig(A, "A")
    _pd_eig(B, "B")
    root = function_of(eigA, np.sqrt)
    inv_root = function_of(eigA, lambda lam: 1.0 / np.sqrt(lam))
    X = hermitian_sym(matmul(matmul(inv_root, B), inv_root))
    return root, X


def kubo_ando_mean(A: Matrix, B: Matrix, f: RepresentingFunction) -> MeanResult:
    """``A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}`` by functional calculus."""
    root, X = _congruence_parts(A, B)
    fX = function_of(eig_hermitian(X), f)
    value, defect = _symmetrized(matmul(matmul(root, fX), root))
    return MeanResult(value, "direct", residual=defect)


def _embed(X: Matrix) -> Matrix:
    return psi1(X) if X.tag is Algebra.C else psi2(X)


def mean_correspondence_residual(A: Matrix, B: Matrix, f: RepresentingFunction) -> float:
    """Relative gap between embedding the mean and taking the mean of the
    embedded matrices (psi1 for C inputs, psi2 for H inputs)."""
    if A.tag not in (Algebra.C, Algebra.H):
        raise ValueError("correspondence residual needs C or H matrices")
    down = _embed(kubo_ando_mean(A, B, f).value)
    up = kubo_ando_mean(_embed(A), _embed(B), f).value
    return float(np.linalg.norm(down.data - up.data)) / max(1.0, fro_norm(down))


# -- 2x2 closed forms -------------------------------------------------------

def eigs_from_trace_det(tr: float, det: float) -> tuple[float, float]:
    """Roots ``lam_plus >= lam_minus`` of ``lam^2 - tr lam + det``."""
    if not (tr > 0 and det > 0):
        raise InvalidSpectrumData(f"need positive trace and determinant, got ({tr}, {det})")
    disc = tr * tr - 4.0 * det
    if disc < -1e-12 * max(1.0, tr * tr):
        raise InvalidSpectrumData(f"negative discriminant {disc:.3e}")
    root = math.sqrt(max(disc, 0.0))
    lam_plus = 0.5 * (tr + root)
    # product form avoids cancellation in the smaller root
    lam_minus = min(det / lam_plus, lam_plus)
    return lam_plus, lam_minus


def affine_coefficients_2x2(lam_plus: float, lam_minus: float,
                            f: RepresentingFunction) -> tuple[float, float]:
    """``(alpha, beta)`` with ``alpha + beta t = f(t)`` at both eigenvalues.

    Gaps below ``1e-7 * max(1, lam_plus)`` use the derivative at the midpoint
    (central difference); gaps below ``1e-12 * max(1, lam_plus)`` fall back to
    ``(f(lam_plus), 0)``.
    """
    if not lam_plus >= lam_minus > 0:
        raise InvalidSpectrumData(f"need lam_plus >= lam_minus > 0, got ({lam_plus}, {lam_minus})")
    gap = lam_plus - lam_minus
    ref = max(1.0, lam_plus)
    fp, fm = (float(v) for v in f(np.array([lam_plus, lam_minus])))
    if not (math.isfinite(fp) and math.isfinite(fm)):
        raise FunctionDomainError("f is not finite at the eigenvalues")
    if gap > GAP_RTOL * ref:
        beta = (fp - fm) / gap
        alpha = (lam_plus * fm - lam_minus * fp) / gap
        return alpha, beta
    if gap <= EXACT_GAP_RTOL * ref:
        return fp, 0.0
    mid = 0.5 * (lam_plus + lam_minus)
    h = FD_RSTEP * mid
    f_hi, f_lo = (float(v) for v in f(np.array([mid + h, mid - h])))
    beta = (f_hi - f_lo) / (2.0 * h)
    alpha = 0.5 * (fp + fm) - beta * mid
    return alpha, beta


def moore_det_2x2(X: Matrix) -> float:
    """Determinant of a 2x2 Hermitian matrix ``[[a, q], [conj(q), d]]`` as
    ``a d - |q|^2``; over H this is the Moore determinant."""
    if X.n != 2:
        raise DimensionMismatch("expected a 2x2 matrix")
    require_hermitian(X)
    if X.tag is Algebra.H:
        a, d = X.data[0, 0, 0], X.data[1, 1, 0]
        q2 = float(np.sum(X.data[0, 1] ** 2))
    else:
        a, d = np.real(X.data[0, 0]), np.real(X.data[1, 1])
        q2 = float(np.abs(X.data[0, 1]) ** 2)
    return float(a * d - q2)


def _require_2x2(A: Matrix, B: Matrix) -> None:
    _check_pair(A, B)
    if A.n != 2:
        raise DimensionMismatch(f"closed forms need 2x2 matrices, got n={A.n}")


def mean_2x2_closed_form(A: Matrix, B: Matrix, f: RepresentingFunction) -> MeanResult:
    """``alpha A + beta B`` with coefficients from trace and determinant of
    ``A^{-1/2} B A^{-1/2}``."""
    _require_2x2(A, B)
    _, X = _congruence_parts(A, B)
    lam_plus, lam_minus = eigs_from_trace_det(reduced_trace(X), moore_det_2x2(X))
    alpha, beta = affine_coefficients_2x2(lam_plus, lam_minus, f)
    value, defect = _symmetrized(A * alpha + B * beta)
    return MeanResult(value, "closed_form_2x2", eigen_gap=lam_plus - lam_minus, residual=defect)


def geometric_mean_trace_det(A: Matrix, B: Matrix) -> Matrix:
    """Geometric mean of 2x2 positive definite matrices,
    ``(B + sqrt(det X) A) / sqrt(tr X + 2 sqrt(det X))``."""
    _require_2x2(A, B)
    _, X = _congruence_parts(A, B)
    tr, det = reduced_trace(X), moore_det_2x2(X)
    if det <= 0:
        raise NotPositiveDefinite("A^{-1/2} B A^{-1/2} has non-positive determinant")
    sdet = math.sqrt(det)
    return hermitian_sym((B + A * sdet) / math.sqrt(tr + 2.0 * sdet))


def affine_coefficients_embedded4(T: Matrix, f: RepresentingFunction):
    """``(alpha, beta, lam_plus, lam_minus)`` for a 4x4 real ``T`` in the
    image of psi1.

    ``lam_plus + lam_minus = tr(T) / 2`` and ``lam_plus lam_minus = det(T)^{1/2}``
    because every eigenvalue of ``T`` is doubled.
    """
    if T.tag is not Algebra.R or T.n != 4:
        raise DimensionMismatch("expected a real 4x4 matrix")
    if not in_image_psi1(T):
        raise NotInImage("T does not commute with K_4")
    _pd_eig(T, "T")
    det = float(np.linalg.det(T.data))
    if det <= 0:
        raise NotPositiveDefinite("T has non-positive determinant")
    lam_plus, lam_minus = eigs_from_trace_det(0.5 * reduced_trace(T), math.sqrt(det))
    alpha, beta = affine_coefficients_2x2(lam_plus, lam_minus, f)
    return alpha, beta, lam_plus, lam_minus


def embedded_mean_4x4(X: Matrix, Y: Matrix, f: RepresentingFunction) -> MeanResult:
    """The mean of two 4x4 real matrices from the psi1 image via
    :func:`affine_coefficients_embedded4`."""
    _check_pair(X, Y)
    _, T = _congruence_parts(X, Y)
    alpha, beta, lp, lm = affine_coefficients_embedded4(T, f)
    value, defect = _symmetrized(X * alpha + Y * beta)
    return MeanResult(value, "closed_form_2x2", eigen_gap=lp - lm, residual=defect)


def affine_fit_residual(X: Matrix, Y: Matrix, M: Matrix) -> tuple[float, float, float]:
    """Least-squares ``(alpha, beta)`` minimising ``||M - alpha X - beta Y||_F``
    and the minimal distance.

    Solves the 2x2 normal equations in the real Frobenius inner product.  If
    ``X`` and ``Y`` are linearly dependent a :class:`DegenerateFit` warning is
    emitted and the one-parameter fit along ``X`` is returned.
    """
    _check_pair(X, Y)
    _check_pair(X, M)
    gxx, gxy, gyy = inner(X, X), inner(X, Y), inner(Y, Y)
    bx, by = inner(X, M), inner(Y, M)
    det = gxx * gyy - gxy * gxy
    if det <= 1e-12 * gxx * gyy:
        warnings.warn("X and Y are linearly dependent; fitting along X only",
                      DegenerateFit, stacklevel=2)
        alpha = bx / gxx if gxx > 0 else 0.0
        beta = 0.0
    else:
        alpha = (gyy * bx - gxy * by) / det
        beta = (gxx * by - gxy * bx) / det
    resid = fro_norm(M - X * alpha - Y * beta)
    return float(alpha), float(beta), resid
