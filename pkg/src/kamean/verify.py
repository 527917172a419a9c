"""Randomised property suites replaying the correspondence results.

Every suite runs independent trials; trial ``i`` draws from
``np.random.default_rng([seed, i])`` so reports do not depend on execution
order.  A suite may combine several checks with different tolerances; each
raw residual is rescaled to the suite tolerance before taking the maximum, and
the raw per-check maxima are kept in :attr:`VerifyReport.checks`.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import geometry, means, project
from .embed import (
    psi1,
    psi1_commutator,
    psi1_inv,
    psi2,
    psi2_commutator,
    psi2_inv,
)
from .errors import UnknownSuite
from .io import random_hpd, random_matrix
from .matrix import (
    Algebra,
    Matrix,
    adjoint,
    diag,
    fro_norm,
    hermitian_sym,
    identity,
    is_positive_definite,
    transpose,
)
from .spectral import apply_function, eig_hermitian, eigvalsh, mpow

DEFAULT_TRIALS = 200
DEFAULT_SEED = 42


@dataclass
class VerifyReport:
    suite: str
    trials: int
    seed: int
    tolerance: float
    max_residual: float
    passed: bool
    direction: str = "upper"  # "upper": pass iff max_residual <= tolerance
    checks: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def _rel(X: Matrix, Y: Matrix) -> float:
    return float(np.linalg.norm(X.data - Y.data)) / max(1.0, fro_norm(Y))


def _embed(X: Matrix) -> Matrix:
    return psi1(X) if X.tag is Algebra.C else psi2(X)


def _pd_flag(X: Matrix) -> float:
    return 0.0 if is_positive_definite(X) else math.inf


def _min_eig_violation(D: Matrix) -> float:
    lam = float(eigvalsh(hermitian_sym(D))[0])
    return max(0.0, -lam) / max(1.0, fro_norm(D))


def _random_invertible(tag: Algebra, n: int, rng) -> Matrix:
    return random_matrix(tag, n, rng) + identity(n, tag) * float(n + 1)


def _random_unitary(tag: Algebra, n: int, rng) -> Matrix:
    G = random_matrix(tag, n, rng)
    return eig_hermitian(hermitian_sym(G)).U


# -- suites: each trial returns {check: raw residual} -----------------------

def _trial_embeddings(rng, i):
    n = int(rng.integers(1, 6))
    out = {}
    for tag, emb, inv, comm in ((Algebra.C, psi1, psi1_inv, psi1_commutator),
                                (Algebra.H, psi2, psi2_inv, psi2_commutator)):
        A, B = random_matrix(tag, n, rng), random_matrix(tag, n, rng)
        P = random_hpd(tag, n, rng)
        key = tag.value
        out[f"multiplicative_{key}"] = _rel(emb(A) @ emb(B), emb(A @ B))
        out[f"additive_{key}"] = _rel(emb(A) + emb(B), emb(A + B))
        if tag is Algebra.C:
            out[f"adjoint_{key}"] = _rel(transpose(emb(A)), emb(adjoint(A)))
        else:
            out[f"adjoint_{key}"] = _rel(adjoint(emb(A)), emb(adjoint(A)))
        out[f"pd_preserved_{key}"] = _pd_flag(emb(P))
        out[f"image_{key}"] = comm(emb(A)) / max(1.0, fro_norm(emb(A)))
        out[f"round_trip_{key}"] = _rel(inv(emb(A)), A)
    return out


_FC_FUNCS = {
    "sqrt": np.sqrt,
    "log": np.log,
    "square": np.square,
    "affine": lambda x: 0.5 * (1.0 + x),
}


def _trial_functional_calculus(rng, i):
    n = int(rng.integers(1, 5))
    name = list(_FC_FUNCS)[i % len(_FC_FUNCS)]
    f = _FC_FUNCS[name]
    out = {}
    for tag in (Algebra.C, Algebra.H):
        A = random_hpd(tag, n, rng)
        fA = apply_function(A, f)
        up = apply_function(_embed(A), f)
        out[f"{name}_{tag.value}"] = float(np.linalg.norm(up.data - _embed(fA).data)) / (1.0 + fro_norm(fA))
    return out


def _correspondence(tag):
    def trial(rng, i):
        f = means.catalog()[i % 5]
        n = int(rng.integers(1, 5))
        A, B = random_hpd(tag, n, rng), random_hpd(tag, n, rng)
        return {f.name: means.mean_correspondence_residual(A, B, f)}
    return trial


def _trial_isometry(rng, i):
    n = int(rng.integers(1, 5))
    out = {}
    for tag, which in ((Algebra.C, "psi1_image"), (Algebra.H, "psi2_image")):
        X = random_matrix(tag, n, rng)
        target = math.sqrt(2.0) * geometry.frobenius_norm(X)
        out[f"norm_scaling_{tag.value}"] = abs(geometry.frobenius_norm(_embed(X)) - target) / max(1.0, target)
        A, B = random_hpd(tag, n, rng), random_hpd(tag, n, rng)
        d = geometry.log_euclidean_distance(A, B)
        up = geometry.scaled_distance_on_image(_embed(A), _embed(B), which)
        out[f"distance_{tag.value}"] = abs(up - d) / (1.0 + d)
    return out


def _random_weights(k, rng):
    w = rng.uniform(0.05, 1.0, k)
    w = w / w.sum()
    w[-1] = 1.0 - w[:-1].sum()
    return w


def _trial_barycenter(rng, i):
    k = (2, 3, 5)[i % 3]
    n = int(rng.integers(1, 4))
    out = {}
    for tag in (Algebra.C, Algebra.H):
        As = [random_hpd(tag, n, rng) for _ in range(k)]
        w = _random_weights(k, rng)
        down = _embed(geometry.log_euclidean_barycenter(As, w))
        up = geometry.log_euclidean_barycenter([_embed(A) for A in As], w)
        out[f"push_forward_{tag.value}_k{k}"] = _rel(up, down)
    return out


def engineered_pair(tag: Algebra, gap: float | None, rng) -> tuple[Matrix, Matrix]:
    """A random 2x2 PD pair whose ``A^{-1/2} B A^{-1/2}`` has the given
    eigenvalue gap (random spectrum when ``gap`` is None)."""
    A = random_hpd(tag, 2, rng)
    if gap is None:
        return A, random_hpd(tag, 2, rng)
    lam = float(rng.uniform(0.5, 2.0))
    U = _random_unitary(tag, 2, rng)
    X = hermitian_sym(U @ diag([lam, lam + gap], tag) @ adjoint(U))
    root = mpow(A, 0.5)
    return A, hermitian_sym(root @ X @ root)


GAPS = (None, 1e-3, 1e-7, 0.0)
FD_BAND_TOL = 1e-6


def _trial_closed_form(rng, i):
    gap = GAPS[i % len(GAPS)]
    f = means.catalog()[(i // len(GAPS)) % 5]
    out = {}
    for tag in Algebra:
        A, B = engineered_pair(tag, gap, rng)
        closed = means.mean_2x2_closed_form(A, B, f).value
        direct = means.kubo_ando_mean(A, B, f).value
        label = "random" if gap is None else f"{gap:.0e}"
        out[f"gap_{label}_{tag.value}"] = _rel(closed, direct)
    return out


def _trial_pusz_woronowicz(rng, i):
    tag = list(Algebra)[i % 3]
    A, B = random_hpd(tag, 2, rng), random_hpd(tag, 2, rng)
    td = means.geometric_mean_trace_det(A, B)
    out = {
        "vs_direct": _rel(td, means.kubo_ando_mean(A, B, means.geometric).value),
        "symmetry": _rel(means.geometric_mean_trace_det(B, A), td),
    }
    if i == 0:
        fixed = means.geometric_mean_trace_det(identity(2, tag), diag([1.0, 4.0], tag))
        out["fixed_instance"] = float(np.max(np.abs(fixed.data - diag([1.0, 2.0], tag).data)))
    return out


def counterexample_fit() -> tuple[float, float, float]:
    """Affine fit of ``I_4 # diag(1,2,3,4)`` by ``I_4`` and ``diag(1,2,3,4)``."""
    X = identity(4)
    Y = diag([1.0, 2.0, 3.0, 4.0])
    M = means.kubo_ando_mean(X, Y, means.geometric).value
    return means.affine_fit_residual(X, Y, M)


def _trial_counterexample(rng, i):
    return {"affine_fit_residual": counterexample_fit()[2]}


def _random_in_subspace(kind: str, n: int, rng) -> Matrix:
    if kind == "complex":
        Z = random_matrix(Algebra.C, n, rng)
        return psi1(hermitian_sym(Z))
    Z = random_matrix(Algebra.H, n, rng)
    return psi2(hermitian_sym(Z))


def _trial_projection(rng, i):
    n = int(rng.integers(1, 4))
    out = {}
    for kind, tag, proj in (("complex", Algebra.R, project.project_to_complex_structure),
                            ("quaternionic", Algebra.C, project.project_to_quaternionic_structure)):
        A = random_hpd(tag, 2 * n, rng)
        P = proj(A)
        out[f"idempotent_{kind}"] = _rel(proj(P), P)
        M = _random_in_subspace(kind, n, rng)
        out[f"orthogonal_{kind}"] = abs(float(np.sum(np.conj((A - P).data) * M.data).real)) / max(
            1.0, fro_norm(A - P) * fro_norm(M))
        out[f"pd_preserved_{kind}"] = _pd_flag(P)
        d0 = fro_norm(A - P)
        worst = 0.0
        for _ in range(50):
            D = _random_in_subspace(kind, n, rng)
            D = D / fro_norm(D)
            worst = max(worst, d0 - fro_norm(A - (P + D * 1e-3)))
        out[f"optimal_{kind}"] = max(0.0, worst)
    rep = project.complex_structure_report(skew_block_input(n, rng))
    out["skew_block_recipe"] = _rel(rep.block_recipe, rep.projection)
    return out


def skew_block_input(n: int, rng) -> Matrix:
    """Symmetric PD ``[[X, Y], [-Y, W]]`` with skew-symmetric ``Y``."""
    X = random_hpd(Algebra.R, n, rng).data
    W = random_hpd(Algebra.R, n, rng).data
    G = rng.uniform(-1.0, 1.0, (n, n))
    Y = 0.5 * (G - G.T)
    A = np.block([[X, Y], [-Y, W]])
    return Matrix(A + np.eye(2 * n) * (1.0 + np.abs(Y).sum()), Algebra.R)


def _trial_mean_axioms(rng, i):
    f = means.catalog()[i % 5]
    tag = list(Algebra)[(i // 5) % 3]
    n = int(rng.integers(1, 4))
    A, C = random_hpd(tag, n, rng), random_hpd(tag, n, rng)
    B = A + random_hpd(tag, n, rng, ridge=0.0)
    D = C + random_hpd(tag, n, rng, ridge=0.0)
    lo = means.kubo_ando_mean(A, C, f).value
    hi = means.kubo_ando_mean(B, D, f).value
    g = _random_invertible(tag, n, rng)
    gs = adjoint(g)
    left = g @ means.kubo_ando_mean(A, C, f).value @ gs
    right = means.kubo_ando_mean(g @ A @ gs, g @ C @ gs, f).value
    eye = identity(n, tag)
    return {
        "monotone": _min_eig_violation(hi - lo),
        "congruence": _rel(right, left),
        "normalized": float(np.max(np.abs(means.kubo_ando_mean(eye, eye, f).value.data - eye.data))),
    }


@dataclass(frozen=True)
class Suite:
    trial: Callable
    tolerance: float
    check_tols: dict = field(default_factory=dict)  # substring -> raw tolerance
    direction: str = "upper"
    fixed_trials: int | None = None


SUITES: dict[str, Suite] = {
    "embeddings": Suite(_trial_embeddings, 1e-10),
    "functional-calculus": Suite(_trial_functional_calculus, 1e-9),
    "correspondence-C": Suite(_correspondence(Algebra.C), 1e-9),
    "correspondence-H": Suite(_correspondence(Algebra.H), 1e-9),
    "isometry": Suite(_trial_isometry, 1e-9, {"norm_scaling": 1e-12}),
    "barycenter": Suite(_trial_barycenter, 1e-9),
    "closed-form-2x2": Suite(_trial_closed_form, 1e-9, {"gap_1e-07": FD_BAND_TOL}),
    "pusz-woronowicz": Suite(_trial_pusz_woronowicz, 1e-9, {"fixed_instance": 1e-12}),
    "counterexample": Suite(_trial_counterexample, 0.01, direction="lower", fixed_trials=1),
    "projection": Suite(_trial_projection, 1e-10, {"idempotent": 1e-14}),
    "mean-axioms": Suite(_trial_mean_axioms, 1e-8, {"normalized": 1e-12}),
}


def _check_tol(suite: Suite, check: str) -> float:
    for key, tol in suite.check_tols.items():
        if key in check:
            return tol
    return suite.tolerance


def _run_one(name: str, trials: int, seed: int) -> VerifyReport:
    suite = SUITES[name]
    trials = suite.fixed_trials or trials
    raw: dict[str, float] = {}
    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        for check, value in suite.trial(rng, i).items():
            raw[check] = max(raw.get(check, 0.0), float(value))
    checks = {}
    scaled = []
    for check, value in sorted(raw.items()):
        tol = _check_tol(suite, check)
        ok = value <= tol if suite.direction == "upper" else value > tol
        checks[check] = {"max_residual": value, "tolerance": tol, "passed": bool(ok)}
        scaled.append(value * suite.tolerance / tol)
    worst = max(scaled) if scaled else 0.0
    if suite.direction == "upper":
        passed = worst <= suite.tolerance
    else:
        worst = min(scaled)
        passed = worst > suite.tolerance
    return VerifyReport(name, trials, seed, suite.tolerance, worst, bool(passed), suite.direction, checks)


def run_verify_suite(suite: str, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> list[VerifyReport]:
    """Run one named suite (or ``"all"``) and return one report per suite."""
    if suite == "all":
        return [_run_one(name, trials, seed) for name in SUITES]
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {sorted(SUITES) + ['all']}")
    return [_run_one(suite, trials, seed)]
