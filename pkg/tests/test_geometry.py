import math

import numpy as np
import pytest

from conftest import ALGEBRAS, hpd, rand, rel
from kamean.embed import psi1, psi2
from kamean.errors import DimensionMismatch, NotInImage, NotPositiveDefinite, WeightMismatch
from kamean.geometry import (
    frobenius_norm,
    log_euclidean_barycenter,
    log_euclidean_distance,
    scaled_distance_on_image,
)
from kamean.matrix import Matrix, diag, identity, is_positive_definite


def test_frobenius_examples(rng):
    assert frobenius_norm(identity(5)) == pytest.approx(math.sqrt(5))
    assert frobenius_norm(Matrix([[1.0, 2.0], [-2.0, 1.0]])) == pytest.approx(math.sqrt(10))
    for _ in range(500):
        X = rand("C", 3, rng)
        assert abs(frobenius_norm(psi1(X)) - math.sqrt(2) * frobenius_norm(X)) <= 1e-12 * frobenius_norm(X)
        Y = rand("H", 3, rng)
        assert abs(frobenius_norm(psi2(Y)) - math.sqrt(2) * frobenius_norm(Y)) <= 1e-12 * frobenius_norm(Y)


def test_quaternionic_norm_is_trace_of_gram(rng):
    from kamean.matrix import adjoint, matmul, reduced_trace
    X = rand("H", 4, rng)
    assert frobenius_norm(X) ** 2 == pytest.approx(reduced_trace(matmul(adjoint(X), X)), rel=1e-13)


def test_distance_examples(rng):
    A = hpd("C", 3, rng)
    assert log_euclidean_distance(A, A) == 0
    assert log_euclidean_distance(identity(2), identity(2) * math.e ** 2) == pytest.approx(2 * math.sqrt(2))
    assert log_euclidean_distance(diag([1.0, math.e]), identity(2)) == pytest.approx(1.0)


def test_distance_errors():
    with pytest.raises(NotPositiveDefinite):
        log_euclidean_distance(identity(2), diag([1.0, -1.0]))
    with pytest.raises(DimensionMismatch):
        log_euclidean_distance(identity(2), identity(3))


@pytest.mark.parametrize("tag", ALGEBRAS)
def test_distance_is_a_metric(tag, rng):
    for _ in range(200 // len(ALGEBRAS) + 1):
        A, B, C = (hpd(tag, 3, rng) for _ in range(3))
        dab = log_euclidean_distance(A, B)
        assert dab == pytest.approx(log_euclidean_distance(B, A), rel=1e-12)
        assert dab > 0
        assert log_euclidean_distance(A, C) <= dab + log_euclidean_distance(B, C) + 1e-9


def test_scaled_distance_examples():
    d = scaled_distance_on_image(psi1(identity(2, "C")), psi1(identity(2, "C") * 4.0), "psi1_image")
    assert d == pytest.approx(math.sqrt(2) * math.log(4))
    assert d == pytest.approx(1.9605, abs=1e-4)
    P = psi1(diag([2.0, 3.0], "C"))
    assert scaled_distance_on_image(P, P, "psi1_image") == 0
    d = scaled_distance_on_image(psi2(identity(1, "H")), psi2(identity(1, "H") * math.e), "psi2_image")
    assert d == pytest.approx(1.0)


def test_scaled_distance_errors():
    with pytest.raises(NotInImage):
        scaled_distance_on_image(diag([1.0, 2.0]), identity(2), "psi1_image")
    with pytest.raises(NotInImage):
        scaled_distance_on_image(identity(2), identity(2), "psi2_image")
    with pytest.raises(ValueError):
        scaled_distance_on_image(identity(2), identity(2), "psi3_image")


def test_embeddings_are_isometries(rng):
    for _ in range(50):
        A, B = hpd("C", 3, rng), hpd("C", 3, rng)
        d = log_euclidean_distance(A, B)
        assert abs(scaled_distance_on_image(psi1(A), psi1(B), "psi1_image") - d) <= 1e-9 * (1 + d)
        A, B = hpd("H", 3, rng), hpd("H", 3, rng)
        d = log_euclidean_distance(A, B)
        assert abs(scaled_distance_on_image(psi2(A), psi2(B), "psi2_image") - d) <= 1e-9 * (1 + d)


def test_barycenter_examples(rng):
    A = hpd("H", 3, rng)
    assert rel(log_euclidean_barycenter([A], [1.0]), A) <= 1e-12
    E = log_euclidean_barycenter([identity(2), identity(2) * math.e ** 2], [0.5, 0.5])
    np.testing.assert_allclose(E.data, math.e * np.eye(2), rtol=1e-14)
    a, b, t = np.array([2.0, 5.0]), np.array([7.0, 0.5]), 0.3
    G = log_euclidean_barycenter([diag(a), diag(b)], [t, 1 - t])
    np.testing.assert_allclose(G.data, np.diag(a ** t * b ** (1 - t)), rtol=1e-13)
    # default weights are uniform
    assert rel(log_euclidean_barycenter([identity(2), identity(2) * math.e ** 2]), E) <= 1e-15


def test_barycenter_weight_errors():
    I = identity(2)
    for w in ([0.5], [0.7, 0.7], [1.5, -0.5], [0.5, 0.5 + 1e-9]):
        with pytest.raises(WeightMismatch):
            log_euclidean_barycenter([I, I], w)
    with pytest.raises(WeightMismatch):
        log_euclidean_barycenter([], [])


def _weights(k, rng):
    w = rng.uniform(0.1, 1.0, k)
    w /= w.sum()
    w[-1] = 1.0 - w[:-1].sum()
    return w


@pytest.mark.parametrize("k", [2, 3, 5])
def test_barycenter_push_forward(k, rng):
    for _ in range(5):
        w = _weights(k, rng)
        As = [hpd("C", 2, rng) for _ in range(k)]
        down = psi1(log_euclidean_barycenter(As, w))
        assert rel(log_euclidean_barycenter([psi1(A) for A in As], w), down) <= 1e-9
        Qs = [hpd("H", 2, rng) for _ in range(k)]
        down = psi2(log_euclidean_barycenter(Qs, w))
        assert rel(log_euclidean_barycenter([psi2(Q) for Q in Qs], w), down) <= 1e-9
        assert is_positive_definite(down)


def test_barycenter_permutation_equivariance(rng):
    for tag in ALGEBRAS:
        As = [hpd(tag, 3, rng) for _ in range(4)]
        w = _weights(4, rng)
        perm = rng.permutation(4)
        G = log_euclidean_barycenter(As, w)
        Gp = log_euclidean_barycenter([As[i] for i in perm], w[perm])
        assert rel(Gp, G) <= 1e-12
