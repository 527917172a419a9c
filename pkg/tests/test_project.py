import numpy as np
import pytest

from conftest import hpd, rand, rel
from kamean.embed import in_image_psi1, in_image_psi2, psi1, psi2, structure_matrix
from kamean.errors import AlgebraMismatch, NotPositiveDefinite, OddDimension
from kamean.matrix import Matrix, diag, fro_norm, identity, inner, is_hermitian, is_positive_definite
from kamean.project import (
    complex_structure_report,
    hermitian_part,
    project_to_complex_structure,
    project_to_quaternionic_structure,
)
from kamean.verify import skew_block_input


def test_hermitian_part_examples(rng):
    np.testing.assert_array_equal(hermitian_part(Matrix([[0.0, 2.0], [0.0, 0.0]])).data, [[0, 1], [1, 0]])
    A = hpd("H", 3, rng)
    assert rel(hermitian_part(A), A) == 0
    np.testing.assert_array_equal(hermitian_part(Matrix([[1j]], "C")).data, [[0]])


def test_hermitian_part_is_nearest(rng):
    A = rand("C", 4, rng)
    H = hermitian_part(A)
    assert is_hermitian(H)
    for _ in range(20):
        D = hermitian_part(rand("C", 4, rng))
        assert fro_norm(A - (H + D * 1e-3)) >= fro_norm(A - H)


def test_complex_structure_examples(rng):
    A = Matrix([[2.0, 1.0], [1.0, 4.0]])
    P = project_to_complex_structure(A)
    np.testing.assert_allclose(P.data, 3 * np.eye(2), atol=1e-15)
    assert fro_norm(A - P) == pytest.approx(2.0)
    B = psi1(hpd("C", 3, rng))
    assert rel(project_to_complex_structure(B), B) <= 1e-14
    assert rel(project_to_complex_structure(identity(4)), identity(4)) == 0


def test_brute_force_oracle_for_2x2():
    # minimise ||A - [[z, y], [-y, z]]|| on a grid
    A = np.array([[2.0, 1.0], [1.0, 4.0]])
    zs, ys = np.meshgrid(np.linspace(2, 4, 201), np.linspace(-1, 1, 201))
    cost = (A[0, 0] - zs) ** 2 + (A[1, 1] - zs) ** 2 + (A[0, 1] - ys) ** 2 + (A[1, 0] + ys) ** 2
    k = np.argmin(cost)
    assert (zs.flat[k], ys.flat[k]) == pytest.approx((3.0, 0.0), abs=1e-12)
    assert np.sqrt(cost.flat[k]) == pytest.approx(2.0)


def test_quaternionic_structure_examples(rng):
    P = project_to_quaternionic_structure(Matrix(np.diag([1.0, 3.0]) + 0j, "C"))
    np.testing.assert_allclose(P.data, 2 * np.eye(2), atol=1e-15)
    B = psi2(hpd("H", 3, rng))
    assert rel(project_to_quaternionic_structure(B), B) <= 1e-14
    I = identity(4, "C")
    assert rel(project_to_quaternionic_structure(I), I) == 0


def test_projection_errors():
    with pytest.raises(OddDimension):
        project_to_complex_structure(identity(3))
    with pytest.raises(NotPositiveDefinite):
        project_to_complex_structure(diag([1.0, -1.0]))
    with pytest.raises(AlgebraMismatch):
        project_to_complex_structure(identity(2, "C"))
    with pytest.raises(OddDimension):
        project_to_quaternionic_structure(identity(3, "C"))
    with pytest.raises(AlgebraMismatch):
        project_to_quaternionic_structure(identity(2))


def _subspace_element(kind, n, rng):
    if kind == "complex":
        return psi1(hermitian_part(rand("C", n, rng)))
    return psi2(hermitian_part(rand("H", n, rng)))


CASES = [("complex", "R", project_to_complex_structure, in_image_psi1),
         ("quaternionic", "C", project_to_quaternionic_structure, in_image_psi2)]


@pytest.mark.parametrize("kind,tag,proj,member", CASES)
def test_projection_properties(kind, tag, proj, member, rng):
    for _ in range(100):
        n = int(rng.integers(1, 4))
        A = hpd(tag, 2 * n, rng)
        P = proj(A)
        assert member(P) and is_hermitian(P, tol=0.0) and is_positive_definite(P)
        assert fro_norm(proj(P) - P) <= 1e-14 * max(1.0, fro_norm(P))
        M = _subspace_element(kind, n, rng)
        assert abs(inner(A - P, M)) <= 1e-10 * max(1.0, fro_norm(A) * fro_norm(M))
        base = fro_norm(A - P)
        for _ in range(50):
            D = _subspace_element(kind, n, rng)
            D = D / fro_norm(D)
            assert fro_norm(A - (P + D * 1e-3)) >= base


def test_complex_structure_commutes_exactly(rng):
    A = hpd("R", 6, rng)
    K = structure_matrix(3)
    P = project_to_complex_structure(A).data
    assert np.max(np.abs(P @ K - K @ P)) <= 1e-15


def test_skew_offdiagonal_block_keeps_y(rng):
    for n in (1, 2, 3):
        A = skew_block_input(n, rng)
        rep = complex_structure_report(A)
        assert rep.symmetric_offdiag_defect <= 1e-15
        assert rel(rep.projection, rep.block_recipe) <= 1e-14
        Y = A.data[:n, n:]
        np.testing.assert_allclose(rep.projection.data[:n, n:], Y, atol=1e-15)


def test_report_exposes_block_recipe_defect(rng):
    A = hpd("R", 4, rng)
    rep = complex_structure_report(A)
    Y = A.data[:2, 2:]
    assert rep.symmetric_offdiag_defect == pytest.approx(np.linalg.norm(Y + Y.T))
    assert rep.symmetric_offdiag_defect > 0
    # keeping Y verbatim is never closer than the orthogonal projection
    assert rep.block_recipe_distance >= rep.distance
    assert rep.distance == pytest.approx(fro_norm(A - project_to_complex_structure(A)))
