import numpy as np
import pytest

from conftest import hpd, rand, rel
from kamean.algebra import I, J, ONE
from kamean.embed import (
    in_image_psi1,
    in_image_psi2,
    psi1,
    psi1_inv,
    psi12,
    psi2,
    psi2_inv,
    structure_matrix,
)
from kamean.errors import AlgebraMismatch, NotInImage, OddDimension
from kamean.matrix import Matrix, adjoint, diag, from_quaternions, identity, is_positive_definite, transpose


def test_structure_matrix_invariants():
    for n in (1, 2, 5):
        K = structure_matrix(n)
        np.testing.assert_array_equal(K @ K, -np.eye(2 * n))
        np.testing.assert_array_equal(K.T, -K)
        np.testing.assert_array_equal(K.T @ K, np.eye(2 * n))


def test_psi1_examples():
    np.testing.assert_array_equal(psi1(Matrix([[1 + 2j]], "C")).data, [[1, 2], [-2, 1]])
    np.testing.assert_array_equal(psi1(identity(3, "C")).data, np.eye(6))
    i = Matrix([[1j]], "C")
    np.testing.assert_array_equal(psi1(i @ i).data, -np.eye(2))
    np.testing.assert_array_equal((psi1(i) @ psi1(i)).data, -np.eye(2))
    with pytest.raises(AlgebraMismatch):
        psi1(identity(2))


def test_psi1_inv_examples():
    np.testing.assert_array_equal(psi1_inv(Matrix([[1, 2], [-2, 1]])).data, [[1 + 2j]])
    np.testing.assert_array_equal(psi1_inv(identity(4)).data, np.eye(2))
    with pytest.raises(NotInImage):
        psi1_inv(diag([1, 2]))


def test_psi2_examples():
    np.testing.assert_array_equal(psi2(from_quaternions([[J]])).data, [[0, 1], [-1, 0]])
    np.testing.assert_array_equal(psi2(from_quaternions([[I]])).data, [[1j, 0], [0, -1j]])
    np.testing.assert_array_equal(psi2(identity(3, "H")).data, np.eye(6))


def test_psi2_inv_examples():
    np.testing.assert_array_equal(psi2_inv(Matrix([[0, 1], [-1, 0]], "C")).data,
                                  from_quaternions([[J]]).data)
    np.testing.assert_array_equal(psi2_inv(identity(4, "C")).data, identity(2, "H").data)
    with pytest.raises(NotInImage):
        psi2_inv(Matrix(np.diag([1j, 1j]), "C"))


def test_image_membership_examples(rng):
    assert in_image_psi1(psi1(rand("C", 3, rng)))
    assert not in_image_psi1(diag([1, 2]))
    assert in_image_psi1(identity(4) * 2.5)
    assert in_image_psi2(psi2(rand("H", 3, rng)))
    assert in_image_psi2(identity(4, "C") * 2.5)
    assert not in_image_psi2(Matrix(np.diag([1j, 1j]), "C"))
    with pytest.raises(OddDimension):
        in_image_psi1(identity(3))
    with pytest.raises(OddDimension):
        in_image_psi2(identity(3, "C"))


@pytest.mark.parametrize("tag,emb", [("C", psi1), ("H", psi2)])
def test_morphism_properties(tag, emb, rng):
    for _ in range(100):
        n = int(rng.integers(1, 6))
        A, B = rand(tag, n, rng), rand(tag, n, rng)
        assert rel(emb(A) @ emb(B), emb(A @ B)) <= 1e-12
        assert rel(emb(A) + emb(B), emb(A + B)) <= 1e-12


def test_adjoint_compatibility_is_exact(rng):
    for _ in range(50):
        A = rand("C", 4, rng)
        np.testing.assert_array_equal(psi1(adjoint(A)).data, transpose(psi1(A)).data)
        Q = rand("H", 4, rng)
        np.testing.assert_array_equal(psi2(adjoint(Q)).data, adjoint(psi2(Q)).data)


def test_positivity_preserved(rng):
    for _ in range(30):
        assert is_positive_definite(psi1(hpd("C", 3, rng)))
        P = hpd("H", 3, rng)
        assert is_positive_definite(psi2(P))
        assert is_positive_definite(psi12(P))


def test_round_trips(rng):
    for _ in range(50):
        A = rand("C", 3, rng)
        assert rel(psi1_inv(psi1(A)), A) <= 1e-14
        Q = rand("H", 3, rng)
        assert rel(psi2_inv(psi2(Q)), Q) <= 1e-14


def test_psi1_inv_rejects_rather_than_averages():
    Y = psi1(Matrix([[1 + 1j]], "C")).data.copy()
    Y[1, 1] += 1e-3
    with pytest.raises(NotInImage):
        psi1_inv(Matrix(Y))
    # loose tolerance accepts and reads the top block row
    assert psi1_inv(Matrix(Y), tol=1e-2).data[0, 0] == 1 + 1j


def test_onedimensional_quaternion_image_of_real_scalar():
    np.testing.assert_array_equal(psi2(from_quaternions([[ONE * 3.0]])).data, 3 * np.eye(2))
