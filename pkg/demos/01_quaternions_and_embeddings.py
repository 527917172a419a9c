"""
Quaternion matrices and their complex and real shadows
=======================================================

Quaternionic matrices are stored as ``(n, n, 4)`` arrays.  Two embeddings
carry them down to ordinary numpy matrices:

* ``psi2`` writes ``Z1 + Z2 j`` as the complex block matrix
  ``[[Z1, Z2], [-conj(Z2), conj(Z1)]]``;
* ``psi1`` writes ``A + iB`` as the real block matrix ``[[A, B], [-B, A]]``.

Both are injective algebra morphisms that respect adjoints, so products,
inverses and positivity can all be computed "downstairs".
"""
import numpy as np

from kamean import from_quaternions, psi1, psi2, psi2_inv
from kamean.algebra import I, J, K, ONE
from kamean.embed import in_image_psi2, structure_matrix
from kamean.io import random_matrix

# %%
# The quaternion units multiply non-commutatively.
print("i*j =", I * J, "   j*i =", J * I)
print("i*j*k =", I * J * K)

# %%
# A 2x2 quaternionic matrix and its complexification.
Q = from_quaternions([[ONE, J], [-J, ONE]])
print("psi2(Q) =\n", np.round(psi2(Q).data, 3))

# %%
# The embedding is multiplicative: multiplying upstairs or downstairs agrees.
rng = np.random.default_rng(0)
A, B = random_matrix("H", 3, rng), random_matrix("H", 3, rng)
gap = np.linalg.norm((psi2(A) @ psi2(B)).data - psi2(A @ B).data)
print(f"||psi2(A)psi2(B) - psi2(AB)||_F = {gap:.2e}")

# %%
# The image is recognised by a twisted commutation rule with
# ``K = [[0, I], [-I, 0]]``: ``K conj(Y) = Y K``.  Inversion reads the top
# block row back, and refuses matrices that are not in the image.
Y = psi2(A)
Kmat = structure_matrix(3)
print("image test:", in_image_psi2(Y),
      f"(residual {np.linalg.norm(Kmat @ Y.data.conj() - Y.data @ Kmat):.1e})")
print("round trip exact:", np.array_equal(psi2_inv(Y).data, A.data))

# %%
# Composing both embeddings gives a real 4n x 4n matrix.
print("psi1(psi2(A)) shape:", psi1(psi2(A)).data.shape)
