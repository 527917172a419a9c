"""
Eigendecomposition and functional calculus over R, C and H
===========================================================

Real and complex Hermitian matrices are diagonalised with a cyclic Jacobi
method.  A quaternionic Hermitian matrix is diagonalised through its complex
image; its ``2n`` complex eigenvalues come in equal pairs, one per
quaternionic (right) eigenvalue.

With ``X = U diag(lam) U*`` any scalar ``f`` extends to ``f(X)``.
"""
import numpy as np

from kamean import apply_function, diag, eig_hermitian, from_quaternions, mexp, mlog, mpow, psi1
from kamean.algebra import J, ONE
from kamean.io import random_hpd
from kamean.matrix import fro_norm, identity, matmul

# %%
# A quaternionic Hermitian matrix with right eigenvalues 0 and 2.
Q = from_quaternions([[ONE, J], [-J, ONE]])
e = eig_hermitian(Q)
print("right eigenvalues:", e.lambdas)

# %%
# The decomposition really satisfies ``X U = U diag(lam)`` with unitary U.
rng = np.random.default_rng(1)
X = random_hpd("H", 5, rng)
e = eig_hermitian(X)
resid = fro_norm(matmul(X, e.U) - matmul(e.U, diag(e.lambdas, "H")))
print(f"eigen-residual {resid:.1e}, unitarity defect "
      f"{fro_norm(matmul(e.U.H, e.U) - identity(5, 'H')):.1e}")

# %%
# Square roots, logarithms and powers all go through the same decomposition.
R = mpow(X, 0.5)
print(f"||R R - X|| = {fro_norm(R @ R - X):.1e}")
print(f"||exp(log X) - X|| = {fro_norm(mexp(mlog(X)) - X):.1e}")

# %%
# Functional calculus commutes with the embeddings: taking the square root of
# a complex matrix and then realifying is the same as realifying first.
C = random_hpd("C", 4, rng)
gap = fro_norm(apply_function(psi1(C), np.sqrt) - psi1(apply_function(C, np.sqrt)))
print(f"sqrt commutes with psi1 up to {gap:.1e}")
