"""
Closed forms for 2x2 means
===========================

For 2x2 matrices ``X = A^{-1/2} B A^{-1/2}`` has just two eigenvalues, which
follow from its trace and determinant (the Moore determinant over H).  Any
mean is then an affine combination ``alpha A + beta B``.  For the geometric
mean this is the trace-determinant formula
``(B + sqrt(det X) A) / sqrt(tr X + 2 sqrt(det X))``.

The affine form does not survive in dimension four: the last section measures
how far the geometric mean of ``I_4`` and ``diag(1, 2, 3, 4)`` is from the
plane spanned by the two inputs.
"""
import numpy as np

from kamean import (
    affine_fit_residual,
    catalog,
    geometric_mean_trace_det,
    kubo_ando_mean,
    mean_2x2_closed_form,
)
from kamean.io import random_hpd
from kamean.matrix import diag, fro_norm, identity

# %%
print("I # diag(1, 4) =\n", geometric_mean_trace_det(identity(2), diag([1.0, 4.0])).data)

# %%
# Closed form versus the direct functional calculus, every algebra and mean.
rng = np.random.default_rng(3)
for tag in ("R", "C", "H"):
    A, B = random_hpd(tag, 2, rng), random_hpd(tag, 2, rng)
    for f in catalog():
        r = mean_2x2_closed_form(A, B, f)
        d = fro_norm(r.value - kubo_ando_mean(A, B, f).value)
        print(f"{tag} {f.name:28s} gap={r.eigen_gap:8.4f}  |closed - direct| = {d:.1e}")

# %%
# In dimension four no affine combination reproduces the geometric mean.
X, Y = identity(4), diag([1.0, 2.0, 3.0, 4.0])
M = kubo_ando_mean(X, Y, catalog()[1]).value
alpha, beta, resid = affine_fit_residual(X, Y, M)
print(f"best fit alpha={alpha:.6f}, beta={beta:.6f}, residual={resid:.6f}")
