"""
Kubo-Ando means of positive definite matrices
==============================================

A representing function ``f`` (operator monotone, ``f(1) = 1``) defines the
mean ``A # B = A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}``.  The same formula
works over R, C and H, and the embeddings carry means to means.
"""
import numpy as np

from kamean import catalog, kubo_ando_mean, mean_correspondence_residual
from kamean.io import random_hpd
from kamean.matrix import diag, identity, loewner_leq

# %%
# The five catalog means.
x = np.array([0.25, 1.0, 4.0])
for f in catalog():
    print(f"{f.name:28s} f({x}) = {np.round(f(x), 4)}")

# %%
# Commuting inputs reduce to scalar means entrywise.
G = kubo_ando_mean(identity(2), diag([4.0, 9.0]), catalog()[1]).value
print("I # diag(4, 9) =\n", G.data)

# %%
# Means of quaternionic matrices, and the classical ordering
# harmonic <= geometric <= arithmetic in the Loewner order.
rng = np.random.default_rng(2)
A, B = random_hpd("H", 3, rng), random_hpd("H", 3, rng)
arith, geo, harm = (kubo_ando_mean(A, B, f).value for f in catalog()[:3])
print("harmonic <= geometric:", loewner_leq(harm, geo))
print("geometric <= arithmetic:", loewner_leq(geo, arith))

# %%
# Correspondence: the mean of the embedded matrices is the embedded mean.
for tag in ("C", "H"):
    A, B = random_hpd(tag, 3, rng), random_hpd(tag, 3, rng)
    worst = max(mean_correspondence_residual(A, B, f) for f in catalog())
    print(f"{tag}: worst correspondence residual {worst:.1e}")
