"""
Log-Euclidean distances and barycenters
========================================

``d(A, B) = ||log A - log B||_F``.  Embedding doubles every squared norm, so
on the image cones the distance is rescaled by ``1/sqrt(2)``; with that
scaling the embeddings are isometries.  The weighted barycenter
``exp(sum w_j log A_j)`` is likewise carried to the barycenter of the images.
"""
import math

import numpy as np

from kamean import log_euclidean_barycenter, log_euclidean_distance, psi1, psi2
from kamean.geometry import scaled_distance_on_image
from kamean.io import random_hpd
from kamean.matrix import fro_norm, identity

# %%
d = log_euclidean_distance(identity(2), identity(2) * math.e ** 2)
print(f"d(I, e^2 I) = {d:.6f}  (2 sqrt 2 = {2 * math.sqrt(2):.6f})")

# %%
rng = np.random.default_rng(4)
A, B = random_hpd("H", 3, rng), random_hpd("H", 3, rng)
down = log_euclidean_distance(A, B)
up = scaled_distance_on_image(psi2(A), psi2(B), "psi2_image")
print(f"quaternionic distance {down:.12f}, scaled distance of images {up:.12f}")

# %%
# Barycenters commute with the embedding.
As = [random_hpd("C", 2, rng) for _ in range(3)]
w = [0.2, 0.3, 0.5]
lhs = psi1(log_euclidean_barycenter(As, w))
rhs = log_euclidean_barycenter([psi1(X) for X in As], w)
print(f"push-forward residual {fro_norm(lhs - rhs):.1e}")
