"""
Nearest structured matrices
============================

Given a symmetric positive definite ``A`` of size ``2n``, the nearest real
matrix that commutes with ``K = [[0, I], [-I, 0]]`` (the realification of a
complex matrix) is ``(A + K A K^t) / 2``.  In block form
``A = [[X, Y], [Y^t, W]]`` it has diagonal blocks ``(X + W)/2`` and
off-diagonal block the skew part of ``Y``.  Keeping ``Y`` itself is optimal
only when ``Y`` is already skew; the report below measures the difference.
"""
import numpy as np

from kamean import complex_structure_report, project_to_complex_structure, project_to_quaternionic_structure
from kamean.embed import in_image_psi1, in_image_psi2
from kamean.io import random_hpd
from kamean.matrix import Matrix

# %%
A = Matrix([[2.0, 1.0], [1.0, 4.0]])
print("projection of [[2,1],[1,4]] =\n", project_to_complex_structure(A).data)

# %%
rng = np.random.default_rng(5)
A = random_hpd("R", 4, rng)
rep = complex_structure_report(A)
print("projection in psi1 image:", in_image_psi1(rep.projection))
print(f"distance to projection        {rep.distance:.6f}")
print(f"distance to keep-Y recipe     {rep.block_recipe_distance:.6f}")
print(f"||Y + Y^t|| (recipe defect)   {rep.symmetric_offdiag_defect:.6f}")

# %%
# The quaternionic analogue lands in the image of psi2.
C = random_hpd("C", 4, rng)
print("quaternionic projection in psi2 image:", in_image_psi2(project_to_quaternionic_structure(C)))
