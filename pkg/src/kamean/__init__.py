"""Kubo-Ando means, Log-Euclidean geometry and structure projections for
positive definite matrices over R, C and H."""
from .algebra import Quaternion, complex_split, quaternion_conj, quaternion_mul
from .embed import (
    in_image_psi1,
    in_image_psi2,
    psi1,
    psi1_inv,
    psi2,
    psi2_inv,
    structure_matrix,
)
from .errors import *  # noqa: F401,F403
from .geometry import (
    frobenius_norm,
    log_euclidean_barycenter,
    log_euclidean_distance,
    scaled_distance_on_image,
)
from .io import gen_random_hpd, parse_matrix_document, serialize_matrix
from .matrix import (
    Algebra,
    Matrix,
    adjoint,
    diag,
    from_quaternions,
    identity,
    is_hermitian,
    is_positive_definite,
    loewner_leq,
    reduced_trace,
    trace,
)
from .means import (
    MeanResult,
    RepresentingFunction,
    affine_coefficients_2x2,
    affine_coefficients_embedded4,
    affine_fit_residual,
    catalog,
    eigs_from_trace_det,
    geometric_mean_trace_det,
    kubo_ando_mean,
    mean_2x2_closed_form,
    mean_correspondence_residual,
)
from .project import (
    complex_structure_report,
    hermitian_part,
    project_to_complex_structure,
    project_to_quaternionic_structure,
)
from .spectral import EigenDecomposition, apply_function, eig_hermitian, mexp, mlog, mpow
from .verify import VerifyReport, run_verify_suite

__version__ = "0.1.0"
