"""Exact linear algebra over Q and GF(p)."""

from .field import RATIONALS, FieldSpec, Scalar
from .matrix import Matrix, Vector, rref
from .spectral import (
    Eigenpair,
    FittingDecomposition,
    Spectrum,
    WeightDecomposition,
    WeightSpace,
    char_poly,
    evaluate_polynomial_at,
    fitting_decomposition,
    is_nilpotent_operator,
    polynomial_roots,
    rational_eigenvalues,
    restrict_operator,
    simultaneous_weight_spaces,
)
from .subspace import (
    Subspace,
    annihilator,
    contains,
    image,
    kernel,
    preimage,
    subspace_intersect,
    subspace_sum,
)

__all__ = [
    "RATIONALS",
    "Eigenpair",
    "FieldSpec",
    "FittingDecomposition",
    "Matrix",
    "Scalar",
    "Spectrum",
    "Subspace",
    "Vector",
    "WeightDecomposition",
    "WeightSpace",
    "annihilator",
    "char_poly",
    "contains",
    "evaluate_polynomial_at",
    "fitting_decomposition",
    "image",
    "is_nilpotent_operator",
    "kernel",
    "polynomial_roots",
    "preimage",
    "rational_eigenvalues",
    "restrict_operator",
    "rref",
    "simultaneous_weight_spaces",
    "subspace_intersect",
    "subspace_sum",
]
