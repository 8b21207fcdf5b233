"""Leibniz algebra data model."""

from .ops import (
    Quotient,
    SeriesReport,
    derived_algebra,
    direct_sum,
    ideal_closure,
    ideal_core,
    is_abelian,
    is_ideal,
    is_lie,
    is_nilpotent,
    is_perfect,
    is_solvable,
    is_subalgebra,
    product_space,
    quotient,
    restrict,
    series,
    subspace_is_nilpotent,
    subspace_is_solvable,
    subalgebra_closure,
    transpose_product,
)
from .structure import (
    AlgebraElement,
    IdentityViolation,
    LeibnizAlgebra,
    ValidationResult,
    center,
    left_center,
    left_mult,
    multiply,
    right_mult,
    validate,
)

__all__ = [
    "AlgebraElement",
    "IdentityViolation",
    "LeibnizAlgebra",
    "Quotient",
    "SeriesReport",
    "ValidationResult",
    "center",
    "derived_algebra",
    "direct_sum",
    "ideal_closure",
    "ideal_core",
    "is_abelian",
    "is_ideal",
    "is_lie",
    "is_nilpotent",
    "is_perfect",
    "is_solvable",
    "is_subalgebra",
    "left_center",
    "left_mult",
    "multiply",
    "product_space",
    "quotient",
    "restrict",
    "right_mult",
    "series",
    "subspace_is_nilpotent",
    "subspace_is_solvable",
    "subalgebra_closure",
    "transpose_product",
    "validate",
]
