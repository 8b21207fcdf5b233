"""Brute-force lattice engine over prime fields."""

from .engine import (
    LatticeEngine,
    LatticeReport,
    classify_lattice,
    e_algebra_equivalence,
    frattini_bruteforce,
    jacobson_bruteforce,
    small_algebra_corpus,
)
from .enumeration import (
    Deadline,
    LatticeBudget,
    enumerate_subspaces,
    gaussian_binomial,
    hyperplanes_containing,
    subspace_count,
)

__all__ = [
    "Deadline",
    "LatticeBudget",
    "LatticeEngine",
    "LatticeReport",
    "classify_lattice",
    "e_algebra_equivalence",
    "enumerate_subspaces",
    "frattini_bruteforce",
    "gaussian_binomial",
    "hyperplanes_containing",
    "jacobson_bruteforce",
    "small_algebra_corpus",
    "subspace_count",
]
