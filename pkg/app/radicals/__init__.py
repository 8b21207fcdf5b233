"""Structural ideals: Leibniz kernel, radical, nilradical, Asoc, Jacobson radical."""

from .jacobson import (
    Characterized,
    LeviData,
    RadicalReport,
    frattini_char0,
    jacobson_char0,
    jacobson_characterized,
    lr_plus_rl,
    radical_report,
    subalgebra_complement,
    verify_section4,
)
from .kernels import killing_form, leib_kernel, radical, require_char0
from .nilpotent import asoc, enveloping_basis, nilradical, socle

__all__ = [
    "Characterized",
    "LeviData",
    "RadicalReport",
    "asoc",
    "enveloping_basis",
    "frattini_char0",
    "jacobson_char0",
    "jacobson_characterized",
    "killing_form",
    "leib_kernel",
    "lr_plus_rl",
    "nilradical",
    "radical",
    "radical_report",
    "require_char0",
    "socle",
    "subalgebra_complement",
    "verify_section4",
]
