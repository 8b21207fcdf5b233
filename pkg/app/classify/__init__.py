"""Algebra families and the theorem verifiers run against them."""

from .catalog import (
    CatalogEntry,
    Family,
    FamilySpec,
    build,
    build_entry,
    default_grid,
    iter_grid,
    levi_data,
    parse_field,
    parse_target,
    sl2,
)
from .verifiers import (
    THM6_FAMILIES,
    Thm6Verdict,
    Thm17Verdict,
    cross_engine_check,
    verify_cor5,
    verify_e_algebra,
    verify_frattini_criterion,
    verify_lemma3,
    verify_lemmas_15_16_18,
    verify_nilpotent_frattini,
    verify_thm6,
    verify_thm17,
)

__all__ = [
    "CatalogEntry",
    "Family",
    "FamilySpec",
    "THM6_FAMILIES",
    "Thm17Verdict",
    "Thm6Verdict",
    "build",
    "build_entry",
    "cross_engine_check",
    "default_grid",
    "iter_grid",
    "levi_data",
    "parse_field",
    "parse_target",
    "sl2",
    "verify_cor5",
    "verify_e_algebra",
    "verify_frattini_criterion",
    "verify_lemma3",
    "verify_lemmas_15_16_18",
    "verify_nilpotent_frattini",
    "verify_thm6",
    "verify_thm17",
]
