"""Theorem registry, target resolution and concurrent verification runs.

Targets are algebra files, ``catalog:<Family>[:k=v,...][@GF(p)]`` entries or
``corpus:GF(p):<max_dim>`` exhaustive corpora; with no targets the default
catalog grid is used. Records come back in target order whatever the
execution order was.
"""

from __future__ import annotations

import asyncio
import itertools
from dataclasses import dataclass, replace
from typing import Any, Callable, Iterable, Optional, Sequence

from ..algebra import LeibnizAlgebra, multiply
from ..claims import ClaimResult, ClaimStatus
from ..classify import (
    THM6_FAMILIES,
    FamilySpec,
    build_entry,
    cross_engine_check,
    default_grid,
    parse_field,
    parse_target,
    verify_cor5,
    verify_e_algebra,
    verify_frattini_criterion,
    verify_lemma3,
    verify_lemmas_15_16_18,
    verify_nilpotent_frattini,
    verify_thm6,
    verify_thm17,
)
from ..config import settings
from ..errors import (
    BadParamsError,
    BudgetExceededError,
    CharacteristicClashError,
    DimensionMismatchError,
    HypothesisViolatedError,
    InvariantViolationError,
    NonSplitError,
    NotReducibleError,
    UndecidableError,
    WrongCharacteristicError,
)
from ..lattice import LatticeBudget, LatticeEngine, small_algebra_corpus
from ..linalg import Subspace
from ..radicals import LeviData, nilradical, verify_section4
from ..schemas.algebra import ClaimRecordOut, VerifyResponse
from ..utils.logging import get_logger
from .algebra_io import load_algebra

logger = get_logger(__name__)

THM6_PRIMES = (3, 5, 7)
SECTION4 = ("thm8", "prop9", "lemma10", "prop11", "cor12", "cor13", "prop14")
# direct sums beyond this dimension leave the lattice engine's reach
LEMMA3_MAX_DIM = 4


@dataclass(frozen=True)
class VerificationTarget:
    label: str
    algebra: LeibnizAlgebra
    levi: Optional[LeviData] = None
    spec: Optional[FamilySpec] = None


@dataclass(frozen=True)
class VerificationRecord:
    target: str
    result: ClaimResult

    def to_out(self) -> ClaimRecordOut:
        r = self.result
        return ClaimRecordOut(
            target=self.target,
            theorem=r.theorem,
            claim=r.claim,
            status=r.status.value,
            detail=r.detail,
            engine=r.engine,
            evidence={k: _plain(v) for k, v in r.evidence.items()},
        )


def _plain(value: Any) -> Any:
    if isinstance(value, Subspace):
        return value.formatted()
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


# -------------------------
# Targets
# -------------------------


def _catalog_target(spec: FamilySpec, field_label: str, text: Optional[str] = None) -> VerificationTarget:
    entry = build_entry(spec, parse_field(field_label))
    return VerificationTarget(text or entry.label, entry.algebra, entry.levi, spec)


def resolve_target(text: str, right_leibniz: bool = False) -> list[VerificationTarget]:
    """One target string; ``corpus:`` targets expand to many algebras."""
    if text.startswith("catalog:"):
        spec, field = parse_target(text[len("catalog:"):])
        return [_catalog_target(spec, field.label, text)]
    if text.startswith("corpus:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise BadParamsError(f"corpus target {text!r} is not corpus:GF(p):max_dim")
        field = parse_field(parts[1])
        try:
            max_dim = int(parts[2])
        except ValueError:
            raise BadParamsError(f"bad corpus dimension in {text!r}") from None
        return [
            VerificationTarget(f"{text}#{k}", alg)
            for k, alg in enumerate(small_algebra_corpus(field, max_dim))
        ]
    alg = load_algebra(text, right_leibniz=right_leibniz)
    return [VerificationTarget(text, alg)]


def resolve_targets(
    texts: Sequence[str], field_label: str = "Q", right_leibniz: bool = False
) -> list[VerificationTarget]:
    if texts:
        return [t for text in texts for t in resolve_target(text, right_leibniz)]
    targets = []
    for spec in default_grid():
        try:
            targets.append(_catalog_target(spec, field_label))
        except (BadParamsError, CharacteristicClashError, NotReducibleError) as exc:
            logger.debug(f"grid entry {spec.label} skipped over {field_label}: {exc.message}")
    return targets


# -------------------------
# Runners
# -------------------------

Runner = Callable[[VerificationTarget, Optional[LatticeBudget]], list[ClaimResult]]


def _over_prime(alg: LeibnizAlgebra) -> LeibnizAlgebra:
    if alg.field.is_prime_field:
        return alg
    for p in settings.oracle_prime_list:
        try:
            return alg.reduced_mod(p)
        except NotReducibleError:
            continue
    raise UndecidableError("no oracle prime reduces this table")


def _section4(theorem: str) -> Runner:
    def run(target: VerificationTarget, budget: Optional[LatticeBudget]) -> list[ClaimResult]:
        claims = verify_section4(target.algebra, target.levi, budget=budget)
        return [c for c in claims if c.theorem == theorem]

    return run


def _thm6(target: VerificationTarget, budget: Optional[LatticeBudget]) -> list[ClaimResult]:
    if target.spec is None or target.spec.family not in THM6_FAMILIES:
        if target.algebra.field.is_prime_field:
            return verify_frattini_criterion(target.algebra, budget)
        raise HypothesisViolatedError("target is a minimal non-elementary catalog family")
    field = target.algebra.field
    primes = (field.characteristic,) if field.is_prime_field else THM6_PRIMES
    claims: list[ClaimResult] = []
    for p in primes:
        try:
            claims.extend(verify_thm6(target.spec, p, budget).claims)
        except BadParamsError as exc:
            claims.append(ClaimResult.undecidable("thm6", "family definable over GF(p)", f"GF({p}): {exc.message}"))
    return claims


def _thm1(target: VerificationTarget, budget: Optional[LatticeBudget]) -> list[ClaimResult]:
    claims = verify_e_algebra(_over_prime(target.algebra), budget=budget)
    return [c for c in claims if c.theorem == "thm1"]


def _e_algebra(target: VerificationTarget, budget: Optional[LatticeBudget]) -> list[ClaimResult]:
    return verify_e_algebra(target.algebra, target.levi, budget)


def _prop2(target: VerificationTarget, budget: Optional[LatticeBudget]) -> list[ClaimResult]:
    return [c for c in _e_algebra(target, budget) if c.theorem == "prop2"]


def _cor5(target: VerificationTarget, budget: Optional[LatticeBudget]) -> list[ClaimResult]:
    if target.levi is None:
        raise UndecidableError("the perfect-algebra criterion needs Levi data")
    return verify_cor5(target.algebra, target.levi, budget=budget)


def _criterion(target: VerificationTarget, budget: Optional[LatticeBudget]) -> list[ClaimResult]:
    return verify_frattini_criterion(_over_prime(target.algebra), budget)


def _nilpotent(target: VerificationTarget, budget: Optional[LatticeBudget]) -> list[ClaimResult]:
    return verify_nilpotent_frattini(target.algebra, budget)


def _cross(target: VerificationTarget, budget: Optional[LatticeBudget]) -> list[ClaimResult]:
    claims: list[ClaimResult] = []
    for p in settings.oracle_prime_list:
        try:
            claims.extend(cross_engine_check(target.algebra, p, budget))
        except NotReducibleError as exc:
            claims.append(ClaimResult.undecidable("cross", f"reduction mod {p}", exc.message))
    return claims


def _thm17(target: VerificationTarget, budget: Optional[LatticeBudget]) -> list[ClaimResult]:
    verdict = verify_thm17(target.algebra, target.levi, budget)
    detail = f"case {verdict.matched_case}" if verdict.matched_case else "no case matched"
    structure = {k: v for k, v in verdict.evidence.items() if k in ("N", "x", "generator")}
    return [
        replace(c, detail=c.detail or detail, evidence={**c.evidence, **structure})
        for c in verdict.claims
    ]


def _nil_for(alg: LeibnizAlgebra, budget: Optional[LatticeBudget]) -> Subspace:
    if alg.field.is_prime_field:
        return LatticeEngine(alg, budget).nil
    return nilradical(alg)


def _abelian_extension(target: VerificationTarget, budget: Optional[LatticeBudget]) -> list[ClaimResult]:
    alg = target.algebra
    nil = _nil_for(alg, budget)
    if nil.codim != 1:
        raise HypothesisViolatedError("L = N + <x> with N = Nil(L) of codimension 1")
    candidates = [alg.basis_vector(k) for k in nil.complement_coordinates()]
    x = next((v for v in candidates if not multiply(alg, v, v).is_zero), candidates[0])
    return verify_lemmas_15_16_18(alg, x, nil, budget)


def _lemma(theorem: str) -> Runner:
    def run(target: VerificationTarget, budget: Optional[LatticeBudget]) -> list[ClaimResult]:
        return [c for c in _abelian_extension(target, budget) if c.theorem == theorem]

    return run


THEOREMS: dict[str, Runner] = {
    "thm1": _thm1,
    "prop2": _prop2,
    "thm4": _e_algebra,
    "cor5": _cor5,
    "thm6": _thm6,
    **{t: _section4(t) for t in SECTION4},
    "lemma15": _lemma("lemma15"),
    "lemma16": _lemma("lemma16"),
    "lemma18": _lemma("lemma18"),
    "thm17": _thm17,
    "criterion": _criterion,
    "nilpotent": _nilpotent,
    "cross": _cross,
}
PAIRWISE = ("lemma3",)


def known_theorems() -> list[str]:
    return sorted([*THEOREMS, *PAIRWISE])


# -------------------------
# Execution
# -------------------------


def _guarded(theorem: str, label: str, thunk: Callable[[], list[ClaimResult]]) -> list[VerificationRecord]:
    """Run one verifier; refusals become undecidable records, broken post-conditions failures."""
    try:
        results = thunk()
    except HypothesisViolatedError as exc:
        results = [ClaimResult.undecidable(theorem, "applicable", f"not applicable: {exc.hypothesis} fails")]
    except (UndecidableError, NonSplitError, WrongCharacteristicError, BudgetExceededError) as exc:
        results = [ClaimResult.undecidable(theorem, "decidable", f"{exc.error_type}: {exc.message}")]
    except (BadParamsError, CharacteristicClashError, DimensionMismatchError, NotReducibleError) as exc:
        results = [ClaimResult.undecidable(theorem, "definable", f"{exc.error_type}: {exc.message}")]
    except InvariantViolationError as exc:
        logger.error(f"post-condition failed while verifying {theorem} on {label}: {exc.message}")
        results = [ClaimResult(theorem, "engine post-conditions", ClaimStatus.FAIL, exc.message)]
    if not results:
        results = [ClaimResult.undecidable(theorem, "applicable", "not applicable: hypotheses not met")]
    return [VerificationRecord(label, r) for r in results]


def _lemma3_pairs(
    targets: Sequence[VerificationTarget], budget: Optional[LatticeBudget]
) -> list[Callable[[], list[VerificationRecord]]]:
    jobs = []
    for a, b in itertools.combinations_with_replacement(targets, 2):
        label = f"{a.label} ⊕ {b.label}"
        if a.algebra.dim + b.algebra.dim > LEMMA3_MAX_DIM:
            continue

        def job(a: VerificationTarget = a, b: VerificationTarget = b, label: str = label) -> list[VerificationRecord]:
            return _guarded(
                "lemma3",
                label,
                lambda: verify_lemma3(_over_prime(a.algebra), _over_prime(b.algebra), budget=budget),
            )

        jobs.append(job)
    return jobs


async def run_verification(
    theorem: str,
    targets: Sequence[VerificationTarget],
    budget: Optional[LatticeBudget] = None,
    concurrency: Optional[int] = None,
) -> list[VerificationRecord]:
    """Run ``theorem`` on every target in worker threads; output follows input order."""
    theorem = theorem.lower()
    if theorem in PAIRWISE:
        jobs = _lemma3_pairs(targets, budget)
    elif theorem in THEOREMS:
        runner = THEOREMS[theorem]
        jobs = [
            (lambda t=t: _guarded(theorem, t.label, lambda: runner(t, budget)))
            for t in targets
        ]
    else:
        raise BadParamsError(f"unknown theorem {theorem!r}", known=known_theorems())
    gate = asyncio.Semaphore(concurrency or settings.verify_concurrency)

    async def bounded(job: Callable[[], list[VerificationRecord]]) -> list[VerificationRecord]:
        async with gate:
            return await asyncio.to_thread(job)

    batches = await asyncio.gather(*(bounded(job) for job in jobs))
    records = [r for batch in batches for r in batch]
    logger.bind(counts=count_statuses(records)).info(
        f"verified {theorem} on {len(targets)} targets"
    )
    return records


def count_statuses(records: Iterable[VerificationRecord]) -> dict[str, int]:
    counts = {s.value: 0 for s in ClaimStatus}
    for r in records:
        counts[r.result.status.value] += 1
    return counts


def verification_response(theorem: str, records: Sequence[VerificationRecord]) -> VerifyResponse:
    counts = count_statuses(records)
    return VerifyResponse(
        theorem=theorem,
        records=[r.to_out() for r in records],
        passed=counts[ClaimStatus.FAIL.value] == 0,
        counts=counts,
    )
