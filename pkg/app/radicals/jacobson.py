"""Jacobson radical and Frattini ideal in characteristic 0, radical reports,
and the containment checks relating J, Φ, Nil and the radical."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from ..algebra import (
    LeibnizAlgebra,
    derived_algebra,
    is_ideal,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    product_space,
    restrict,
    subspace_is_nilpotent,
)
from ..claims import ClaimResult, Engine
from ..config import settings
from ..errors import (
    BudgetExceededError,
    HypothesisViolatedError,
    NonSplitError,
    NotReducibleError,
    UndecidableError,
    ensure,
)
from ..lattice import LatticeBudget, LatticeEngine, jacobson_bruteforce
from ..linalg import Matrix, Subspace, kernel
from ..utils.logging import get_logger, log_engine_run
from .kernels import leib_kernel, radical, require_char0
from .nilpotent import asoc, nilradical

logger = get_logger(__name__)


@dataclass(frozen=True)
class LeviData:
    """Declared Levi decomposition L = S + R.

    ``direct`` means S is an ideal too, so L = S ⊕ R as algebras.
    """

    radical: Subspace
    factor: Subspace
    sl2_copies: int
    direct: bool = False

    def check(self, alg: LeibnizAlgebra) -> None:
        ensure(is_ideal(alg, self.radical), "declared radical is not an ideal")
        ensure(is_subalgebra(alg, self.factor), "declared Levi factor is not a subalgebra")
        ensure(
            (self.radical + self.factor).is_full and (self.radical & self.factor).is_zero,
            "declared Levi data does not split L",
        )
        if self.direct:
            ensure(is_ideal(alg, self.factor), "declared direct Levi factor is not an ideal")


@dataclass(frozen=True)
class Characterized:
    """A subspace together with the statement that produced it."""

    space: Subspace
    method: str


# -------------------------
# Jacobson radical
# -------------------------


def lr_plus_rl(alg: LeibnizAlgebra, rad: Subspace) -> Subspace:
    full = alg.full_space()
    return product_space(alg, full, rad) + product_space(alg, rad, full)


def jacobson_characterized(
    alg: LeibnizAlgebra, rad: Optional[Subspace] = None
) -> Characterized:
    require_char0(alg, "jacobson_char0")
    started = time.perf_counter()
    square = derived_algebra(alg)
    if is_solvable(alg):
        result = Characterized(square, "J(L) = L^2 for solvable L (lemma10)")
    else:
        rad = radical(alg) if rad is None else rad
        result = Characterized(lr_plus_rl(alg, rad), "J(L) = LR + RL (prop11)")
    jac = result.space
    ensure(square.contains(jac), "J(L) is not inside L^2")
    ensure(subspace_is_nilpotent(alg, jac), "J(L) is not nilpotent")
    try:
        nil = nilradical(alg)
    except NonSplitError:
        logger.debug("J(L) inside Nil(L) not asserted: nilradical needs a split spectrum")
    else:
        ensure(nil.contains(jac), "J(L) is not inside Nil(L)")
    log_engine_run("char0", "jacobson", (time.perf_counter() - started) * 1000, dim=jac.dim)
    return result


def jacobson_char0(alg: LeibnizAlgebra, rad: Optional[Subspace] = None) -> Subspace:
    """J(L) over Q: L^2 when L is solvable, LR + RL otherwise."""
    return jacobson_characterized(alg, rad).space


# -------------------------
# Frattini ideal
# -------------------------


def subalgebra_complement(alg: LeibnizAlgebra, s: Subspace) -> Optional[Subspace]:
    """A subalgebra C with C ⊕ s = L, or None when there is none.

    ``s`` must contain L^2 and have s·s = 0. Writing C as the graph of a map
    φ from the coordinate complement into s, the subalgebra condition
    e_i e_j + e_i φ(e_j) + φ(e_i) e_j = 0 is then linear in φ.
    """
    if not s.contains(derived_algebra(alg)) or not product_space(alg, s, s).is_zero:
        raise HypothesisViolatedError("s contains L^2 and s·s = 0")
    f = alg.field
    n = alg.dim
    comp = s.complement_coordinates()
    ds = s.vectors
    m = len(ds)
    unknowns = len(comp) * m
    rows = []
    for a, i in enumerate(comp):
        ei = alg.basis_vector(i)
        for b, j in enumerate(comp):
            ej = alg.basis_vector(j)
            left = [alg.product(ei, d) for d in ds]
            right = [alg.product(d, ej) for d in ds]
            constant = alg.product(ei, ej)
            for r in range(n):
                row = [f.zero] * (unknowns + 1)
                for t in range(m):
                    row[b * m + t] = f.add(row[b * m + t], left[t][r])
                    row[a * m + t] = f.add(row[a * m + t], right[t][r])
                row[unknowns] = constant[r]
                rows.append(row)
    if rows:
        solutions = kernel(Matrix.from_rows(f, rows, unknowns + 1))
        particular = next((v for v in solutions.vectors if v[unknowns] != 0), None)
        if particular is None:
            return None
        scale = f.inv(particular[unknowns])
        u = [f.mul(scale, x) for x in particular[:unknowns]]
    else:
        u = []
    graph = []
    for a, i in enumerate(comp):
        v = list(alg.basis_vector(i))
        for t, d in enumerate(ds):
            coeff = u[a * m + t]
            v = [f.add(x, f.mul(coeff, y)) for x, y in zip(v, d)]
        graph.append(v)
    complement = alg.span(graph)
    ensure(is_subalgebra(alg, complement), "solved complement is not a subalgebra")
    ensure((complement + s).is_full and (complement & s).is_zero, "solved complement does not split L")
    return complement


def frattini_char0(alg: LeibnizAlgebra, levi: Optional[LeviData] = None) -> Characterized:
    """Φ(L) over Q where a characterization applies; Undecidable otherwise."""
    require_char0(alg, "frattini_char0")
    square = derived_algebra(alg)
    if is_nilpotent(alg):
        return Characterized(square, "nilpotent characterization")
    if levi is not None and levi.direct:
        levi.check(alg)
        inner = frattini_char0(restrict(alg, levi.radical))
        phi = alg.span([levi.radical.combine(c) for c in inner.space.vectors])
        return Characterized(phi, f"direct Levi sum: Φ(L) = Φ(R) ({inner.method})")
    if is_solvable(alg):
        if asoc(alg).contains(square) and subalgebra_complement(alg, square) is not None:
            return Characterized(alg.zero_space(), "Φ-free criterion: L^2 ⊆ Asoc(L), complemented")
    elif radical(alg).is_zero:
        return Characterized(alg.zero_space(), "semisimple")
    raise UndecidableError(
        "no characteristic-0 characterization of Φ(L) applies", algebra=alg.name
    )


# -------------------------
# Reports
# -------------------------


@dataclass(frozen=True)
class RadicalReport:
    leib: Subspace
    rad: Subspace
    nil: Subspace
    asoc: Subspace
    jac: Subspace
    engine: Engine
    jac_method: str = ""


def radical_report(
    alg: LeibnizAlgebra, budget: Optional[LatticeBudget] = None
) -> RadicalReport:
    leib = leib_kernel(alg)
    if alg.field.is_prime_field:
        engine = LatticeEngine(alg, budget)
        report = RadicalReport(
            leib=leib,
            rad=engine.rad,
            nil=engine.nil,
            asoc=engine.asoc,
            jac=engine.jacobson,
            engine=Engine.BRUTE,
            jac_method="intersection of maximal ideals",
        )
    else:
        rad = radical(alg)
        jac = jacobson_characterized(alg, rad)
        report = RadicalReport(
            leib=leib,
            rad=rad,
            nil=nilradical(alg),
            asoc=asoc(alg),
            jac=jac.space,
            engine=Engine.CHAR0,
            jac_method=jac.method,
        )
    for name in ("leib", "rad", "nil", "asoc", "jac"):
        ensure(is_ideal(alg, getattr(report, name)), f"{name} is not an ideal")
    ensure(report.rad.contains(report.nil), "Nil(L) is not inside Rad(L)")
    ensure(derived_algebra(alg).contains(report.jac), "J(L) is not inside L^2")
    return report


# -------------------------
# Containment checks
# -------------------------


def _transfer_frattini(
    alg: LeibnizAlgebra,
    jac: Subspace,
    primes: Iterable[int],
    budget: Optional[LatticeBudget],
) -> ClaimResult:
    claim = "Φ(L) ⊆ J(L)"
    for p in primes:
        try:
            reduced = alg.reduced_mod(p)
            phi_p = LatticeEngine(reduced, budget).phi
            jac_p = jac.over(reduced.field)
        except (NotReducibleError, BudgetExceededError) as exc:
            logger.debug(f"mod {p} transfer skipped: {exc.message}")
            continue
        if jac_p.contains(phi_p):
            return ClaimResult.check(
                "cor13", claim, True, f"mod-{p} transfer", Engine.BRUTE.value, phi=phi_p, J=jac_p
            )
        return ClaimResult.finding(
            "cor13", claim, f"mod-{p} Φ not inside reduced J", Engine.BRUTE.value, phi=phi_p, J=jac_p
        )
    return ClaimResult.undecidable("cor13", claim, "no characterization and no usable prime")


def verify_section4(
    alg: LeibnizAlgebra,
    levi: Optional[LeviData] = None,
    nilpotent_ideals: Sequence[Subspace] = (),
    oracle_primes: Optional[Sequence[int]] = None,
    budget: Optional[LatticeBudget] = None,
) -> list[ClaimResult]:
    """Evaluate the J/Φ/Nil/radical containments on one algebra.

    Over Q the characteristic-0 engines supply every side; over GF(p) the
    lattice engine does, and failures of characteristic-0 statements become
    findings.
    """
    rational = alg.field.is_rational
    primes = settings.oracle_prime_list if oracle_primes is None else list(oracle_primes)
    square = derived_algebra(alg)
    solvable = is_solvable(alg)
    nilpotent = is_nilpotent(alg)
    claims: list[ClaimResult] = []

    nil: Optional[Subspace]
    nil_reason = ""
    phi: Optional[Subspace] = None
    if rational:
        engine = Engine.CHAR0.value
        rad = radical(alg)
        jac = jacobson_characterized(alg, rad).space
        try:
            nil = nilradical(alg)
        except NonSplitError as exc:
            nil = None
            nil_reason = exc.message
        try:
            phi = frattini_char0(alg, levi).space
        except UndecidableError:
            phi = None
    else:
        engine = Engine.BRUTE.value
        lattice = LatticeEngine(alg, budget)
        rad, jac, nil, phi = lattice.rad, lattice.jacobson, lattice.nil, lattice.phi

    ideal_part = lr_plus_rl(alg, rad)

    def rel(theorem: str, claim: str, holds: bool, char0: bool = True, **evidence) -> None:
        claims.append(
            ClaimResult.relation(theorem, claim, holds, char0, rational, engine, **evidence)
        )

    if nil is None:
        claims.append(ClaimResult.undecidable("thm8", "LR+RL ⊆ Nil(L)", nil_reason, engine))
    else:
        rel("thm8", "LR+RL ⊆ Nil(L)", nil.contains(ideal_part), LR_RL=ideal_part, nil=nil)
    rel("thm8", "LR+RL is an ideal", is_ideal(alg, ideal_part), LR_RL=ideal_part)
    rel("prop9", "L^2 ∩ R = LR+RL", (square & rad) == ideal_part, LR_RL=ideal_part, R=rad)
    if solvable:
        rel("lemma10", "J(L) = L^2", jac == square, char0=False, J=jac, square=square)
        if rational:
            claims.extend(_lemma10_transfer(alg, primes, budget))
    rel("prop11", "J(L) = LR+RL", jac == ideal_part, J=jac, LR_RL=ideal_part)
    rel("cor12", "J(L) is nilpotent", subspace_is_nilpotent(alg, jac), J=jac)
    rel("cor12", "J(L) ⊆ L^2", square.contains(jac), char0=False, J=jac)
    if phi is not None:
        rel("cor13", "Φ(L) ⊆ J(L)", jac.contains(phi), phi=phi, J=jac)
    else:
        claims.append(_transfer_frattini(alg, jac, primes, budget))
    if nilpotent:
        holds = jac == square and (phi is None or phi == square)
        rel("cor13", "nilpotent ⇒ J(L) = Φ(L) = L^2", holds, char0=False, J=jac, square=square)
    ideals = list(nilpotent_ideals) + ([nil] if nil is not None else [])
    for b in ideals:
        ensure(subspace_is_nilpotent(alg, b), "supplied ideal is not nilpotent")
        jb = product_space(alg, b, b)
        rel("prop14", "J(B) ⊆ J(L)", jac.contains(jb), B=b, J_B=jb, J=jac)
    return claims


def _lemma10_transfer(
    alg: LeibnizAlgebra, primes: Iterable[int], budget: Optional[LatticeBudget]
) -> list[ClaimResult]:
    out = []
    square = derived_algebra(alg)
    for p in primes:
        try:
            reduced = alg.reduced_mod(p)
            jac_p = jacobson_bruteforce(reduced, budget, assume_solvable=True)
        except (NotReducibleError, BudgetExceededError) as exc:
            logger.debug(f"mod {p} lemma10 check skipped: {exc.message}")
            continue
        out.append(
            ClaimResult.check(
                "lemma10",
                f"J(L) = L^2 mod {p}",
                jac_p == square.over(reduced.field),
                engine=Engine.BRUTE.value,
                J=jac_p,
            )
        )
    return out
