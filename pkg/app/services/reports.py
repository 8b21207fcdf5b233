"""Structure and lattice reports with engine selection.

Every invariant in a report names the engine that produced it and, where a
characterization was used, the statement behind the value.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from typing import Iterator, Optional

from ..algebra import (
    LeibnizAlgebra,
    derived_algebra,
    is_abelian,
    is_lie,
    is_perfect,
    series,
    validate,
)
from ..claims import Engine
from ..config import settings
from ..errors import BudgetExceededError, NotReducibleError, UndecidableError, WrongCharacteristicError
from ..lattice import LatticeBudget, LatticeEngine
from ..linalg import Subspace
from ..radicals import (
    LeviData,
    asoc,
    frattini_char0,
    jacobson_characterized,
    leib_kernel,
    nilradical,
    radical,
)
from ..schemas.algebra import (
    InvariantOut,
    LatticeReportOut,
    SeriesOut,
    StructureReportOut,
    SubspaceOut,
    ValidationOut,
)
from ..utils.logging import get_logger

logger = get_logger(__name__)

ENGINES = ("auto", "char0", "brute")


def select_engine(alg: LeibnizAlgebra, requested: Optional[str] = None) -> Engine:
    """auto -> char0 over Q and brute over GF(p); mismatches are refused."""
    requested = (requested or settings.default_engine).lower()
    if requested == "auto":
        return Engine.CHAR0 if alg.field.is_rational else Engine.BRUTE
    if requested == Engine.CHAR0.value and not alg.field.is_rational:
        raise WrongCharacteristicError(f"the char0 engine needs Q, the algebra is over {alg.field}")
    if requested == Engine.BRUTE.value and alg.field.is_rational:
        raise WrongCharacteristicError("the brute engine needs GF(p); reduce the table with --mod p")
    if requested not in (Engine.CHAR0.value, Engine.BRUTE.value):
        raise WrongCharacteristicError(f"unknown engine {requested!r}", known=list(ENGINES))
    return Engine(requested)


def subspace_out(alg: LeibnizAlgebra, s: Subspace) -> SubspaceOut:
    return SubspaceOut(
        dim=s.dim, basis=s.formatted(), span=[alg.format_vector(v) for v in s.vectors]
    )


def validation_out(alg: LeibnizAlgebra) -> ValidationOut:
    result = validate(alg)
    witness = result.witness.to_dict(alg.field) if result.witness is not None else None
    return ValidationOut(ok=result.ok, name=alg.name, witness=witness)


def _series_out(alg: LeibnizAlgebra) -> SeriesOut:
    s = series(alg)
    return SeriesOut(
        derived_dims=s.derived_dims,
        lower_central_dims=s.lower_central_dims,
        solvable=s.solvable,
        nilpotent=s.nilpotent,
        nilpotency_class=s.nilpotency_class,
        derived_length=s.derived_length,
    )


class _Timings(dict):
    @contextmanager
    def measure(self, key: str) -> Iterator[None]:
        started = time.perf_counter()
        try:
            yield
        finally:
            self[key] = round((time.perf_counter() - started) * 1000, 3)


def _char0_invariants(
    alg: LeibnizAlgebra,
    levi: Optional[LeviData],
    budget: Optional[LatticeBudget],
    timings: _Timings,
    caveats: list[str],
) -> dict[str, InvariantOut]:
    char0 = Engine.CHAR0.value
    out: dict[str, InvariantOut] = {}

    def put(name: str, space: Subspace, method: str, engine: str = char0) -> None:
        out[name] = InvariantOut(value=subspace_out(alg, space), engine=engine, method=method)

    with timings.measure("leib"):
        put("leib", leib_kernel(alg), "span of squares and symmetrized products", Engine.DEFINITIONAL.value)
    with timings.measure("rad"):
        rad = radical(alg)
        put("rad", rad, "Killing form of L/Leib(L)")
    with timings.measure("nil"):
        put("nil", nilradical(alg), "radical of the left trace form")
    with timings.measure("asoc"):
        put("asoc", asoc(alg), "socle of L inside Rad(L)")
    with timings.measure("jacobson"):
        jac = jacobson_characterized(alg, rad)
        put("jacobson", jac.space, jac.method)
    square = derived_algebra(alg)
    nilpotent = series(alg).nilpotent
    if nilpotent:
        put("frattini_subalgebra", square, "nilpotent: F(L) = L^2")
    else:
        out["frattini_subalgebra"] = InvariantOut(engine=char0, method="not characterized over Q")
    with timings.measure("phi"):
        out["phi"] = _char0_phi(alg, levi, budget, caveats)
    return out


def _char0_phi(
    alg: LeibnizAlgebra,
    levi: Optional[LeviData],
    budget: Optional[LatticeBudget],
    caveats: list[str],
) -> InvariantOut:
    try:
        found = frattini_char0(alg, levi)
    except UndecidableError:
        pass
    else:
        return InvariantOut(value=subspace_out(alg, found.space), engine=Engine.CHAR0.value, method=found.method)
    for p in settings.oracle_prime_list:
        try:
            reduced = alg.reduced_mod(p)
            phi = LatticeEngine(reduced, budget).phi
        except (NotReducibleError, BudgetExceededError) as exc:
            logger.debug(f"Φ transfer mod {p} skipped: {exc.message}")
            continue
        caveats.append(f"Φ(L) has no characteristic-0 characterization here; value computed mod {p}")
        return InvariantOut(
            value=subspace_out(reduced, phi),
            engine=Engine.BRUTE.value,
            method=f"mod-{p} transfer",
            field=reduced.field.label,
        )
    caveats.append("Φ(L) is undecidable with the available engines")
    return InvariantOut(engine=Engine.CHAR0.value, method="undecidable")


def _brute_invariants(
    alg: LeibnizAlgebra, budget: Optional[LatticeBudget], timings: _Timings
) -> tuple[dict[str, InvariantOut], LatticeEngine]:
    brute = Engine.BRUTE.value
    engine = LatticeEngine(alg, budget)
    out: dict[str, InvariantOut] = {}
    with timings.measure("leib"):
        out["leib"] = InvariantOut(
            value=subspace_out(alg, leib_kernel(alg)),
            engine=Engine.DEFINITIONAL.value,
            method="span of squares and symmetrized products",
        )
    methods = {
        "rad": ("rad", "sum of solvable ideals"),
        "nil": ("nil", "sum of nilpotent ideals"),
        "asoc": ("asoc", "sum of minimal abelian ideals"),
        "jacobson": ("jacobson", "intersection of maximal ideals"),
        "frattini_subalgebra": ("frattini_subalgebra", "intersection of maximal subalgebras"),
        "phi": ("phi", "largest ideal inside F(L)"),
    }
    for name, (attr, method) in methods.items():
        with timings.measure(name):
            space = getattr(engine, attr)
        out[name] = InvariantOut(value=subspace_out(alg, space), engine=brute, method=method)
    return out, engine


def _zero_invariants(alg: LeibnizAlgebra, engine: Engine) -> dict[str, InvariantOut]:
    zero = subspace_out(alg, alg.zero_space())
    names = ("leib", "rad", "nil", "asoc", "jacobson", "frattini_subalgebra", "phi")
    return {n: InvariantOut(value=zero, engine=engine.value, method="zero algebra") for n in names}


def build_structure_report(
    alg: LeibnizAlgebra,
    engine: Optional[str] = None,
    budget: Optional[LatticeBudget] = None,
    levi: Optional[LeviData] = None,
    timing: bool = True,
) -> StructureReportOut:
    selected = select_engine(alg, engine)
    timings = _Timings()
    caveats: list[str] = []
    predicates: dict[str, Optional[bool]] = {
        "solvable": series(alg).solvable,
        "nilpotent": series(alg).nilpotent,
        "lie": is_lie(alg),
        "abelian": is_abelian(alg),
        "perfect": is_perfect(alg),
    }
    if alg.dim == 0:
        caveats.append("zero algebra: every invariant is 0 by the degenerate conventions")
        invariants = _zero_invariants(alg, selected)
    elif selected is Engine.CHAR0:
        invariants = _char0_invariants(alg, levi, budget, timings, caveats)
        predicates["e_algebra"] = True if predicates["solvable"] else None
        predicates["elementary"] = None
    else:
        invariants, lattice = _brute_invariants(alg, budget, timings)
        with timings.measure("predicates"):
            predicates["f_is_ideal"] = lattice.f_is_ideal
            predicates["elementary"] = lattice.elementary
            predicates["minimal_non_elementary"] = lattice.minimal_non_elementary
            predicates["e_algebra"] = lattice.e_algebra
        if not lattice.f_is_ideal:
            caveats.append("F(L) is not an ideal")
    report = StructureReportOut(
        name=alg.name,
        field=alg.field.label,
        dim=alg.dim,
        engine=selected.value,
        series=_series_out(alg),
        invariants=invariants,
        predicates=predicates,
        caveats=caveats,
        timing_ms=dict(timings) if timing else None,
    )
    logger.info(f"structure report for {alg.name or 'L'} over {alg.field} via {selected.value}")
    return report


def build_lattice_report(
    alg: LeibnizAlgebra, budget: Optional[LatticeBudget] = None
) -> LatticeReportOut:
    report = LatticeEngine(alg, budget).report()

    def many(spaces: tuple[Subspace, ...]) -> list[SubspaceOut]:
        return [subspace_out(alg, s) for s in spaces]

    return LatticeReportOut(
        name=alg.name,
        field=alg.field.label,
        dim=alg.dim,
        subalgebra_count=report.subalgebra_count,
        ideal_count=report.ideal_count,
        maximal_subalgebras=many(report.maximal_subalgebras),
        maximal_ideals=many(report.maximal_ideals),
        minimal_ideals=many(report.minimal_ideals),
        invariants={
            "frattini_subalgebra": subspace_out(alg, report.F),
            "phi": subspace_out(alg, report.phi),
            "jacobson": subspace_out(alg, report.J),
            "nil": subspace_out(alg, report.nil),
            "rad": subspace_out(alg, report.rad),
            "asoc": subspace_out(alg, report.asoc),
        },
        predicates={
            "f_is_ideal": report.f_is_ideal,
            "elementary": report.elementary,
            "minimal_non_elementary": report.minimal_non_elementary,
            "e_algebra": report.e_algebra,
        },
        caveats=list(report.caveats),
    )
