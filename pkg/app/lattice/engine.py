"""Definitional invariants over GF(p) by exhaustive subspace enumeration.

Every value here is read straight off the subalgebra and ideal lattices, so
this engine is the oracle the characteristic-0 characterizations are checked
against.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product
from typing import Iterator, Optional

from ..algebra import (
    LeibnizAlgebra,
    derived_algebra,
    ideal_core,
    is_ideal,
    is_solvable,
    is_subalgebra,
    product_space,
    quotient,
    restrict,
    subspace_is_nilpotent,
    subspace_is_solvable,
    validate,
)
from ..errors import WrongCharacteristicError, ensure
from ..linalg import FieldSpec, Subspace
from ..utils.logging import get_logger, log_engine_run
from .enumeration import Deadline, LatticeBudget, enumerate_subspaces, hyperplanes_containing

logger = get_logger(__name__)

_DEADLINE_STRIDE = 512


def _intersect_all(alg: LeibnizAlgebra, spaces: list[Subspace]) -> Subspace:
    # empty family -> L
    return reduce(lambda a, b: a & b, spaces, alg.full_space())


def _sum_all(alg: LeibnizAlgebra, spaces: list[Subspace]) -> Subspace:
    return reduce(lambda a, b: a + b, spaces, alg.zero_space())


def _maximal(members: list[Subspace]) -> list[Subspace]:
    found: list[Subspace] = []
    for s in sorted(members, key=lambda m: -m.dim):
        if not any(m.contains(s) for m in found):
            found.append(s)
    return sorted(found, key=Subspace.sort_key)


def _minimal(members: list[Subspace]) -> list[Subspace]:
    found: list[Subspace] = []
    for s in sorted(members, key=lambda m: m.dim):
        if not any(s.contains(m) for m in found):
            found.append(s)
    return sorted(found, key=Subspace.sort_key)


@dataclass(frozen=True)
class LatticeReport:
    field: FieldSpec
    dim: int
    subalgebras: tuple[Subspace, ...]
    ideals: tuple[Subspace, ...]
    maximal_subalgebras: tuple[Subspace, ...]
    maximal_ideals: tuple[Subspace, ...]
    minimal_ideals: tuple[Subspace, ...]
    F: Subspace
    phi: Subspace
    J: Subspace
    nil: Subspace
    rad: Subspace
    asoc: Subspace
    f_is_ideal: bool
    elementary: bool
    minimal_non_elementary: bool
    e_algebra: bool
    caveats: tuple[str, ...] = ()

    @property
    def subalgebra_count(self) -> int:
        return len(self.subalgebras)

    @property
    def ideal_count(self) -> int:
        return len(self.ideals)


class LatticeEngine:
    """Lazily computed lattice invariants of one algebra over GF(p).

    Not thread-safe: results are memoized on the instance.
    """

    def __init__(
        self,
        alg: LeibnizAlgebra,
        budget: Optional[LatticeBudget] = None,
        deadline: Optional[Deadline] = None,
    ) -> None:
        if not alg.field.is_prime_field:
            raise WrongCharacteristicError(
                "the brute-force engine needs GF(p); use the char0 engine over Q",
                field=alg.field.label,
            )
        self.alg = alg
        self.budget = budget or LatticeBudget()
        # one wall clock for this engine and every engine it spawns for subalgebras
        self.deadline = deadline or self.budget.deadline()
        self._phi_memo: dict[Subspace, Subspace] = {}

    # -- lattices ----------------------------------------------------------

    @cached_property
    def subalgebras(self) -> tuple[Subspace, ...]:
        started = time.perf_counter()
        found = []
        for count, s in enumerate(enumerate_subspaces(self.alg.field, self.alg.dim, self.budget)):
            if count % _DEADLINE_STRIDE == 0:
                self.deadline.check(count)
            if is_subalgebra(self.alg, s):
                found.append(s)
        log_engine_run(
            "brute",
            "subalgebras",
            (time.perf_counter() - started) * 1000,
            dim=self.alg.dim,
            field=self.alg.field.label,
            subalgebras=len(found),
        )
        return tuple(sorted(found, key=Subspace.sort_key))

    @cached_property
    def ideals(self) -> tuple[Subspace, ...]:
        return tuple(s for s in self.subalgebras if is_ideal(self.alg, s))

    @cached_property
    def maximal_subalgebras(self) -> tuple[Subspace, ...]:
        return tuple(_maximal([s for s in self.subalgebras if not s.is_full]))

    @cached_property
    def maximal_ideals(self) -> tuple[Subspace, ...]:
        return tuple(_maximal([s for s in self.ideals if not s.is_full]))

    @cached_property
    def minimal_ideals(self) -> tuple[Subspace, ...]:
        return tuple(_minimal([s for s in self.ideals if not s.is_zero]))

    # -- invariants --------------------------------------------------------

    @cached_property
    def frattini_subalgebra(self) -> Subspace:
        return _intersect_all(self.alg, list(self.maximal_subalgebras))

    @cached_property
    def phi(self) -> Subspace:
        phi = ideal_core(self.alg, self.frattini_subalgebra)
        ensure(self.frattini_subalgebra.contains(phi), "Frattini ideal escapes F(L)")
        return phi

    @cached_property
    def jacobson(self) -> Subspace:
        return _intersect_all(self.alg, list(self.maximal_ideals))

    @cached_property
    def nil(self) -> Subspace:
        nil = _sum_all(self.alg, [s for s in self.ideals if subspace_is_nilpotent(self.alg, s)])
        ensure(subspace_is_nilpotent(self.alg, nil), "sum of nilpotent ideals is not nilpotent")
        return nil

    @cached_property
    def rad(self) -> Subspace:
        rad = _sum_all(self.alg, [s for s in self.ideals if subspace_is_solvable(self.alg, s)])
        ensure(subspace_is_solvable(self.alg, rad), "sum of solvable ideals is not solvable")
        return rad

    @cached_property
    def asoc(self) -> Subspace:
        abelian = [
            s for s in self.minimal_ideals if product_space(self.alg, s, s).is_zero
        ]
        return _sum_all(self.alg, abelian)

    @property
    def f_is_ideal(self) -> bool:
        return is_ideal(self.alg, self.frattini_subalgebra)

    # -- Frattini ideals of subalgebras -----------------------------------

    def phi_of(self, b: Subspace) -> Subspace:
        """Φ(B) of the subalgebra ``b``, in the coordinates of L."""
        if b.is_full:
            return self.phi
        if b.dim <= 1:
            return self.alg.zero_space()
        cached = self._phi_memo.get(b)
        if cached is None:
            inner = LatticeEngine(restrict(self.alg, b), self.budget, self.deadline)
            cached = self.alg.span([b.combine(c) for c in inner.phi.vectors])
            self._phi_memo[b] = cached
        return cached

    def _proper_subalgebras(self) -> Iterator[Subspace]:
        return (s for s in self.subalgebras if not s.is_full)

    def non_elementary_subalgebra(self) -> Optional[Subspace]:
        """A proper subalgebra B with Φ(B) != 0, if there is one."""
        return next((b for b in self._proper_subalgebras() if not self.phi_of(b).is_zero), None)

    @cached_property
    def minimal_non_elementary(self) -> bool:
        if self.phi.is_zero:
            return False
        return all(self.phi_of(b).is_zero for b in self._proper_subalgebras())

    @cached_property
    def elementary(self) -> bool:
        if not self.phi.is_zero:
            return False
        return all(self.phi_of(b).is_zero for b in self._proper_subalgebras())

    @cached_property
    def e_algebra(self) -> bool:
        return all(self.phi.contains(self.phi_of(b)) for b in self._proper_subalgebras())

    # -- report ------------------------------------------------------------

    def report(self) -> LatticeReport:
        started = time.perf_counter()
        caveats = []
        if self.alg.dim == 0:
            caveats.append("zero algebra: F(L) and J(L) use the empty-intersection convention")
        report = LatticeReport(
            field=self.alg.field,
            dim=self.alg.dim,
            subalgebras=self.subalgebras,
            ideals=self.ideals,
            maximal_subalgebras=self.maximal_subalgebras,
            maximal_ideals=self.maximal_ideals,
            minimal_ideals=self.minimal_ideals,
            F=self.frattini_subalgebra,
            phi=self.phi,
            J=self.jacobson,
            nil=self.nil,
            rad=self.rad,
            asoc=self.asoc,
            f_is_ideal=self.f_is_ideal,
            elementary=self.elementary,
            minimal_non_elementary=self.minimal_non_elementary,
            e_algebra=self.e_algebra,
            caveats=tuple(caveats),
        )
        ensure(report.F.contains(report.phi), "phi is not inside F")
        ensure(derived_algebra(self.alg).contains(report.J), "J(L) is not inside L^2")
        ensure(report.nil.contains(report.asoc), "Asoc(L) is not inside Nil(L)")
        log_engine_run(
            "brute",
            "lattice_report",
            (time.perf_counter() - started) * 1000,
            dim=self.alg.dim,
            field=self.alg.field.label,
        )
        return report


def classify_lattice(
    alg: LeibnizAlgebra, budget: Optional[LatticeBudget] = None
) -> LatticeReport:
    return LatticeEngine(alg, budget).report()


def frattini_bruteforce(
    alg: LeibnizAlgebra, budget: Optional[LatticeBudget] = None
) -> tuple[Subspace, Subspace]:
    """(F(L), Φ(L)) over GF(p)."""
    engine = LatticeEngine(alg, budget)
    return engine.frattini_subalgebra, engine.phi


def jacobson_bruteforce(
    alg: LeibnizAlgebra,
    budget: Optional[LatticeBudget] = None,
    assume_solvable: Optional[bool] = None,
) -> Subspace:
    """J(L) over GF(p).

    Solvable algebras only need the hyperplanes containing L^2, since every
    maximal ideal of a solvable algebra has codimension 1.
    """
    if not alg.field.is_prime_field:
        raise WrongCharacteristicError("the brute-force engine needs GF(p)", field=alg.field.label)
    solvable = is_solvable(alg) if assume_solvable is None else assume_solvable
    if not solvable:
        return LatticeEngine(alg, budget).jacobson
    started = time.perf_counter()
    square = derived_algebra(alg)
    ideals = [h for h in hyperplanes_containing(square, budget) if is_ideal(alg, h)]
    jac = _intersect_all(alg, ideals)
    log_engine_run(
        "brute",
        "jacobson_solvable_fast_path",
        (time.perf_counter() - started) * 1000,
        dim=alg.dim,
        hyperplanes=len(ideals),
    )
    return jac


def e_algebra_equivalence(
    alg: LeibnizAlgebra, budget: Optional[LatticeBudget] = None
) -> tuple[bool, bool]:
    """(L is an E-algebra, L/Φ(L) is elementary), both by enumeration."""
    engine = LatticeEngine(alg, budget)
    top = quotient(alg, engine.phi).algebra
    return engine.e_algebra, LatticeEngine(top, budget, engine.deadline).elementary


def small_algebra_corpus(
    field: FieldSpec, max_dim: int, budget: Optional[LatticeBudget] = None
) -> Iterator[LeibnizAlgebra]:
    """Every structure-constant table of dimension <= max_dim passing validate."""
    if not field.is_prime_field:
        raise WrongCharacteristicError("the corpus is enumerated over GF(p)", field=field.label)
    p = field.characteristic
    budget = budget or LatticeBudget()
    budget.check_count(sum(p ** (n ** 3) for n in range(max_dim + 1)), "tables")
    for n in range(max_dim + 1):
        labels = [f"e{i + 1}" for i in range(n)]
        for flat in product(range(p), repeat=n ** 3):
            sc = [
                [list(flat[(i * n + j) * n:(i * n + j + 1) * n]) for j in range(n)]
                for i in range(n)
            ]
            alg = LeibnizAlgebra.from_structure_constants(
                field, labels, sc, checked=False, name=f"corpus{n}"
            )
            if validate(alg).ok:
                yield alg
