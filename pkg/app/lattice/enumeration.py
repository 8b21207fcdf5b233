"""Streaming enumeration of all subspaces of GF(p)^n in canonical RREF form."""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations, product
from typing import Iterable, Iterator, Optional

from ..config import settings
from ..errors import BadParamsError, BudgetExceededError, WrongCharacteristicError
from ..linalg import FieldSpec, Matrix, Subspace, annihilator, kernel
from ..utils.logging import get_logger

logger = get_logger(__name__)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count(n: int, q: int, dims: Optional[Iterable[int]] = None) -> int:
    ks = range(n + 1) if dims is None else dims
    return sum(gaussian_binomial(n, k, q) for k in ks)


@dataclass(frozen=True)
class LatticeBudget:
    max_subspaces: int = dataclass_field(default_factory=lambda: settings.lattice_max_subspaces)
    max_seconds: float = dataclass_field(default_factory=lambda: settings.lattice_max_seconds)

    def __post_init__(self) -> None:
        if self.max_subspaces <= 0 or self.max_seconds <= 0:
            raise BadParamsError("lattice budget caps must be positive")

    def check_count(self, count: int, what: str = "subspaces") -> None:
        if count > self.max_subspaces:
            logger.warning(f"lattice budget exceeded: {count} {what} > {self.max_subspaces}")
            raise BudgetExceededError(
                f"{count} {what} exceed the budget of {self.max_subspaces}", count=count
            )

    def deadline(self) -> "Deadline":
        return Deadline(time.monotonic() + self.max_seconds, self.max_seconds)


@dataclass(frozen=True)
class Deadline:
    expires_at: float
    max_seconds: float

    def check(self, seen: Optional[int] = None) -> None:
        if time.monotonic() > self.expires_at:
            logger.warning(f"lattice wall-clock budget of {self.max_seconds}s exceeded")
            raise BudgetExceededError(
                f"lattice run exceeded {self.max_seconds}s", count=seen
            )


def _require_prime_field(field: FieldSpec) -> int:
    if not field.is_prime_field:
        raise WrongCharacteristicError(
            "subspace enumeration needs a prime field", field=field.label
        )
    return field.characteristic


def _subspaces_with_pivots(field: FieldSpec, n: int, pivots: tuple[int, ...]) -> Iterator[Subspace]:
    p = field.characteristic
    pivot_set = set(pivots)
    free = [
        (r, j)
        for r, pc in enumerate(pivots)
        for j in range(pc + 1, n)
        if j not in pivot_set
    ]
    for values in product(range(p), repeat=len(free)):
        rows = [[0] * n for _ in pivots]
        for r, pc in enumerate(pivots):
            rows[r][pc] = 1
        for (r, j), a in zip(free, values):
            rows[r][j] = a
        yield Subspace.from_rref_rows(field, n, [tuple(row) for row in rows])


def enumerate_subspaces(
    field: FieldSpec,
    n: int,
    budget: Optional[LatticeBudget] = None,
    dims: Optional[Iterable[int]] = None,
) -> Iterator[Subspace]:
    """Every subspace of GF(p)^n exactly once, by dimension then pivot pattern."""
    p = _require_prime_field(field)
    ks = sorted(set(range(n + 1) if dims is None else dims))
    (budget or LatticeBudget()).check_count(subspace_count(n, p, ks))
    for k in ks:
        for pivots in combinations(range(n), k):
            yield from _subspaces_with_pivots(field, n, pivots)


def hyperplanes_containing(
    s: Subspace, budget: Optional[LatticeBudget] = None
) -> Iterator[Subspace]:
    """Codimension-1 subspaces containing ``s``, one per line of functionals."""
    field = s.field
    p = _require_prime_field(field)
    functionals = annihilator(s)
    d = functionals.dim
    (budget or LatticeBudget()).check_count(gaussian_binomial(d, 1, p), "hyperplanes")
    for line in enumerate_subspaces(field, d, budget, dims=[1]):
        f = functionals.combine(line.vectors[0])
        yield kernel(Matrix(field, 1, s.ambient_dim, (f,)))
