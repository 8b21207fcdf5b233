"""Subspace-level operations on Leibniz algebras: products, series, closures,
cores, quotients, restrictions and direct sums."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..errors import DimensionMismatchError, NotAnIdealError, NotASubalgebraError, ensure
from ..linalg import Subspace, Vector, preimage
from .structure import ElementLike, LeibnizAlgebra, _coords


def product_space(alg: LeibnizAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """span{u'v' : u' in basis(u), v' in basis(v)}."""
    alg._check_subspace(u)
    alg._check_subspace(v)
    return alg.span([alg.product(a, b) for a in u.vectors for b in v.vectors])


def derived_algebra(alg: LeibnizAlgebra) -> Subspace:
    """L^2 = LL."""
    full = alg.full_space()
    return product_space(alg, full, full)


# -------------------------
# Series
# -------------------------


@dataclass(frozen=True)
class SeriesReport:
    derived: tuple[Subspace, ...]
    lower_central: tuple[Subspace, ...]
    solvable: bool
    nilpotent: bool

    @property
    def derived_dims(self) -> list[int]:
        return [s.dim for s in self.derived]

    @property
    def lower_central_dims(self) -> list[int]:
        return [s.dim for s in self.lower_central]

    @property
    def nilpotency_class(self) -> int | None:
        if not self.nilpotent:
            return None
        return len(self.lower_central) - 1

    @property
    def derived_length(self) -> int | None:
        if not self.solvable:
            return None
        return len(self.derived) - 1


@lru_cache(maxsize=512)
def series(alg: LeibnizAlgebra) -> SeriesReport:
    full = alg.full_space()
    derived = [full]
    while True:
        nxt = product_space(alg, derived[-1], derived[-1])
        if nxt == derived[-1]:
            break
        derived.append(nxt)
    lower = [full]
    while True:
        nxt = product_space(alg, full, lower[-1])
        if nxt == lower[-1]:
            break
        lower.append(nxt)
    for term in derived + lower:
        ensure(is_ideal(alg, term), "series term is not an ideal", term=repr(term))
    report = SeriesReport(
        derived=tuple(derived),
        lower_central=tuple(lower),
        solvable=derived[-1].is_zero,
        nilpotent=lower[-1].is_zero,
    )
    ensure(report.solvable or not report.nilpotent, "nilpotent algebra reported non-solvable")
    return report


def is_solvable(alg: LeibnizAlgebra) -> bool:
    return series(alg).solvable


def is_nilpotent(alg: LeibnizAlgebra) -> bool:
    return series(alg).nilpotent


def subspace_is_solvable(alg: LeibnizAlgebra, s: Subspace) -> bool:
    """Derived series of the subalgebra ``s`` computed inside L."""
    term = s
    for _ in range(alg.dim + 1):
        if term.is_zero:
            return True
        nxt = product_space(alg, term, term)
        if nxt == term:
            return False
        term = nxt
    return term.is_zero


def subspace_is_nilpotent(alg: LeibnizAlgebra, s: Subspace) -> bool:
    """Lower central series S^{k+1} = S S^k of the subalgebra ``s``."""
    term = s
    for _ in range(alg.dim + 1):
        if term.is_zero:
            return True
        nxt = product_space(alg, s, term)
        if nxt == term:
            return False
        term = nxt
    return term.is_zero


# -------------------------
# Closures and membership
# -------------------------


def is_subalgebra(alg: LeibnizAlgebra, s: Subspace) -> bool:
    alg._check_subspace(s)
    return all(s.contains_vector(alg.product(a, b)) for a in s.vectors for b in s.vectors)


def is_ideal(alg: LeibnizAlgebra, s: Subspace) -> bool:
    alg._check_subspace(s)
    for v in s.vectors:
        for op in alg.left_operators + alg.right_operators:
            if not s.contains_vector(op.apply(v)):
                return False
    return True


def subalgebra_closure(alg: LeibnizAlgebra, gens: Sequence[ElementLike]) -> Subspace:
    s = alg.span([_coords(alg, g) for g in gens])
    while True:
        grown = s + product_space(alg, s, s)
        if grown == s:
            return s
        s = grown


def ideal_closure(alg: LeibnizAlgebra, gens: Sequence[ElementLike]) -> Subspace:
    s = alg.span([_coords(alg, g) for g in gens])
    full = alg.full_space()
    while True:
        grown = s + product_space(alg, full, s) + product_space(alg, s, full)
        if grown == s:
            return s
        s = grown


def ideal_core(alg: LeibnizAlgebra, s: Subspace) -> Subspace:
    """Largest ideal contained in ``s``.

    K_0 = s, K_{m+1} = {x in K_m : xL and Lx lie in K_m}; stops within dim steps.
    """
    alg._check_subspace(s)
    core = s
    for _ in range(alg.dim + 1):
        nxt = core
        for op in alg.left_operators + alg.right_operators:
            nxt = nxt & preimage(op, core)
        if nxt == core:
            break
        core = nxt
    ensure(is_ideal(alg, core), "ideal core is not an ideal")
    return core


# -------------------------
# Derived constructions
# -------------------------


def _project(ideal: Subspace, coords: tuple[int, ...], v: Sequence) -> Vector:
    residue = ideal.reduce(v)
    return tuple(residue[c] for c in coords)


@dataclass(frozen=True)
class Quotient:
    """L/I on the non-pivot coordinates of I's RREF basis."""

    parent: LeibnizAlgebra
    ideal: Subspace
    algebra: LeibnizAlgebra
    coordinates: tuple[int, ...]

    def project_vector(self, v: Sequence) -> Vector:
        return _project(self.ideal, self.coordinates, v)

    def project_subspace(self, s: Subspace) -> Subspace:
        return self.algebra.span([self.project_vector(v) for v in s.vectors])

    def lift_vector(self, w: Sequence) -> Vector:
        f = self.parent.field
        out = [f.zero] * self.parent.dim
        for c, a in zip(self.coordinates, w):
            out[c] = a
        return tuple(out)

    def preimage(self, s: Subspace) -> Subspace:
        return self.parent.span([self.lift_vector(w) for w in s.vectors]) + self.ideal


def quotient(alg: LeibnizAlgebra, ideal: Subspace) -> Quotient:
    if not is_ideal(alg, ideal):
        raise NotAnIdealError("quotient requires an ideal", subspace=repr(ideal))
    coords = ideal.complement_coordinates()
    labels = [alg.labels[c] for c in coords]
    sc = [[_project(ideal, coords, alg.sc[a][b]) for b in coords] for a in coords]
    algebra = LeibnizAlgebra.from_structure_constants(
        alg.field, labels, sc, name=f"{alg.name or 'L'}/I"
    )
    return Quotient(alg, ideal, algebra, coords)


def _restricted_labels(alg: LeibnizAlgebra, s: Subspace) -> list[str]:
    labels = []
    for k, v in enumerate(s.vectors):
        nonzero = [i for i, a in enumerate(v) if a != 0]
        if len(nonzero) == 1 and v[nonzero[0]] == 1:
            labels.append(alg.labels[nonzero[0]])
        else:
            labels.append(f"s{k + 1}")
    if len(set(labels)) != len(labels):
        labels = [f"s{k + 1}" for k in range(len(labels))]
    return labels


def restrict(alg: LeibnizAlgebra, s: Subspace) -> LeibnizAlgebra:
    """The subalgebra ``s`` as an algebra in the RREF basis of ``s``."""
    if not is_subalgebra(alg, s):
        raise NotASubalgebraError("restrict requires a subalgebra", subspace=repr(s))
    sc = [[s.coordinates(alg.product(a, b)) for b in s.vectors] for a in s.vectors]
    return LeibnizAlgebra.from_structure_constants(
        alg.field, _restricted_labels(alg, s), sc, name=f"{alg.name or 'L'}|S"
    )


def direct_sum(a: LeibnizAlgebra, b: LeibnizAlgebra) -> LeibnizAlgebra:
    """Concatenated bases, cross products zero; colliding labels of ``b`` get primes."""
    if a.field != b.field:
        raise DimensionMismatchError(f"direct sum over {a.field} and {b.field}")
    f = a.field
    taken = set(a.labels)
    labels = list(a.labels)
    for lab in b.labels:
        while lab in taken:
            lab += "'"
        taken.add(lab)
        labels.append(lab)
    n, m = a.dim, b.dim
    zero = (f.zero,) * (n + m)
    sc = [[zero] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            sc[i][j] = a.sc[i][j] + (f.zero,) * m
    for i in range(m):
        for j in range(m):
            sc[n + i][n + j] = (f.zero,) * n + b.sc[i][j]
    name = f"{a.name or 'A'}+{b.name or 'B'}"
    return LeibnizAlgebra.from_structure_constants(f, labels, sc, name=name)


def transpose_product(alg: LeibnizAlgebra, *, checked: bool = True) -> LeibnizAlgebra:
    """Opposite product c[i][j][k] <-> c[j][i][k]: a right Leibniz table becomes left."""
    n = alg.dim
    sc = [[alg.sc[j][i] for j in range(n)] for i in range(n)]
    return LeibnizAlgebra.from_structure_constants(
        alg.field, alg.labels, sc, checked=checked, name=alg.name
    )


# -------------------------
# Predicates
# -------------------------


def is_abelian(alg: LeibnizAlgebra) -> bool:
    return all(a == 0 for row in alg.sc for vec in row for a in vec)


def is_lie(alg: LeibnizAlgebra) -> bool:
    """Squares vanish on the basis and the product is antisymmetric."""
    f = alg.field
    n = alg.dim
    for i in range(n):
        if any(a != 0 for a in alg.sc[i][i]):
            return False
        for j in range(i + 1, n):
            if any(f.add(a, b) != 0 for a, b in zip(alg.sc[i][j], alg.sc[j][i])):
                return False
    return True


def is_perfect(alg: LeibnizAlgebra) -> bool:
    return derived_algebra(alg).is_full
