"""Subspaces in canonical reduced row-echelon form.

Two subspaces are equal as sets iff their RREF basis matrices are identical,
so ``Subspace`` values hash and compare structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from ..errors import DimensionMismatchError
from .field import FieldSpec, Scalar
from .matrix import Matrix, Vector, rref_rows


@dataclass(frozen=True)
class Subspace:
    field: FieldSpec
    ambient_dim: int
    basis: Matrix

    # -- construction ------------------------------------------------------

    @classmethod
    def span(
        cls, field: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence]
    ) -> "Subspace":
        data = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(
                    f"vector of length {len(v)} in ambient dimension {ambient_dim}"
                )
            data.append(tuple(field.coerce(x) for x in v))
        rows, _ = rref_rows(field, data, ambient_dim)
        return cls(field, ambient_dim, Matrix(field, len(rows), ambient_dim, tuple(rows)))

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix(field, 0, ambient_dim, ()))

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim))

    @classmethod
    def from_rref_rows(
        cls, field: FieldSpec, ambient_dim: int, rows: Sequence[Vector]
    ) -> "Subspace":
        """Wrap rows already known to be in canonical RREF."""
        return cls(field, ambient_dim, Matrix(field, len(rows), ambient_dim, tuple(rows)))

    # -- shape -------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def vectors(self) -> tuple:
        return self.basis.rows

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, a in enumerate(row) if a != 0) for row in self.vectors)

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def complement_coordinates(self) -> tuple[int, ...]:
        """Non-pivot coordinates: a canonical complement basis."""
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in piv)

    def _check_compatible(self, other: "Subspace") -> None:
        if other.field != self.field or other.ambient_dim != self.ambient_dim:
            raise DimensionMismatchError(
                f"subspaces of {self.field}^{self.ambient_dim} and "
                f"{other.field}^{other.ambient_dim}"
            )

    # -- membership --------------------------------------------------------

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        """Residue of ``v`` modulo the subspace (zero on every pivot)."""
        f = self.field
        w = list(v)
        for row, piv in zip(self.vectors, self.pivots):
            c = w[piv]
            if c != 0:
                w = [f.sub(a, f.mul(c, b)) for a, b in zip(w, row)]
        return tuple(w)

    def contains_vector(self, v: Sequence[Scalar]) -> bool:
        return all(a == 0 for a in self.reduce(v))

    def contains(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        if other.dim > self.dim:
            return False
        return all(self.contains_vector(v) for v in other.vectors)

    def __ge__(self, other: "Subspace") -> bool:
        return self.contains(other)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def coordinates(self, v: Sequence[Scalar]) -> Vector:
        """Coefficients of ``v`` in the RREF basis; ``v`` must lie in the subspace."""
        if not self.contains_vector(v):
            raise DimensionMismatchError("vector does not lie in the subspace")
        return tuple(v[p] for p in self.pivots)

    def combine(self, coords: Sequence[Scalar]) -> Vector:
        f = self.field
        out = [f.zero] * self.ambient_dim
        for c, row in zip(coords, self.vectors):
            if c != 0:
                out = [f.add(a, f.mul(c, b)) for a, b in zip(out, row)]
        return tuple(out)

    # -- lattice operations ------------------------------------------------

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if other.is_zero or self.contains(other):
            return self
        if self.is_zero:
            return other
        return Subspace.span(self.field, self.ambient_dim, self.vectors + other.vectors)

    def __and__(self, other: "Subspace") -> "Subspace":
        """Zassenhaus intersection."""
        self._check_compatible(other)
        n = self.ambient_dim
        if self.contains(other):
            return other
        if other.contains(self):
            return self
        z = (self.field.zero,) * n
        stacked = [row + row for row in self.vectors] + [row + z for row in other.vectors]
        rows, _ = rref_rows(self.field, stacked, 2 * n)
        meet = [row[n:] for row in rows if all(a == 0 for a in row[:n])]
        return Subspace.span(self.field, n, meet)

    def image_under(self, m: Matrix) -> "Subspace":
        if m.ncols != self.ambient_dim or m.field != self.field:
            raise DimensionMismatchError("operator does not act on this space")
        return Subspace.span(self.field, m.nrows, [m.apply(v) for v in self.vectors])

    def is_invariant_under(self, m: Matrix) -> bool:
        return all(self.contains_vector(m.apply(v)) for v in self.vectors)

    def over(self, field: FieldSpec) -> "Subspace":
        """Span of the same basis read in ``field`` (reduction of a rational basis mod p)."""
        return Subspace.span(field, self.ambient_dim, self.vectors)

    # -- presentation ------------------------------------------------------

    def sort_key(self) -> tuple:
        return (self.dim, self.vectors)

    def formatted(self) -> list[list[str]]:
        return [[self.field.format(a) for a in row] for row in self.vectors]

    def __repr__(self) -> str:
        body = ", ".join("(" + ", ".join(r) + ")" for r in self.formatted())
        return f"<{body}>"


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u + v


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    return u & v


def contains(u: Subspace, v: Subspace) -> bool:
    """True iff ``v`` is a subspace of ``u``."""
    return u.contains(v)


def kernel(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}`` as a subspace of the column space."""
    f = m.field
    rows, pivots = rref_rows(f, m.rows, m.ncols)
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    vectors = []
    for j in free:
        v = [f.zero] * m.ncols
        v[j] = f.one
        for row, p in zip(rows, pivots):
            v[p] = f.neg(row[j])
        vectors.append(v)
    return Subspace.span(f, m.ncols, vectors)


def image(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return Subspace.span(m.field, m.nrows, m.columns())


def preimage(m: Matrix, s: Subspace) -> Subspace:
    """``{v : m v in s}``."""
    if m.nrows != s.ambient_dim:
        raise DimensionMismatchError("operator codomain does not match subspace")
    comp = s.complement_coordinates()
    residues = [s.reduce(col) for col in m.columns()]
    constraint = Matrix(
        m.field, len(comp), m.ncols, tuple(tuple(r[i] for r in residues) for i in comp)
    )
    return kernel(constraint)


def annihilator(s: Subspace) -> Subspace:
    """Linear functionals (as coordinate vectors) vanishing on ``s``."""
    if s.is_zero:
        return Subspace.full(s.field, s.ambient_dim)
    return kernel(s.basis)
