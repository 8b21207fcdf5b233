"""Dense exact matrices and Gauss-Jordan elimination."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import DimensionMismatchError, NonSquareError
from .field import FieldSpec, Scalar

Vector = tuple  # tuple[Scalar, ...]


def rref_rows(
    field: FieldSpec, rows: Iterable[Sequence[Scalar]], ncols: int
) -> tuple[list[Vector], list[int]]:
    """Reduced row-echelon form of ``rows``; zero rows are dropped.

    Returns the nonzero RREF rows and their pivot columns.
    """
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        if m[r][c] != 1:
            inv = field.inv(m[r][c])
            m[r] = [field.mul(inv, x) for x in m[r]]
        lead = m[r]
        for i in range(len(m)):
            f = m[i][c]
            if i != r and f != 0:
                m[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(m[i], lead)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


@dataclass(frozen=True)
class Matrix:
    """Row-major matrix; all entries live in ``field``.

    Operators act on column vectors: ``m.apply(v)`` is ``m @ v``.
    """

    field: FieldSpec
    nrows: int
    ncols: int
    rows: tuple

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(
        cls, field: FieldSpec, rows: Iterable[Sequence], ncols: int | None = None
    ) -> "Matrix":
        data = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        width = ncols if ncols is not None else (len(data[0]) if data else 0)
        if any(len(row) != width for row in data):
            raise DimensionMismatchError("ragged matrix rows")
        return cls(field, len(data), width, data)

    @classmethod
    def from_columns(
        cls, field: FieldSpec, columns: Sequence[Sequence], nrows: int
    ) -> "Matrix":
        return cls.from_rows(
            field,
            [[col[i] for col in columns] for i in range(nrows)],
            ncols=len(columns),
        )

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls.diagonal(field, [field.one] * n)

    @classmethod
    def diagonal(cls, field: FieldSpec, entries: Sequence) -> "Matrix":
        n = len(entries)
        z = field.zero
        rows = tuple(
            tuple(field.coerce(entries[i]) if i == j else z for j in range(n))
            for i in range(n)
        )
        return cls(field, n, n, rows)

    # -- shape -------------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def require_square(self) -> int:
        if not self.is_square:
            raise NonSquareError(
                f"square matrix required, got {self.nrows}x{self.ncols}"
            )
        return self.nrows

    def _check_same_field(self, other: "Matrix") -> None:
        if other.field != self.field:
            raise DimensionMismatchError(
                f"field mismatch: {self.field} vs {other.field}"
            )

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    # -- arithmetic --------------------------------------------------------

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, tuple(self.columns()))

    def apply(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatchError(
                f"vector of length {len(v)} for {self.nrows}x{self.ncols} matrix"
            )
        dot = self.field.dot
        return tuple(dot(row, v) for row in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.ncols != other.nrows:
            raise DimensionMismatchError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        cols = other.columns()
        dot = self.field.dot
        rows = tuple(tuple(dot(row, col) for col in cols) for row in self.rows)
        return Matrix(self.field, self.nrows, other.ncols, rows)

    def _entrywise(self, other: "Matrix", op) -> "Matrix":
        self._check_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatchError("shape mismatch")
        rows = tuple(
            tuple(op(a, b) for a, b in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)
        )
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._entrywise(other, self.field.add)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._entrywise(other, self.field.sub)

    def scale(self, s: Scalar) -> "Matrix":
        s = self.field.coerce(s)
        mul = self.field.mul
        rows = tuple(tuple(mul(s, a) for a in row) for row in self.rows)
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def shift(self, s: Scalar) -> "Matrix":
        """``self - s*I``."""
        n = self.require_square()
        return self - Matrix.identity(self.field, n).scale(s)

    def power(self, k: int) -> "Matrix":
        n = self.require_square()
        result = Matrix.identity(self.field, n)
        base = self
        while k > 0:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def trace(self) -> Scalar:
        n = self.require_square()
        total = self.field.zero
        for i in range(n):
            total = self.field.add(total, self.rows[i][i])
        return total

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.rows for a in row)

    def rank(self) -> int:
        rows, _ = rref_rows(self.field, self.rows, self.ncols)
        return len(rows)


def rref(m: Matrix) -> Matrix:
    """Unique reduced row-echelon form of ``m`` with zero rows removed."""
    rows, _ = rref_rows(m.field, m.rows, m.ncols)
    return Matrix(m.field, len(rows), m.ncols, tuple(rows))
