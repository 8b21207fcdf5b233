"""Leibniz algebras presented by structure constants.

``sc[i][j]`` is the coordinate vector of the product b_i b_j, so
``sc[i][j][k]`` is the coefficient of b_k. Left Leibniz convention:
x(yz) = (xy)z + y(xz).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import Any, Mapping, Optional, Sequence, Union

from ..errors import BadParamsError, DimensionMismatchError, LeibnizIdentityError
from ..linalg import FieldSpec, Matrix, Scalar, Subspace, Vector, kernel
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class IdentityViolation:
    """First basis triple (i, j, l) where b_i(b_j b_l) != (b_i b_j)b_l + b_j(b_i b_l)."""

    i: int
    j: int
    l: int
    labels: tuple[str, str, str]
    lhs: Vector
    rhs: Vector

    def to_dict(self, field: FieldSpec) -> dict[str, Any]:
        return {
            "triple": list(self.labels),
            "indices": [self.i, self.j, self.l],
            "lhs": [field.format(a) for a in self.lhs],
            "rhs": [field.format(a) for a in self.rhs],
        }


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    witness: Optional[IdentityViolation] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class LeibnizAlgebra:
    field: FieldSpec
    labels: tuple[str, ...]
    sc: tuple  # sc[i][j] -> product vector
    name: str = dataclass_field(default="", compare=False)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_structure_constants(
        cls,
        field: FieldSpec,
        labels: Sequence[str],
        sc: Sequence[Sequence[Sequence[Any]]],
        *,
        checked: bool = True,
        name: str = "",
    ) -> "LeibnizAlgebra":
        labels = tuple(labels)
        n = len(labels)
        if len(set(labels)) != n:
            raise BadParamsError("basis labels must be distinct", labels=list(labels))
        if len(sc) != n or any(len(row) != n for row in sc):
            raise DimensionMismatchError(f"structure constants must be {n}x{n}x{n}")
        data = []
        for row in sc:
            out_row = []
            for vec in row:
                if len(vec) != n:
                    raise DimensionMismatchError(f"structure constants must be {n}x{n}x{n}")
                out_row.append(tuple(field.coerce(a) for a in vec))
            data.append(tuple(out_row))
        alg = cls(field, labels, tuple(data), name)
        if checked:
            result = validate(alg)
            if not result.ok:
                w = result.witness
                logger.debug(f"rejected table {name or labels}: identity fails at {w.labels}")
                raise LeibnizIdentityError(
                    f"Leibniz identity fails at ({', '.join(w.labels)})", witness=w
                )
        return alg

    @classmethod
    def from_products(
        cls,
        field: FieldSpec,
        labels: Sequence[str],
        products: Mapping[tuple[str, str], Mapping[str, Any]],
        *,
        checked: bool = True,
        name: str = "",
    ) -> "LeibnizAlgebra":
        """Build from a sparse table ``{(a, b): {c: coeff}}``; omitted products are 0."""
        labels = tuple(labels)
        index = {lab: k for k, lab in enumerate(labels)}
        n = len(labels)
        sc = [[[0] * n for _ in range(n)] for _ in range(n)]
        for (a, b), terms in products.items():
            for lab in (a, b, *terms):
                if lab not in index:
                    raise BadParamsError(f"undeclared basis label {lab!r}", label=lab)
            for c, coeff in terms.items():
                sc[index[a]][index[b]][index[c]] = coeff
        return cls.from_structure_constants(field, labels, sc, checked=checked, name=name)

    @classmethod
    def zero_algebra(cls, field: FieldSpec) -> "LeibnizAlgebra":
        return cls(field, (), (), "0")

    @classmethod
    def abelian(cls, field: FieldSpec, labels: Sequence[str]) -> "LeibnizAlgebra":
        n = len(labels)
        zero = (field.zero,) * n
        sc = tuple(tuple(zero for _ in range(n)) for _ in range(n))
        return cls(field, tuple(labels), sc, f"abelian{n}")

    def reduced_mod(self, p: int, *, checked: bool = True) -> "LeibnizAlgebra":
        """The same table over GF(p); denominators divisible by p are refused."""
        if not self.field.is_rational:
            raise BadParamsError(f"only tables over Q can be reduced, got {self.field}")
        return LeibnizAlgebra.from_structure_constants(
            FieldSpec.prime(p), self.labels, self.sc, checked=checked, name=self.name
        )

    # -- shape and elements ------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise BadParamsError(f"unknown basis label {label!r}", label=label) from None

    def basis_vector(self, which: Union[int, str]) -> Vector:
        k = self.index_of(which) if isinstance(which, str) else which
        f = self.field
        return tuple(f.one if i == k else f.zero for i in range(self.dim))

    def element(self, coords: Union[str, Sequence[Any]]) -> "AlgebraElement":
        if isinstance(coords, str):
            return AlgebraElement(self, self.basis_vector(coords))
        return AlgebraElement.of(self, coords)

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def span(self, vectors: Sequence[Sequence[Any]]) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def span_labels(self, *labels: str) -> Subspace:
        return self.span([self.basis_vector(lab) for lab in labels])

    def _check_vector(self, v: Sequence[Scalar]) -> None:
        if len(v) != self.dim:
            raise DimensionMismatchError(
                f"vector of length {len(v)} in an algebra of dimension {self.dim}"
            )

    def _check_subspace(self, s: Subspace) -> None:
        if s.ambient_dim != self.dim or s.field != self.field:
            raise DimensionMismatchError("subspace does not live in this algebra")

    # -- multiplication ----------------------------------------------------

    @cached_property
    def left_operators(self) -> tuple[Matrix, ...]:
        """L_{b_i}, acting on column vectors as y -> b_i y."""
        n = self.dim
        return tuple(
            Matrix(
                self.field,
                n,
                n,
                tuple(tuple(self.sc[i][j][k] for j in range(n)) for k in range(n)),
            )
            for i in range(n)
        )

    @cached_property
    def right_operators(self) -> tuple[Matrix, ...]:
        """R_{b_j}, acting on column vectors as y -> y b_j."""
        n = self.dim
        return tuple(
            Matrix(
                self.field,
                n,
                n,
                tuple(tuple(self.sc[i][j][k] for i in range(n)) for k in range(n)),
            )
            for j in range(n)
        )

    def product(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        self._check_vector(u)
        self._check_vector(v)
        f = self.field
        out = [f.zero] * self.dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                ab = f.mul(a, b)
                out = [f.add(o, f.mul(ab, c)) for o, c in zip(out, self.sc[i][j])]
        return tuple(out)

    def format_vector(self, v: Sequence[Scalar]) -> str:
        terms = []
        for a, lab in zip(v, self.labels):
            if a == 0:
                continue
            text = self.field.format(a)
            terms.append(lab if text == "1" else f"{text}*{lab}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"LeibnizAlgebra({self.name or 'anonymous'}, dim={self.dim}, {self.field})"


@dataclass(frozen=True)
class AlgebraElement:
    algebra: LeibnizAlgebra
    coords: Vector

    @classmethod
    def of(cls, algebra: LeibnizAlgebra, coords: Sequence[Any]) -> "AlgebraElement":
        algebra._check_vector(coords)
        return cls(algebra, tuple(algebra.field.coerce(a) for a in coords))

    def _other(self, other: "AlgebraElement") -> Vector:
        if other.algebra != self.algebra:
            raise DimensionMismatchError("elements of different algebras")
        return other.coords

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.algebra, self.algebra.product(self.coords, self._other(other)))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        f = self.algebra.field
        return AlgebraElement(
            self.algebra, tuple(f.add(a, b) for a, b in zip(self.coords, self._other(other)))
        )

    def scaled(self, s: Any) -> "AlgebraElement":
        f = self.algebra.field
        s = f.coerce(s)
        return AlgebraElement(self.algebra, tuple(f.mul(s, a) for a in self.coords))

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __str__(self) -> str:
        return self.algebra.format_vector(self.coords)


ElementLike = Union[AlgebraElement, str, Sequence[Any]]


def _coords(alg: LeibnizAlgebra, x: ElementLike) -> Vector:
    if isinstance(x, str):
        return alg.basis_vector(x)
    if isinstance(x, AlgebraElement):
        if x.algebra != alg:
            raise DimensionMismatchError("element belongs to a different algebra")
        return x.coords
    return AlgebraElement.of(alg, x).coords


# -------------------------
# Identity validation
# -------------------------


def validate(alg: LeibnizAlgebra) -> ValidationResult:
    """Check the left Leibniz identity on every basis triple, in (i, j, l) order."""
    f = alg.field
    n = alg.dim
    left = alg.left_operators
    for i in range(n):
        li = left[i]
        for j in range(n):
            lj = left[j]
            bibj = alg.sc[i][j]
            for l in range(n):
                lhs = li.apply(alg.sc[j][l])
                first = alg.product(bibj, alg.basis_vector(l))
                second = lj.apply(alg.sc[i][l])
                rhs = tuple(f.add(a, b) for a, b in zip(first, second))
                if lhs != rhs:
                    witness = IdentityViolation(
                        i, j, l, (alg.labels[i], alg.labels[j], alg.labels[l]), lhs, rhs
                    )
                    return ValidationResult(False, witness)
    return ValidationResult(True)


# -------------------------
# Products and operators
# -------------------------


def multiply(alg: LeibnizAlgebra, x: ElementLike, y: ElementLike) -> AlgebraElement:
    return AlgebraElement(alg, alg.product(_coords(alg, x), _coords(alg, y)))


def _combine_operators(alg: LeibnizAlgebra, ops: Sequence[Matrix], x: Vector) -> Matrix:
    result = Matrix.zeros(alg.field, alg.dim, alg.dim)
    for a, op in zip(x, ops):
        if a != 0:
            result = result + op.scale(a)
    return result


def left_mult(alg: LeibnizAlgebra, x: ElementLike) -> Matrix:
    """L_x: y -> xy."""
    return _combine_operators(alg, alg.left_operators, _coords(alg, x))


def right_mult(alg: LeibnizAlgebra, x: ElementLike) -> Matrix:
    """R_x: y -> yx."""
    return _combine_operators(alg, alg.right_operators, _coords(alg, x))


def _common_kernel(alg: LeibnizAlgebra, ops: Sequence[Matrix]) -> Subspace:
    if alg.dim == 0:
        return alg.zero_space()
    rows = tuple(row for op in ops for row in op.rows)
    return kernel(Matrix(alg.field, len(rows), alg.dim, rows))


def left_center(alg: LeibnizAlgebra) -> Subspace:
    """{x : xL = 0}."""
    return _common_kernel(alg, alg.right_operators)


def center(alg: LeibnizAlgebra) -> Subspace:
    """{x : xL = Lx = 0}."""
    return _common_kernel(alg, alg.right_operators + alg.left_operators)
