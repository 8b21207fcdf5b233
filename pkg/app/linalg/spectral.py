"""Characteristic polynomials and spectral decompositions over Q and GF(p).

Polynomials are coefficient tuples, highest degree first and monic:
t^3 - 2t^2 + t is ``(1, -2, 1, 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from sympy import Poly, divisors, symbols

from ..errors import DimensionMismatchError, NonCommutingError, NotInvariantError
from .field import FieldSpec, Scalar
from .matrix import Matrix
from .subspace import Subspace, image, kernel

_EXHAUSTIVE_SCAN_LIMIT = 100_003


@dataclass(frozen=True)
class FittingDecomposition:
    null: Subspace
    one: Subspace


@dataclass(frozen=True)
class Eigenpair:
    value: Scalar
    space: Subspace
    multiplicity: int


@dataclass(frozen=True)
class Spectrum:
    eigenpairs: tuple[Eigenpair, ...]
    split: bool

    @property
    def values(self) -> tuple[Scalar, ...]:
        return tuple(e.value for e in self.eigenpairs)

    def space_of(self, value: Scalar) -> Subspace:
        for e in self.eigenpairs:
            if e.value == value:
                return e.space
        raise KeyError(value)


@dataclass(frozen=True)
class WeightSpace:
    weight: tuple[Scalar, ...]
    space: Subspace


@dataclass(frozen=True)
class WeightDecomposition:
    weights: tuple[WeightSpace, ...]
    split: bool
    nonsplit: Subspace


# -------------------------
# Characteristic polynomial
# -------------------------


def _hessenberg(m: Matrix) -> list[list[Scalar]]:
    f = m.field
    n = m.nrows
    h = [list(r) for r in m.rows]
    for col in range(n - 2):
        k = col + 1
        i = next((r for r in range(k, n) if h[r][col] != 0), None)
        if i is None:
            continue
        if i != k:
            h[i], h[k] = h[k], h[i]
            for row in h:
                row[i], row[k] = row[k], row[i]
        t = h[k][col]
        for r in range(k + 1, n):
            if h[r][col] == 0:
                continue
            u = f.div(h[r][col], t)
            h[r] = [f.sub(a, f.mul(u, b)) for a, b in zip(h[r], h[k])]
            for row in h:
                row[k] = f.add(row[k], f.mul(u, row[r]))
    return h


def _times_linear(f: FieldSpec, p: list[Scalar], a: Scalar) -> list[Scalar]:
    """(X - a) * p, ascending coefficients."""
    out = [f.zero] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i + 1] = f.add(out[i + 1], c)
        out[i] = f.sub(out[i], f.mul(a, c))
    return out


def char_poly(m: Matrix) -> tuple[Scalar, ...]:
    """Monic characteristic polynomial by Hessenberg reduction, exact."""
    n = m.require_square()
    f = m.field
    h = _hessenberg(m)
    polys: list[list[Scalar]] = [[f.one]]
    for k in range(1, n + 1):
        p = _times_linear(f, polys[k - 1], h[k - 1][k - 1])
        prod = f.one
        for i in range(k - 1, 0, -1):
            prod = f.mul(prod, h[i][i - 1])
            coeff = f.mul(h[i - 1][k - 1], prod)
            if coeff == 0:
                continue
            for d, c in enumerate(polys[i - 1]):
                p[d] = f.sub(p[d], f.mul(coeff, c))
        polys.append(p)
    return tuple(reversed(polys[n]))


def evaluate_polynomial_at(coeffs: Sequence[Scalar], m: Matrix) -> Matrix:
    """Horner evaluation of a descending coefficient tuple at a square matrix."""
    n = m.require_square()
    eye = Matrix.identity(m.field, n)
    result = Matrix.zeros(m.field, n, n)
    for c in coeffs:
        result = result @ m + eye.scale(c)
    return result


def is_nilpotent_operator(m: Matrix) -> bool:
    n = m.require_square()
    return m.power(n).is_zero()


def fitting_decomposition(m: Matrix) -> FittingDecomposition:
    n = m.require_square()
    mn = m.power(n)
    return FittingDecomposition(null=kernel(mn), one=image(mn))


def restrict_operator(m: Matrix, s: Subspace) -> Matrix:
    """Matrix of ``m`` on the invariant subspace ``s`` in the RREF basis of ``s``."""
    m.require_square()
    if s.ambient_dim != m.nrows or s.field != m.field:
        raise DimensionMismatchError("subspace does not live in the operator's space")
    columns = []
    for v in s.vectors:
        w = m.apply(v)
        if not s.contains_vector(w):
            raise NotInvariantError("subspace is not invariant under the operator")
        columns.append(s.coordinates(w))
    return Matrix.from_columns(m.field, columns, s.dim)


# -------------------------
# Roots in the ground field
# -------------------------


def _divide_linear(f: FieldSpec, coeffs: list[Scalar], r: Scalar) -> tuple[list[Scalar], Scalar]:
    """Synthetic division of a descending polynomial by (t - r)."""
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(f.add(c, f.mul(r, out[-1])))
    return out[:-1], out[-1]


def _multiplicity(f: FieldSpec, coeffs: list[Scalar], r: Scalar) -> tuple[int, list[Scalar]]:
    count = 0
    while len(coeffs) > 1:
        quotient, rem = _divide_linear(f, coeffs, r)
        if rem != 0:
            break
        coeffs = quotient
        count += 1
    return count, coeffs


def _rational_candidates(coeffs: list[Fraction]) -> list[Fraction]:
    scale = lcm(*(Fraction(c).denominator for c in coeffs))
    ints = [int(Fraction(c) * scale) for c in coeffs]
    lead, trail = abs(ints[0]), abs(ints[-1])
    found = set()
    for num in divisors(trail):
        for den in divisors(lead):
            found.add(Fraction(num, den))
            found.add(Fraction(-num, den))
    return sorted(found)


def _large_prime_candidates(f: FieldSpec, coeffs: list[Scalar]) -> list[Scalar]:
    t = symbols("t")
    poly = Poly([int(c) for c in coeffs], t, modulus=f.characteristic)
    roots = []
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            roots.append(f.neg(f.div(f.coerce(int(b)), f.coerce(int(a)))))
    return sorted(set(roots))


def polynomial_roots(f: FieldSpec, coeffs: Sequence[Scalar]) -> tuple[dict[Scalar, int], bool]:
    """Roots lying in the ground field with multiplicities, and the split flag."""
    work = list(coeffs)
    degree = len(work) - 1
    roots: dict[Scalar, int] = {}
    zeros = 0
    while len(work) > 1 and work[-1] == 0:
        work.pop()
        zeros += 1
    if zeros:
        roots[f.zero] = zeros
    if len(work) > 1:
        if f.is_rational:
            candidates = _rational_candidates(work)
        elif f.characteristic <= _EXHAUSTIVE_SCAN_LIMIT:
            candidates = list(range(1, f.characteristic))
        else:
            candidates = _large_prime_candidates(f, work)
        for r in candidates:
            if len(work) == 1:
                break
            count, work = _multiplicity(f, work, r)
            if count:
                roots[r] = count
    return roots, sum(roots.values()) == degree


def rational_eigenvalues(m: Matrix) -> Spectrum:
    """Eigenvalues of ``m`` in the ground field with their eigenspaces."""
    n = m.require_square()
    roots, split = polynomial_roots(m.field, char_poly(m))
    pairs = tuple(
        Eigenpair(value=r, space=kernel(m.shift(r)), multiplicity=mult)
        for r, mult in sorted(roots.items())
    )
    return Spectrum(eigenpairs=pairs, split=split and n == sum(e.multiplicity for e in pairs))


# -------------------------
# Commuting families
# -------------------------


def _embed(s: Subspace, coords: Subspace) -> Subspace:
    return Subspace.span(s.field, s.ambient_dim, [s.combine(c) for c in coords.vectors])


def simultaneous_weight_spaces(ops: Sequence[Matrix]) -> WeightDecomposition:
    """Joint generalized eigenspaces of pairwise-commuting operators."""
    if not ops:
        raise DimensionMismatchError("at least one operator is required")
    n = ops[0].require_square()
    field = ops[0].field
    for op in ops:
        if op.require_square() != n or op.field != field:
            raise DimensionMismatchError("operators must share size and field")
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            if not ops[i].commutator(ops[j]).is_zero():
                raise NonCommutingError(f"operators {i} and {j} do not commute", pair=(i, j))

    spaces: list[tuple[tuple[Scalar, ...], Subspace]] = [((), Subspace.full(field, n))]
    nonsplit = Subspace.zero(field, n)
    for op in ops:
        refined = []
        for weight, space in spaces:
            local = restrict_operator(op, space)
            d = space.dim
            spectrum = rational_eigenvalues(local)
            remainder = Matrix.identity(field, d)
            for pair in spectrum.eigenpairs:
                shifted = local.shift(pair.value).power(d)
                refined.append((weight + (pair.value,), _embed(space, kernel(shifted))))
                remainder = remainder @ shifted
            if not spectrum.split:
                nonsplit = nonsplit + _embed(space, image(remainder))
        spaces = refined
    return WeightDecomposition(
        weights=tuple(WeightSpace(w, s) for w, s in spaces),
        split=nonsplit.is_zero,
        nonsplit=nonsplit,
    )
