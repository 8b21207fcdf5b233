"""Leibniz kernel and the solvable radical (Killing criterion, characteristic 0)."""

from __future__ import annotations

import time

from ..algebra import (
    LeibnizAlgebra,
    derived_algebra,
    is_ideal,
    is_lie,
    quotient,
    subspace_is_solvable,
)
from ..errors import WrongCharacteristicError, ensure
from ..linalg import Matrix, Subspace, kernel
from ..utils.logging import get_logger, log_engine_run

logger = get_logger(__name__)


def require_char0(alg: LeibnizAlgebra, what: str) -> None:
    if not alg.field.is_rational:
        raise WrongCharacteristicError(
            f"{what} needs characteristic 0, got {alg.field}; use the brute-force engine",
            field=alg.field.label,
        )


def leib_kernel(alg: LeibnizAlgebra) -> Subspace:
    """Leib(L): span of b_i b_i and b_i b_j + b_j b_i."""
    f = alg.field
    n = alg.dim
    vectors = []
    for i in range(n):
        vectors.append(alg.sc[i][i])
        for j in range(i + 1, n):
            vectors.append(tuple(f.add(a, b) for a, b in zip(alg.sc[i][j], alg.sc[j][i])))
    leib = alg.span(vectors)
    ensure(is_ideal(alg, leib), "Leibniz kernel is not an ideal")
    ensure(is_lie(quotient(alg, leib).algebra), "L/Leib(L) is not antisymmetric")
    return leib


def killing_form(alg: LeibnizAlgebra) -> Matrix:
    """Gram matrix of tr(L_{b_i} L_{b_j})."""
    ops = alg.left_operators
    n = alg.dim
    return Matrix.from_rows(
        alg.field, [[(ops[i] @ ops[j]).trace() for j in range(n)] for i in range(n)], n
    )


def _orthogonal(form: Matrix, s: Subspace) -> Subspace:
    """{x : form(x, y) = 0 for every y in s}."""
    if s.is_zero:
        return Subspace.full(form.field, form.nrows)
    rows = tuple(form.apply(v) for v in s.vectors)
    return kernel(Matrix(form.field, len(rows), form.ncols, rows))


def _lie_radical(alg: LeibnizAlgebra) -> Subspace:
    leib = leib_kernel(alg)
    q = quotient(alg, leib)
    g = q.algebra
    rad_g = _orthogonal(killing_form(g), derived_algebra(g))
    return q.preimage(rad_g)


def radical(alg: LeibnizAlgebra) -> Subspace:
    """Largest solvable ideal, through the Killing form of L/Leib(L).

    Rad(g) is the orthogonal of [g, g]; Rad(L) is its preimage.
    """
    require_char0(alg, "radical")
    started = time.perf_counter()
    rad = _lie_radical(alg)
    ensure(is_ideal(alg, rad), "radical is not an ideal")
    ensure(subspace_is_solvable(alg, rad), "radical is not solvable")
    if not rad.is_full:
        top = quotient(alg, rad).algebra
        ensure(_lie_radical(top).is_zero, "L/Rad(L) has a nonzero radical")
    log_engine_run("char0", "radical", (time.perf_counter() - started) * 1000, dim=rad.dim)
    return rad
