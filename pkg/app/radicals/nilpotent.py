"""Nilradical and Asoc.

Over Q the nilradical comes from the trace form of the left multiplications
and Asoc from the socle of L as a module over its multiplication algebra;
over GF(p) both come from the lattice engine.
"""

from __future__ import annotations

import time
from typing import Optional

from ..algebra import (
    LeibnizAlgebra,
    derived_algebra,
    is_ideal,
    is_solvable,
    product_space,
    restrict,
    subspace_is_nilpotent,
)
from ..errors import NonSplitError, ensure
from ..lattice import LatticeBudget, LatticeEngine
from ..linalg import Matrix, Subspace, kernel, rational_eigenvalues
from ..utils.logging import get_logger, log_engine_run
from .kernels import killing_form, radical, require_char0

logger = get_logger(__name__)


def _require_split_left_operators(alg: LeibnizAlgebra) -> None:
    for label, op in zip(alg.labels, alg.left_operators):
        if not rational_eigenvalues(op).split:
            logger.warning(f"L_{label} has eigenvalues outside {alg.field}")
            raise NonSplitError(
                f"characteristic polynomial of L_{label} does not split over {alg.field}",
                operator=op,
                label=f"L_{label}",
            )


def _solvable_nilradical(alg: LeibnizAlgebra) -> Subspace:
    # With every L_{b_j} split, the weights of the left action are rational,
    # so the common kernel of the weights is the radical of tr(L_x L_y).
    _require_split_left_operators(alg)
    form = killing_form(alg)
    nil = kernel(form) if alg.dim else alg.zero_space()
    ensure(nil.contains(derived_algebra(alg)), "Nil(L) does not contain L^2")
    return nil


def nilradical(alg: LeibnizAlgebra, budget: Optional[LatticeBudget] = None) -> Subspace:
    """Largest nilpotent ideal."""
    if alg.field.is_prime_field:
        return LatticeEngine(alg, budget).nil
    started = time.perf_counter()
    if is_solvable(alg):
        nil = _solvable_nilradical(alg)
    else:
        # any nilpotent ideal of L lies in R, so Nil(L) = Nil(R)
        rad = radical(alg)
        inner = _solvable_nilradical(restrict(alg, rad))
        nil = alg.span([rad.combine(c) for c in inner.vectors])
    ensure(is_ideal(alg, nil), "nilradical is not an ideal")
    ensure(subspace_is_nilpotent(alg, nil), "nilradical is not nilpotent")
    log_engine_run("char0", "nilradical", (time.perf_counter() - started) * 1000, dim=nil.dim)
    return nil



# -------------------------
# Socle and Asoc
# -------------------------


def _flatten(m: Matrix) -> tuple:
    return tuple(x for row in m.rows for x in row)


def enveloping_basis(alg: LeibnizAlgebra) -> list[Matrix]:
    """Basis of the associative algebra spanned by the identity and all words in L_x, R_x."""
    f, n = alg.field, alg.dim
    gens = [op for op in alg.left_operators + alg.right_operators if not op.is_zero()]
    identity = Matrix.identity(f, n)
    basis = [identity]
    seen = Subspace.span(f, n * n, [_flatten(identity)])
    frontier = [identity]
    while frontier:
        grown = []
        for m in frontier:
            for g in gens:
                word = g @ m
                flat = _flatten(word)
                if not seen.contains_vector(flat):
                    seen = seen + Subspace.span(f, n * n, [flat])
                    grown.append(word)
        basis.extend(grown)
        frontier = grown
    return basis


def socle(alg: LeibnizAlgebra) -> Subspace:
    """Sum of all minimal ideals.

    Ideals are exactly the submodules of L under the enveloping algebra A, so
    the socle is the common kernel of the Jacobson radical of A. In
    characteristic 0 that radical is the null space of the trace form
    tr(ab) on A.
    """
    require_char0(alg, "socle")
    f, n = alg.field, alg.dim
    if not n:
        return alg.zero_space()
    basis = enveloping_basis(alg)
    k = len(basis)
    gram = Matrix.from_rows(f, [[(a @ b).trace() for b in basis] for a in basis], k)
    rows: list[tuple] = []
    for coeffs in kernel(gram).vectors:
        element = Matrix.zeros(f, n, n)
        for c, b in zip(coeffs, basis):
            if c != 0:
                element = element + b.scale(c)
        rows.extend(element.rows)
    if not rows:
        return alg.full_space()
    soc = kernel(Matrix(f, len(rows), n, tuple(rows)))
    ensure(not soc.is_zero, "a nonzero algebra has a zero socle")
    return soc


def asoc(alg: LeibnizAlgebra, budget: Optional[LatticeBudget] = None) -> Subspace:
    """Sum of all minimal abelian ideals."""
    if alg.field.is_prime_field:
        return LatticeEngine(alg, budget).asoc
    if not alg.dim:
        return alg.zero_space()
    started = time.perf_counter()
    soc = socle(alg)
    # minimal ideals inside Rad(L) are solvable, hence abelian; the others are perfect
    space = soc if is_solvable(alg) else soc & radical(alg)
    ensure(is_ideal(alg, space), "Asoc(L) is not an ideal")
    ensure(product_space(alg, space, space).is_zero, "Asoc(L) is not abelian")
    log_engine_run("char0", "asoc", (time.perf_counter() - started) * 1000, dim=space.dim)
    return space
