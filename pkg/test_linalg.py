"""Exact linear algebra over Q and GF(p).

Test categories:
  - property_based: hypothesis-generated matrices and subspaces
  - negative: refusals (bad primes, malformed scalars, budgets)
  - unit: known input/output pairs
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.errors import (
    BadParamsError,
    BudgetExceededError,
    NonCommutingError,
    NotInvariantError,
    NotReducibleError,
    ParseError,
    WrongCharacteristicError,
)
from app.lattice import LatticeBudget, enumerate_subspaces, gaussian_binomial, subspace_count
from app.linalg import (
    RATIONALS,
    FieldSpec,
    Matrix,
    Subspace,
    annihilator,
    char_poly,
    evaluate_polynomial_at,
    fitting_decomposition,
    image,
    is_nilpotent_operator,
    kernel,
    polynomial_roots,
    rational_eigenvalues,
    restrict_operator,
    rref,
    simultaneous_weight_spaces,
)

GF2 = FieldSpec.prime(2)
GF5 = FieldSpec.prime(5)
FIELDS = st.sampled_from([RATIONALS, GF2, FieldSpec.prime(3), GF5, FieldSpec.prime(7)])


def matrices(n_rows, n_cols, lo=-3, hi=3):
    return st.lists(
        st.lists(st.integers(lo, hi), min_size=n_cols, max_size=n_cols),
        min_size=n_rows,
        max_size=n_rows,
    )


def square_matrices(max_n=4):
    return st.integers(1, max_n).flatmap(lambda n: matrices(n, n))


# -------------------------
# Fields
# -------------------------


def test_scalar_parsing_is_exact():
    assert RATIONALS.parse("3/6") == Fraction(1, 2)
    assert RATIONALS.parse("-2") == Fraction(-2)
    assert GF5.parse("7") == 2
    assert GF5.parse("1/2") == 3


@pytest.mark.parametrize("text", ["1/0", "1.5", "x", "--1", ""])
def test_malformed_scalars_are_refused(text):
    with pytest.raises(ParseError):
        RATIONALS.parse(text)


def test_non_prime_characteristic_is_refused():
    with pytest.raises(BadParamsError):
        FieldSpec.prime(4)


def test_reduction_refuses_denominators_divisible_by_p():
    with pytest.raises(NotReducibleError):
        GF5.coerce(Fraction(1, 5))


def test_lift_is_centred():
    assert GF5.lift(4) == -1
    assert GF5.lift(2) == 2


# -------------------------
# Elimination and subspaces
# -------------------------


def test_rref_over_gf2():
    m = Matrix.from_rows(GF2, [[1, 1], [1, 2]])
    assert rref(m) == Matrix.identity(GF2, 2)


def test_spans_are_canonical():
    a = Subspace.span(RATIONALS, 3, [(1, 2, 0), (0, 1, 1)])
    b = Subspace.span(RATIONALS, 3, [(1, 3, 1), (2, 4, 0)])
    assert a == b
    assert hash(a) == hash(b)


def test_zassenhaus_intersection():
    u = Subspace.span(RATIONALS, 3, [(1, 0, 0), (0, 1, 0)])
    v = Subspace.span(RATIONALS, 3, [(0, 1, 0), (0, 0, 1)])
    assert (u & v) == Subspace.span(RATIONALS, 3, [(0, 1, 0)])
    assert (u + v).is_full


@pytest.mark.slow
@pytest.mark.property_based
@given(FIELDS, matrices(2, 4), matrices(2, 4))
@settings(max_examples=1000, deadline=None)
def test_dimension_formula(field, rows_u, rows_v):
    """dim(U + V) + dim(U ∩ V) = dim U + dim V."""
    u = Subspace.span(field, 4, rows_u)
    v = Subspace.span(field, 4, rows_v)
    assert (u + v).dim + (u & v).dim == u.dim + v.dim
    assert (u & v) <= u and (u & v) <= v


@pytest.mark.slow
@pytest.mark.property_based
@given(FIELDS, matrices(3, 4))
@settings(max_examples=1000, deadline=None)
def test_rank_nullity(field, rows):
    m = Matrix.from_rows(field, rows)
    assert kernel(m).dim + image(m).dim == m.ncols
    assert all(a == 0 for v in kernel(m).vectors for a in m.apply(v))


@pytest.mark.property_based
@given(matrices(2, 3))
@settings(max_examples=60, deadline=None)
def test_annihilator_has_complementary_dimension(rows):
    s = Subspace.span(RATIONALS, 3, rows)
    ann = annihilator(s)
    assert ann.dim == 3 - s.dim
    assert all(RATIONALS.dot(f, v) == 0 for f in ann.vectors for v in s.vectors)


def test_over_reduces_a_rational_basis():
    s = Subspace.span(RATIONALS, 2, [(1, 5)])
    assert s.over(GF5) == Subspace.span(GF5, 2, [(1, 0)])


# -------------------------
# Spectral tools
# -------------------------


def test_char_poly_of_diagonal():
    assert char_poly(Matrix.diagonal(RATIONALS, [1, 2])) == (1, -3, 2)


def test_quarter_turn_splits_mod_5_only():
    rows = [[0, -1], [1, 0]]
    assert not rational_eigenvalues(Matrix.from_rows(RATIONALS, rows)).split
    spectrum = rational_eigenvalues(Matrix.from_rows(GF5, rows))
    assert spectrum.split
    assert spectrum.values == (2, 3)


def test_roots_over_a_large_prime():
    big = FieldSpec.prime(1_000_003)
    roots, split = polynomial_roots(big, (1, big.coerce(-3), 2))
    assert roots == {1: 1, 2: 1}
    assert split


@pytest.mark.slow
@pytest.mark.property_based
@given(FIELDS, square_matrices())
@settings(max_examples=1000, deadline=None)
def test_cayley_hamilton(field, rows):
    m = Matrix.from_rows(field, rows)
    coeffs = char_poly(m)
    assert len(coeffs) == m.nrows + 1
    assert coeffs[0] == 1
    assert evaluate_polynomial_at(coeffs, m).is_zero()


@pytest.mark.slow
@pytest.mark.property_based
@given(FIELDS, square_matrices())
@settings(max_examples=1000, deadline=None)
def test_fitting_components_are_complementary(field, rows):
    m = Matrix.from_rows(field, rows)
    fit = fitting_decomposition(m)
    assert (fit.null + fit.one).is_full
    assert (fit.null & fit.one).is_zero
    assert fit.null.is_invariant_under(m) and fit.one.is_invariant_under(m)
    if not fit.null.is_zero:
        assert is_nilpotent_operator(restrict_operator(m, fit.null))


def test_evaluating_a_polynomial_at_a_matrix():
    m = Matrix.from_rows(RATIONALS, [[1, 1], [0, 1]])
    assert evaluate_polynomial_at((1, -1), m) == Matrix.from_rows(RATIONALS, [[0, 1], [0, 0]])
    assert evaluate_polynomial_at((1, -2, 1), m).is_zero()


def test_fitting_decomposition_of_a_jordan_block_plus_unit():
    m = Matrix.from_rows(RATIONALS, [[0, 1, 0], [0, 0, 0], [0, 0, 1]])
    fit = fitting_decomposition(m)
    assert fit.null == Subspace.span(RATIONALS, 3, [(1, 0, 0), (0, 1, 0)])
    assert fit.one == Subspace.span(RATIONALS, 3, [(0, 0, 1)])


def test_restriction_requires_invariance():
    m = Matrix.from_rows(RATIONALS, [[0, 1], [0, 0]])
    with pytest.raises(NotInvariantError):
        restrict_operator(m, Subspace.span(RATIONALS, 2, [(0, 1)]))


def test_weight_spaces_of_commuting_diagonals():
    a = Matrix.diagonal(RATIONALS, [1, 1, 2])
    b = Matrix.diagonal(RATIONALS, [0, 3, 0])
    decomposition = simultaneous_weight_spaces([a, b])
    assert decomposition.split
    assert sorted(w.space.dim for w in decomposition.weights) == [1, 1, 1]


def test_weight_spaces_refuse_non_commuting_operators():
    a = Matrix.from_rows(RATIONALS, [[0, 1], [0, 0]])
    b = Matrix.from_rows(RATIONALS, [[0, 0], [1, 0]])
    with pytest.raises(NonCommutingError):
        simultaneous_weight_spaces([a, b])


# -------------------------
# Enumeration over GF(p)
# -------------------------


@pytest.mark.parametrize(
    "n, q, expected",
    [(2, 2, 5), (3, 2, 16), (3, 3, 28), (4, 2, 67), (5, 5, 42176)],
)
def test_subspace_counts(n, q, expected):
    assert subspace_count(n, q) == expected


def test_gaussian_binomial_out_of_range():
    assert gaussian_binomial(3, 4, 2) == 0


def test_enumeration_is_exhaustive_and_duplicate_free():
    spaces = list(enumerate_subspaces(GF2, 3))
    assert len(spaces) == 16
    assert len(set(spaces)) == 16


def test_enumeration_respects_the_budget():
    with pytest.raises(BudgetExceededError):
        list(enumerate_subspaces(GF2, 3, LatticeBudget(max_subspaces=10)))


def test_enumeration_needs_a_prime_field():
    with pytest.raises(WrongCharacteristicError):
        list(enumerate_subspaces(RATIONALS, 2))
