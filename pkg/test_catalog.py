"""Catalog families, target parsing and the default grid."""

from fractions import Fraction

import pytest

from app.algebra import validate
from app.classify import (
    Family,
    FamilySpec,
    build,
    build_entry,
    default_grid,
    iter_grid,
    levi_data,
    parse_field,
    parse_target,
)
from app.errors import BadParamsError, CharacteristicClashError
from app.linalg import RATIONALS, FieldSpec

GF2 = FieldSpec.prime(2)
GF5 = FieldSpec.prime(5)


def test_parse_target_with_params_and_field():
    spec, field = parse_target("Family1a:c=2@GF(5)")
    assert spec.family is Family.FAMILY_1A
    assert spec.params["c"] == 2
    assert field == GF5


def test_parse_target_defaults_to_the_rationals():
    spec, field = parse_target("family4:a=1/2")
    assert spec.params["alpha"] == Fraction(1, 2)
    assert spec.params["beta"] == 1
    assert field == RATIONALS


@pytest.mark.parametrize("text, p", [("GF(5)", 5), ("gf7", 7), ("3", 3), ("GF 11", 11)])
def test_parse_field_accepts_prime_spellings(text, p):
    assert parse_field(text) == FieldSpec.prime(p)


def test_parse_field_rational_spellings():
    assert parse_field("Q") == RATIONALS
    assert parse_field("QQ") == RATIONALS


def test_family_names_are_case_insensitive():
    assert Family.parse("HEISENBERG") is Family.HEISENBERG
    with pytest.raises(BadParamsError):
        Family.parse("Family9")


@pytest.mark.parametrize(
    "name, params",
    [
        ("Family1a", {"c": 0}),
        ("CyclicNilpotent", {"n": 1}),
        ("Heisenberg", {"m": 0}),
        ("Family1a", {"d": 1}),
        ("Family1b", {"c": "one"}),
    ],
)
def test_bad_parameters_are_refused(name, params):
    with pytest.raises(BadParamsError):
        FamilySpec.of(name, **params)


def test_scalar_vanishing_mod_p_is_refused():
    with pytest.raises(BadParamsError):
        build(FamilySpec.of("Family1a", c=5), GF5)


def test_sl2_families_clash_with_characteristic_two():
    with pytest.raises(CharacteristicClashError):
        build(FamilySpec.of("Sl2Sum"), GF2)


def test_label_is_canonical():
    assert FamilySpec.of("Family4", b=2).label == "Family4:alpha=1,beta=2"
    assert FamilySpec.of("Thm17_NplusS").label == "Thm17_NplusS"


def test_levi_data_of_the_catalog(n_plus_s_entry, family1a):
    levi = n_plus_s_entry.levi
    assert levi.sl2_copies == 1
    assert not levi.direct
    assert levi.radical == n_plus_s_entry.algebra.span_labels("v1", "v2")
    solvable = levi_data(FamilySpec.of("Family1a"), family1a)
    assert solvable.radical.is_full and solvable.factor.is_zero


def test_sl2_sum_has_a_direct_levi_factor():
    entry = build_entry(FamilySpec.of("Sl2Sum", k=2))
    assert entry.algebra.dim == 6
    assert entry.levi.sl2_copies == 2
    assert entry.levi.radical.is_zero


def test_every_grid_entry_builds_over_q():
    entries = list(iter_grid())
    assert len(entries) == len(default_grid())
    assert all(validate(entry.algebra).ok for entry in entries)


@pytest.mark.parametrize("p", [5, 7])
def test_every_grid_entry_validates_mod_p(p):
    entries = list(iter_grid(FieldSpec.prime(p)))
    assert [e.spec for e in entries] == default_grid()
    assert all(validate(entry.algebra).ok for entry in entries)


def test_grid_over_gf2_skips_undefinable_entries():
    labels = {entry.spec.family for entry in iter_grid(GF2)}
    assert Family.SL2_SUM not in labels
    assert Family.THM17_N_PLUS_S not in labels
    assert Family.HEISENBERG in labels
