"""Characteristic-0 radicals: Leib, Rad, Nil, Asoc, J(L) and the Φ characterizations."""

import pytest

from app.algebra import LeibnizAlgebra, is_solvable, is_subalgebra
from app.claims import ClaimStatus
from app.classify import FamilySpec, build, build_entry, default_grid
from app.errors import (
    HypothesisViolatedError,
    InvariantViolationError,
    NonSplitError,
    UndecidableError,
    WrongCharacteristicError,
)
from app.lattice import LatticeEngine
from app.linalg import RATIONALS, FieldSpec
from app.radicals import (
    LeviData,
    asoc,
    frattini_char0,
    jacobson_char0,
    jacobson_characterized,
    killing_form,
    leib_kernel,
    nilradical,
    radical,
    radical_report,
    socle,
    subalgebra_complement,
    verify_section4,
)

GF5 = FieldSpec.prime(5)


def test_leibniz_kernel(family1a, sl2_entry):
    assert leib_kernel(family1a) == family1a.span_labels("y", "z")
    assert leib_kernel(sl2_entry.algebra).is_zero


def test_killing_form_is_symmetric(family1a):
    form = killing_form(family1a)
    assert form == form.transpose()
    assert form[0, 0] == 2


def test_radicals(family1a, sl2_entry, n_plus_s_entry):
    assert radical(family1a).is_full
    assert radical(sl2_entry.algebra).is_zero
    n_plus_s = n_plus_s_entry.algebra
    assert radical(n_plus_s) == n_plus_s.span_labels("v1", "v2")


def test_radical_needs_characteristic_zero():
    with pytest.raises(WrongCharacteristicError):
        radical(build(FamilySpec.of("Family1a"), GF5))


def test_nilradicals(family1a, n_plus_s_entry):
    assert nilradical(family1a) == family1a.span_labels("y", "z")
    n_plus_s = n_plus_s_entry.algebra
    assert nilradical(n_plus_s) == n_plus_s.span_labels("v1", "v2")


def test_nilradical_refuses_a_non_split_spectrum(rotation):
    with pytest.raises(NonSplitError) as info:
        nilradical(rotation)
    payload = info.value.to_dict()
    assert payload["type"] == "non_split"
    assert payload["operator"] == [["0", "0", "0"], ["0", "0", "-1"], ["0", "1", "0"]]


def test_asoc(family1a, heisenberg):
    assert asoc(family1a) == family1a.span_labels("z")
    assert asoc(heisenberg) == heisenberg.span_labels("z")


def test_asoc_of_a_non_solvable_algebra_lies_in_the_radical(n_plus_s_entry):
    alg = n_plus_s_entry.algebra
    assert asoc(alg) == alg.span_labels("v1", "v2")
    assert socle(alg).contains(asoc(alg))


@pytest.mark.parametrize("table", ["left_rotation", "rotation"])
def test_asoc_finds_irreducible_planes(request, table):
    alg = request.getfixturevalue(table)
    assert asoc(alg) == alg.span_labels("u", "v")
    modular = LatticeEngine(alg.reduced_mod(3))
    assert modular.asoc.dim == 2


def test_socle_of_an_abelian_algebra_is_everything():
    alg = LeibnizAlgebra.abelian(RATIONALS, ["a", "b"])
    assert socle(alg).is_full
    assert asoc(alg).is_full


def test_socle_skips_non_semisimple_layers(family1a, heisenberg):
    assert socle(family1a) == family1a.span_labels("z")
    assert socle(heisenberg) == heisenberg.span_labels("z")


def test_jacobson(family1a, n_plus_s_entry):
    jac = jacobson_characterized(family1a)
    assert jac.space == family1a.span_labels("y", "z")
    assert "solvable" in jac.method
    n_plus_s = n_plus_s_entry.algebra
    assert jacobson_char0(n_plus_s) == n_plus_s.span_labels("v1", "v2")


def test_frattini_characterizations(heisenberg, sl2_entry):
    assert frattini_char0(heisenberg).space == heisenberg.span_labels("z")
    assert frattini_char0(sl2_entry.algebra).space.is_zero
    phi_free = build(FamilySpec.of("Thm17_XsquareZero"))
    assert frattini_char0(phi_free).space.is_zero


def test_frattini_of_a_direct_levi_sum_comes_from_the_radical():
    entry = build_entry(FamilySpec.of("EAlgebraWitness", n=3))
    found = frattini_char0(entry.algebra, entry.levi)
    assert found.space == entry.algebra.span_labels("a2", "a3")
    assert "direct Levi sum" in found.method


@pytest.mark.parametrize("name", ["Family1a", "Thm17_XsquareNonzero"])
def test_frattini_is_undecidable_without_a_characterization(name):
    with pytest.raises(UndecidableError):
        frattini_char0(build(FamilySpec.of(name)))


def test_levi_data_is_checked(n_plus_s_entry):
    alg = n_plus_s_entry.algebra
    bogus = LeviData(alg.span_labels("v1"), alg.span_labels("e", "f", "h", "v2"), 1)
    with pytest.raises(InvariantViolationError):
        bogus.check(alg)


def test_radical_report_engines(family1a):
    rational = radical_report(family1a)
    assert rational.engine.value == "char0"
    assert rational.asoc == family1a.span_labels("z")
    modular = radical_report(build(FamilySpec.of("Family1a"), GF5))
    assert modular.engine.value == "brute"
    assert modular.jac == modular.nil


def test_containments_hold_on_family1a(family1a):
    claims = verify_section4(family1a)
    assert {c.theorem for c in claims} >= {"thm8", "prop9", "lemma10", "prop11", "cor12", "cor13", "prop14"}
    assert not [c for c in claims if c.status is ClaimStatus.FAIL]


def test_containments_over_a_prime_field_never_fail():
    claims = verify_section4(build(FamilySpec.of("Heisenberg"), FieldSpec.prime(3)))
    assert claims
    assert all(c.engine == "brute" for c in claims)
    assert not [c for c in claims if c.status is ClaimStatus.FAIL]


@pytest.mark.slow
@pytest.mark.parametrize("spec", default_grid(), ids=lambda s: s.label)
def test_containments_hold_on_every_catalog_instance(spec):
    entry = build_entry(spec)
    claims = verify_section4(entry.algebra, entry.levi)
    assert {c.theorem for c in claims} >= {"thm8", "prop9", "prop11", "cor12", "cor13"}
    assert not [c for c in claims if c.status is ClaimStatus.FAIL]
    if is_solvable(entry.algebra):
        [lemma10] = [c for c in claims if c.claim == "J(L) = L^2"]
        assert lemma10.passed


@pytest.fixture
def skewed_line_action():
    """x acting on <y> with xy = y, written in the basis a = x + y, b = y."""
    return LeibnizAlgebra.from_products(
        RATIONALS, ["a", "b"], {("a", "a"): {"b": 1}, ("a", "b"): {"b": 1}}, name="skewed"
    )


def test_complement_is_solved_for_not_guessed(skewed_line_action):
    alg = skewed_line_action
    square = alg.span_labels("b")
    assert not is_subalgebra(alg, alg.span_labels("a"))
    assert subalgebra_complement(alg, square) == alg.span([(1, -1)])
    found = frattini_char0(alg)
    assert found.space.is_zero
    assert "Φ-free" in found.method
    assert LatticeEngine(alg.reduced_mod(5)).phi.is_zero


def test_heisenberg_centre_has_no_subalgebra_complement(heisenberg):
    assert subalgebra_complement(heisenberg, heisenberg.span_labels("z")) is None


def test_complement_needs_an_abelian_overspace_of_the_square(family1a):
    with pytest.raises(HypothesisViolatedError):
        subalgebra_complement(family1a, family1a.span_labels("z"))
