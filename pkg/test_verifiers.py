"""Theorem verifiers and the concurrent verification runner."""

import asyncio

import pytest

from app.algebra import LeibnizAlgebra, derived_algebra, direct_sum, is_solvable, is_subalgebra
from app.claims import ClaimStatus
from app.classify import (
    Family,
    FamilySpec,
    build,
    build_entry,
    cross_engine_check,
    levi_data,
    verify_cor5,
    verify_e_algebra,
    verify_frattini_criterion,
    verify_lemma3,
    verify_lemmas_15_16_18,
    verify_nilpotent_frattini,
    verify_thm6,
    verify_thm17,
)
from app.errors import (
    BadParamsError,
    HypothesisViolatedError,
    UndecidableError,
    WrongCharacteristicError,
)
from app.lattice import LatticeEngine
from app.linalg import RATIONALS, FieldSpec
from app.services.verification import (
    VerificationTarget,
    count_statuses,
    known_theorems,
    resolve_target,
    run_verification,
    verification_response,
)

GF2 = FieldSpec.prime(2)
GF3 = FieldSpec.prime(3)
GF5 = FieldSpec.prime(5)


def statuses(claims):
    return {c.status for c in claims}


# -------------------------
# Minimal non-elementary families
# -------------------------


def test_family1a_is_minimal_non_elementary_mod_5():
    verdict = verify_thm6(FamilySpec.of("Family1a"), 5)
    assert verdict.minimal_non_elementary
    assert verdict.phi.dim == 1
    assert ClaimStatus.FAIL not in statuses(verdict.claims)
    assert {c.theorem for c in verdict.claims} == {"thm6"}


def test_cyclic_family_keeps_proper_subalgebras_in_the_square():
    verdict = verify_thm6(FamilySpec.of("CyclicNilpotent", n=3), 3)
    assert verdict.minimal_non_elementary
    assert all(c.status is ClaimStatus.PASS for c in verdict.claims)


def _thm6_grid():
    for p in (3, 5, 7):
        marks = [pytest.mark.slow] if p == 7 else []
        for family in ("Family1a", "Family1b"):
            for c in ("1", "2", "-1", "1/2"):
                yield pytest.param(FamilySpec.of(family, c=c), p, marks=marks)
        yield pytest.param(FamilySpec.of("Heisenberg", m=1), p, marks=marks)
        for n in (2, 3, 4):
            yield pytest.param(FamilySpec.of("CyclicNilpotent", n=n), p, marks=marks)


@pytest.mark.parametrize("spec, p", list(_thm6_grid()), ids=str)
def test_thm6_families_are_minimal_non_elementary(spec, p):
    verdict = verify_thm6(spec, p)
    alg = build(spec, FieldSpec.prime(p))
    assert verdict.minimal_non_elementary
    if spec.family in (Family.FAMILY_1A, Family.FAMILY_1B):
        assert verdict.phi == alg.span_labels("z")
    else:
        assert verdict.phi == derived_algebra(alg)
    assert statuses(verdict.claims) == {ClaimStatus.PASS}


@pytest.mark.slow
@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("alpha, beta", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_family4_has_a_non_elementary_proper_subalgebra(alpha, beta, p):
    spec = FamilySpec.of("Family4", alpha=alpha, beta=beta)
    alg = build(spec, FieldSpec.prime(p))
    # beta*a - alpha*b acts by zero on the left of <x, y>, leaving a nilpotent subalgebra
    nilpotent_part = alg.span([(beta, -alpha, 0, 0), alg.basis_vector("x"), alg.basis_vector("y")])
    assert is_subalgebra(alg, nilpotent_part)
    assert LatticeEngine(alg).phi_of(nilpotent_part) == alg.span_labels("y")

    verdict = verify_thm6(spec, p)
    assert not verdict.minimal_non_elementary
    [headline] = [c for c in verdict.claims if c.claim == "L is minimal non-elementary"]
    assert headline.status is ClaimStatus.FINDING
    assert ClaimStatus.FAIL not in statuses(verdict.claims)


def test_thm6_refuses_other_families():
    with pytest.raises(BadParamsError):
        verify_thm6(FamilySpec.of("Sl2Sum"), 5)


def test_criterion_needs_a_prime_field(family1a):
    with pytest.raises(WrongCharacteristicError):
        verify_frattini_criterion(family1a)


def test_criterion_needs_a_nilpotent_square():
    with pytest.raises(HypothesisViolatedError) as info:
        verify_frattini_criterion(build(FamilySpec.of("Sl2Sum"), GF5))
    assert info.value.hypothesis == "L^2 is nilpotent"


# -------------------------
# E-algebras
# -------------------------


def test_sum_of_sl2_copies_is_an_e_algebra(sl2_entry):
    [claim] = verify_e_algebra(sl2_entry.algebra, sl2_entry.levi)
    assert claim.theorem == "thm4"
    assert claim.status is ClaimStatus.PASS


def test_solvable_algebras_are_e_algebras(family1a):
    [claim] = verify_e_algebra(family1a)
    assert claim.theorem == "prop2"
    assert claim.engine == "definitional"


def test_non_solvable_without_levi_data_is_undecidable(n_plus_s_entry):
    with pytest.raises(UndecidableError):
        verify_e_algebra(n_plus_s_entry.algebra)


def test_direct_levi_sum_has_no_mixed_products():
    entry = build_entry(FamilySpec.of("EAlgebraWitness", n=3))
    [claim] = verify_e_algebra(entry.algebra, entry.levi)
    assert claim.status is ClaimStatus.PASS
    assert claim.detail == "RS + SR = 0"


def test_e_algebra_equivalence_by_enumeration():
    claims = verify_e_algebra(build(FamilySpec.of("Family1a"), GF3))
    assert [c.theorem for c in claims] == ["thm1", "prop2"]
    assert all(c.status is ClaimStatus.PASS for c in claims)


def test_direct_sum_of_elementary_lines():
    a = LeibnizAlgebra.abelian(GF2, ["a"])
    b = LeibnizAlgebra.abelian(GF2, ["b"])
    [claim] = verify_lemma3(a, b)
    assert claim.status is ClaimStatus.PASS


def test_lemma3_refuses_non_elementary_summands():
    heis = build(FamilySpec.of("Heisenberg"), GF3)
    with pytest.raises(HypothesisViolatedError) as info:
        verify_lemma3(heis, LeibnizAlgebra.abelian(GF3, ["w"]))
    assert info.value.hypothesis == "first summand is elementary"


def test_sl2_is_a_perfect_e_algebra(sl2_entry):
    [claim] = verify_cor5(sl2_entry.algebra, sl2_entry.levi)
    assert claim.status is ClaimStatus.PASS
    assert claim.evidence["sl2_sum"] is True


def test_cor5_needs_a_perfect_algebra(family1a):
    with pytest.raises(HypothesisViolatedError):
        verify_cor5(family1a, levi_data(FamilySpec.of("Family1a"), family1a))


# -------------------------
# Nilpotent algebras and cross-engine agreement
# -------------------------


def test_nilpotent_frattini_on_heisenberg(heisenberg):
    [claim] = verify_nilpotent_frattini(heisenberg)
    assert claim.status is ClaimStatus.PASS
    assert claim.engine == "char0"


def test_nilpotent_frattini_refuses_family1a(family1a):
    with pytest.raises(HypothesisViolatedError):
        verify_nilpotent_frattini(family1a)


def test_cross_engine_agreement_mod_5(family1a):
    claims = cross_engine_check(family1a, 5)
    assert len(claims) == 2
    assert all(c.status is ClaimStatus.PASS for c in claims)


def test_cross_engine_nil_needs_a_large_prime(family1a):
    claims = cross_engine_check(family1a, 3)
    assert claims[-1].status is ClaimStatus.UNDECIDABLE
    assert "does not exceed" in claims[-1].detail


# -------------------------
# Unique maximal ideals
# -------------------------


@pytest.mark.parametrize(
    "name, case",
    [
        ("CyclicNilpotent", 1),
        ("Thm17_NplusS", 2),
        ("Thm17_XsquareNonzero", 3),
        ("Thm17_XsquareZero", 4),
    ],
)
def test_thm17_witnesses_match_their_case(name, case):
    entry = build_entry(FamilySpec.of(name))
    verdict = verify_thm17(entry.algebra, entry.levi)
    assert verdict.unique_maximal_ideal
    assert verdict.matched_case == case
    assert all(c.status is ClaimStatus.PASS for c in verdict.claims)


def test_heisenberg_has_several_maximal_ideals(heisenberg):
    verdict = verify_thm17(heisenberg)
    assert not verdict.unique_maximal_ideal
    assert verdict.matched_case is None
    assert all(c.status is ClaimStatus.PASS for c in verdict.claims)


@pytest.mark.parametrize(
    "spec, case",
    [
        (FamilySpec.of("CyclicNilpotent", n=3), 1),
        pytest.param(FamilySpec.of("Thm17_NplusS"), 2, marks=pytest.mark.slow),
        (FamilySpec.of("Thm17_XsquareNonzero"), 3),
        (FamilySpec.of("Thm17_XsquareZero"), 4),
    ],
    ids=lambda v: v.label if isinstance(v, FamilySpec) else str(v),
)
def test_thm17_over_gf5_finds_one_maximal_ideal(spec, case):
    entry = build_entry(spec, GF5)
    verdict = verify_thm17(entry.algebra, entry.levi)
    assert verdict.engine == "brute"
    assert len(verdict.evidence["maximal_ideals"]) == 1
    assert verdict.unique_maximal_ideal
    assert verdict.matched_case == case
    if is_solvable(entry.algebra):
        rational = build(spec)
        assert verify_thm17(rational).unique_maximal_ideal
        assert rational.dim - derived_algebra(rational).dim == 1


def test_thm17_needs_levi_data_for_non_solvable_algebras(n_plus_s_entry):
    with pytest.raises(UndecidableError):
        verify_thm17(n_plus_s_entry.algebra)


# -------------------------
# N + <x> with N abelian
# -------------------------


def test_abelian_extension_lemmas_hold():
    alg = build(FamilySpec.of("Thm17_XsquareNonzero"))
    claims = verify_lemmas_15_16_18(alg, [1, 0], alg.span_labels("n"))
    assert {c.theorem for c in claims} == {"lemma15", "lemma16", "lemma18"}
    assert all(c.status is ClaimStatus.PASS for c in claims)


def test_x_inside_n_is_refused():
    alg = build(FamilySpec.of("Thm17_XsquareNonzero"))
    with pytest.raises(HypothesisViolatedError) as info:
        verify_lemmas_15_16_18(alg, [0, 1], alg.span_labels("n"))
    assert info.value.hypothesis == "L = N + <x> with x outside N"


def test_non_abelian_n_is_refused(heisenberg):
    alg = direct_sum(heisenberg, LeibnizAlgebra.abelian(RATIONALS, ["w"]))
    with pytest.raises(HypothesisViolatedError) as info:
        verify_lemmas_15_16_18(alg, alg.basis_vector("w"), alg.span_labels("x", "y", "z"))
    assert info.value.hypothesis == "N is abelian"


def test_square_zero_generator_is_refused():
    alg = build(FamilySpec.of("Thm17_XsquareZero"))
    with pytest.raises(HypothesisViolatedError) as info:
        verify_lemmas_15_16_18(alg, [1, 0], alg.span_labels("n"))
    assert info.value.hypothesis == "x^2 is non-zero"


# -------------------------
# Runner
# -------------------------


def test_records_follow_target_order():
    texts = [
        "catalog:Thm17_XsquareZero",
        "catalog:CyclicNilpotent:n=4",
        "catalog:Heisenberg",
        "catalog:Thm17_XsquareNonzero",
    ]
    targets = [t for text in texts for t in resolve_target(text)]
    records = asyncio.run(run_verification("thm17", targets, concurrency=4))
    seen = list(dict.fromkeys(r.target for r in records))
    assert seen == texts
    assert count_statuses(records)["fail"] == 0


def test_thm17_records_carry_the_verdict_claim(heisenberg):
    [record] = asyncio.run(run_verification("thm17", [VerificationTarget("H", heisenberg)]))
    result = record.result
    assert result.claim == "unique maximal ideal iff a case matches"
    assert result.status is ClaimStatus.PASS
    assert result.evidence["unique"] is False
    assert result.detail == "no case matched"


def test_lemma3_runs_on_pairs():
    lines = [
        VerificationTarget("A", LeibnizAlgebra.abelian(GF2, ["a"])),
        VerificationTarget("B", LeibnizAlgebra.abelian(GF2, ["b"])),
    ]
    records = asyncio.run(run_verification("lemma3", lines))
    assert [r.target for r in records] == ["A ⊕ A", "A ⊕ B", "B ⊕ B"]
    assert all(r.result.status is ClaimStatus.PASS for r in records)


def test_unknown_theorem_is_refused():
    with pytest.raises(BadParamsError):
        asyncio.run(run_verification("thm99", []))


def test_violated_hypotheses_become_undecidable_records(family1a):
    target = VerificationTarget("family1a", family1a)
    [record] = asyncio.run(run_verification("nilpotent", [target]))
    assert record.result.status is ClaimStatus.UNDECIDABLE
    assert record.result.detail == "not applicable: L is nilpotent fails"
    response = verification_response("nilpotent", [record])
    assert response.passed
    assert response.counts["undecidable"] == 1


def test_known_theorems_cover_every_runner():
    known = known_theorems()
    for theorem in ("thm1", "prop2", "thm4", "cor5", "thm6", "thm8", "lemma3", "thm17", "lemma18"):
        assert theorem in known
