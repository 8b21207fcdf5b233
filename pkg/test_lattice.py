"""Brute-force lattice engine over GF(p)."""

import time

import pytest

from app.algebra import LeibnizAlgebra, derived_algebra
from app.classify import FamilySpec, build, sl2
from app.errors import BudgetExceededError, WrongCharacteristicError
from app.lattice import (
    Deadline,
    LatticeBudget,
    LatticeEngine,
    e_algebra_equivalence,
    frattini_bruteforce,
    hyperplanes_containing,
    jacobson_bruteforce,
    small_algebra_corpus,
)
from app.linalg import RATIONALS, FieldSpec

GF2 = FieldSpec.prime(2)
GF3 = FieldSpec.prime(3)
GF5 = FieldSpec.prime(5)


def test_family1a_over_gf5():
    alg = build(FamilySpec.of("Family1a"), GF5)
    engine = LatticeEngine(alg)
    assert engine.phi == alg.span_labels("z")
    assert engine.jacobson == alg.span_labels("y", "z")
    assert engine.nil == alg.span_labels("y", "z")
    assert engine.asoc == alg.span_labels("z")
    assert engine.rad.is_full
    assert engine.minimal_non_elementary
    assert not engine.elementary


def test_heisenberg_frattini_over_gf3():
    alg = build(FamilySpec.of("Heisenberg"), GF3)
    frattini, phi = frattini_bruteforce(alg)
    assert phi == alg.span_labels("z")
    assert frattini.contains(phi)


def test_abelian_plane_is_elementary():
    alg = LeibnizAlgebra.abelian(GF2, ["a", "b"])
    report = LatticeEngine(alg).report()
    assert report.subalgebra_count == 5
    assert report.ideal_count == 5
    assert len(report.maximal_subalgebras) == 3
    assert report.phi.is_zero
    assert report.elementary
    assert report.e_algebra
    assert report.asoc.is_full


def test_sl2_is_simple_over_gf5():
    engine = LatticeEngine(sl2(GF5))
    assert set(engine.ideals) == {engine.alg.zero_space(), engine.alg.full_space()}
    assert engine.jacobson.is_zero
    assert engine.phi.is_zero
    assert engine.rad.is_zero


def test_zero_algebra_uses_degenerate_conventions():
    report = LatticeEngine(LeibnizAlgebra.zero_algebra(GF5)).report()
    assert report.J.is_zero and report.phi.is_zero
    assert report.caveats


def test_phi_of_subalgebras_is_in_ambient_coordinates():
    alg = build(FamilySpec.of("CyclicNilpotent", n=3), GF3)
    engine = LatticeEngine(alg)
    square = derived_algebra(alg)
    assert engine.phi == square
    assert engine.phi_of(square).is_zero


def test_jacobson_fast_path_agrees_with_the_lattice():
    alg = build(FamilySpec.of("Family4"), GF3)
    assert jacobson_bruteforce(alg) == LatticeEngine(alg).jacobson


def test_hyperplanes_containing_a_line():
    line = LeibnizAlgebra.abelian(GF3, ["a", "b", "c"]).span_labels("a")
    planes = list(hyperplanes_containing(line))
    assert len(planes) == 4
    assert all(p.dim == 2 and p.contains(line) for p in planes)


def test_e_algebra_equivalence_on_family1a():
    is_e, top_elementary = e_algebra_equivalence(build(FamilySpec.of("Family1a"), GF3))
    assert is_e == top_elementary


def test_engine_refuses_rational_tables(family1a):
    with pytest.raises(WrongCharacteristicError):
        LatticeEngine(family1a)


def test_budget_is_enforced():
    alg = build(FamilySpec.of("Family4"), GF5)
    with pytest.raises(BudgetExceededError):
        LatticeEngine(alg, LatticeBudget(max_subspaces=100)).subalgebras


def test_expired_deadline_stops_enumeration():
    alg = build(FamilySpec.of("Family1a"), GF3)
    expired = Deadline(time.monotonic() - 1, 1.0)
    with pytest.raises(BudgetExceededError):
        LatticeEngine(alg, deadline=expired).subalgebras


def test_subalgebra_engines_share_the_wall_clock():
    alg = build(FamilySpec.of("Family1a"), GF3)
    engine = LatticeEngine(alg)
    assert engine.subalgebras
    engine.deadline = Deadline(time.monotonic() - 1, 1.0)
    with pytest.raises(BudgetExceededError):
        engine.phi_of(alg.span_labels("y", "z"))


def test_corpus_contains_only_leibniz_tables():
    corpus = list(small_algebra_corpus(GF2, 1))
    # dimension 0 and the abelian line; b*b = b fails the identity
    assert [alg.dim for alg in corpus] == [0, 1]


@pytest.mark.slow
def test_corpus_of_planes_over_gf2_satisfies_the_equivalence():
    for alg in small_algebra_corpus(GF2, 2):
        is_e, top_elementary = e_algebra_equivalence(alg)
        assert is_e == top_elementary, alg.sc


def test_corpus_needs_a_prime_field():
    with pytest.raises(WrongCharacteristicError):
        list(small_algebra_corpus(RATIONALS, 1))
