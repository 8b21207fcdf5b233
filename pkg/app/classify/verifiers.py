"""Theorem verifiers over concrete algebras.

Each verifier returns ``ClaimResult`` records. Hypotheses are checked, never
assumed: a violated hypothesis raises ``HypothesisViolatedError`` naming it.
Over GF(p), a statement proved only in characteristic 0 that fails after
reduction is recorded as a finding rather than a failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Any, Optional, Sequence

from ..algebra import (
    AlgebraElement,
    LeibnizAlgebra,
    derived_algebra,
    direct_sum,
    is_ideal,
    is_nilpotent,
    is_perfect,
    is_solvable,
    left_mult,
    multiply,
    product_space,
    quotient,
    subalgebra_closure,
    subspace_is_nilpotent,
)
from ..claims import ClaimResult, Engine
from ..config import settings
from ..errors import (
    BadParamsError,
    BudgetExceededError,
    HypothesisViolatedError,
    NonSplitError,
    NotReducibleError,
    UndecidableError,
    WrongCharacteristicError,
)
from ..lattice import LatticeBudget, LatticeEngine, e_algebra_equivalence, jacobson_bruteforce
from ..linalg import FieldSpec, Subspace, fitting_decomposition, kernel, restrict_operator
from ..radicals import LeviData, frattini_char0, jacobson_char0, nilradical
from ..utils.logging import get_logger, log_claim
from .catalog import Family, FamilySpec, build

logger = get_logger(__name__)

THM6_FAMILIES = frozenset(
    {
        Family.FAMILY_1A,
        Family.FAMILY_1B,
        Family.HEISENBERG,
        Family.CYCLIC_NILPOTENT,
        Family.FAMILY_4,
    }
)


def _engine_tag(alg: LeibnizAlgebra) -> str:
    return Engine.BRUTE.value if alg.field.is_prime_field else Engine.CHAR0.value


def _emit(target: str, claims: list[ClaimResult]) -> list[ClaimResult]:
    for c in claims:
        log_claim(target, f"{c.theorem}: {c.claim}", c.status.value, c.detail)
    return claims


def _reductions(alg: LeibnizAlgebra, primes: Sequence[int], skip: Sequence[int] = ()) -> list[LeibnizAlgebra]:
    out = []
    for p in primes:
        if p in skip:
            continue
        try:
            out.append(alg.reduced_mod(p))
        except (NotReducibleError, BadParamsError) as exc:
            logger.debug(f"no reduction of {alg.name or 'L'} mod {p}: {exc.message}")
    return out


# -------------------------
# Minimal non-elementary families
# -------------------------


@dataclass(frozen=True)
class Thm6Verdict:
    spec: FamilySpec
    p: int
    minimal_non_elementary: bool
    phi: Subspace
    claims: list[ClaimResult] = field(default_factory=list)


def verify_thm6(
    spec: FamilySpec, p: int, budget: Optional[LatticeBudget] = None
) -> Thm6Verdict:
    """Build the family over GF(p) and read the minimal non-elementary verdict off the lattice."""
    if spec.family not in THM6_FAMILIES:
        raise BadParamsError(
            f"{spec.family.value} is not one of the minimal non-elementary families",
            family=spec.family.value,
        )
    alg = build(spec, FieldSpec.prime(p))
    engine = LatticeEngine(alg, budget)
    phi = engine.phi
    square = derived_algebra(alg)
    brute = Engine.BRUTE.value

    def rel(claim: str, holds: bool, **evidence: Any) -> ClaimResult:
        return ClaimResult.relation("thm6", claim, holds, True, False, brute, **evidence)

    evidence: dict[str, Any] = {"phi": phi}
    if not engine.minimal_non_elementary and not phi.is_zero:
        evidence["non_elementary_subalgebra"] = engine.non_elementary_subalgebra()
    claims = [rel("L is minimal non-elementary", engine.minimal_non_elementary, **evidence)]
    if spec.family in (Family.FAMILY_1A, Family.FAMILY_1B):
        claims.append(rel("Φ(L) = <z>", phi == alg.span_labels("z"), phi=phi))
    if spec.family in (Family.CYCLIC_NILPOTENT, Family.HEISENBERG):
        claims.append(rel("Φ(L) = L^2", phi == square, phi=phi, square=square))
    if spec.family is Family.CYCLIC_NILPOTENT:
        escaped = [b for b in engine.subalgebras if not b.is_full and not square.contains(b)]
        claims.append(
            rel("proper subalgebras lie in L^2", not escaped, escaped=escaped[:1])
        )
    if spec.family is Family.FAMILY_4:
        xy = alg.span_labels("x", "y")
        claims.append(rel("<x, y> = L^2", xy == square, square=square))
        claims.append(rel("<y> is an ideal", is_ideal(alg, alg.span_labels("y"))))
    claims.extend(verify_frattini_criterion(alg, budget))
    _emit(f"{spec.label}@GF({p})", claims)
    return Thm6Verdict(spec, p, engine.minimal_non_elementary, phi, claims)


def verify_frattini_criterion(
    alg: LeibnizAlgebra, budget: Optional[LatticeBudget] = None
) -> list[ClaimResult]:
    """Φ(L) = 0 iff L^2 ⊆ Asoc(L) and L^2 has a subalgebra complement, for L^2 nilpotent."""
    if not alg.field.is_prime_field:
        raise WrongCharacteristicError("the criterion is checked by enumeration over GF(p)")
    square = derived_algebra(alg)
    if not subspace_is_nilpotent(alg, square):
        raise HypothesisViolatedError("L^2 is nilpotent")
    engine = LatticeEngine(alg, budget)
    complement = next(
        (
            b
            for b in engine.subalgebras
            if (b & square).is_zero and (b + square).is_full
        ),
        None,
    )
    right = engine.asoc.contains(square) and complement is not None
    return [
        ClaimResult.relation(
            "thm6",
            "Φ(L) = 0 iff L^2 ⊆ Asoc(L) and L^2 is complemented",
            engine.phi.is_zero == right,
            True,
            False,
            Engine.BRUTE.value,
            phi=engine.phi,
            asoc=engine.asoc,
            complement=complement,
        )
    ]


# -------------------------
# E-algebras
# -------------------------


def _levi_products(alg: LeibnizAlgebra, levi: LeviData) -> Subspace:
    return product_space(alg, levi.radical, levi.factor) + product_space(
        alg, levi.factor, levi.radical
    )


def verify_e_algebra(
    alg: LeibnizAlgebra,
    levi: Optional[LeviData] = None,
    budget: Optional[LatticeBudget] = None,
) -> list[ClaimResult]:
    """E-algebra verdicts: the solvable and sl2 patterns over Q, the definition over GF(p)."""
    target = alg.name or "L"
    if alg.field.is_prime_field:
        is_e, top_elementary = e_algebra_equivalence(alg, budget)
        brute = Engine.BRUTE.value
        claims = [
            ClaimResult.check(
                "thm1",
                "L is an E-algebra iff L/Φ(L) is elementary",
                is_e == top_elementary,
                engine=brute,
                e_algebra=is_e,
                quotient_elementary=top_elementary,
            )
        ]
        if is_solvable(alg):
            claims.append(
                ClaimResult.relation(
                    "prop2", "solvable ⇒ E-algebra", is_e, True, False, brute, e_algebra=is_e
                )
            )
        return _emit(target, claims)

    if is_solvable(alg):
        return _emit(
            target,
            [
                ClaimResult.check(
                    "prop2",
                    "L is an E-algebra",
                    True,
                    "solvable in characteristic 0",
                    Engine.DEFINITIONAL.value,
                )
            ],
        )
    if levi is None:
        raise UndecidableError(
            "E-algebra verdict for a non-solvable algebra needs Levi data", algebra=target
        )
    levi.check(alg)
    char0 = Engine.CHAR0.value
    if levi.radical.is_zero:
        return _emit(
            target,
            [
                ClaimResult.check(
                    "thm4",
                    "L is an E-algebra",
                    True,
                    f"direct sum of {levi.sl2_copies} copies of sl2",
                    char0,
                )
            ],
        )
    mixed = _levi_products(alg, levi)
    if mixed.is_zero:
        return _emit(
            target,
            [ClaimResult.check("thm4", "L is an E-algebra", True, "RS + SR = 0", char0)],
        )
    try:
        phi = frattini_char0(alg, levi).space
    except UndecidableError:
        return _emit(
            target,
            [ClaimResult.undecidable("thm4", "L is an E-algebra", "Φ(L) not characterized", char0)],
        )
    holds = phi.contains(mixed)
    verdict = "L is an E-algebra" if holds else "L is not an E-algebra"
    return _emit(
        target,
        [
            ClaimResult.check(
                "thm4",
                verdict,
                True,
                f"RS + SR {'⊆' if holds else '⊄'} Φ(L)",
                char0,
                RS_SR=mixed,
                phi=phi,
            )
        ],
    )


def verify_lemma3(
    a: LeibnizAlgebra,
    b: LeibnizAlgebra,
    p: Optional[int] = None,
    budget: Optional[LatticeBudget] = None,
) -> list[ClaimResult]:
    """The direct sum of two elementary algebras is elementary."""
    if p is not None:
        a = a.reduced_mod(p) if a.field.is_rational else a
        b = b.reduced_mod(p) if b.field.is_rational else b
    if not (a.field.is_prime_field and b.field.is_prime_field):
        raise WrongCharacteristicError("elementarity is decided by enumeration over GF(p)")
    if not LatticeEngine(a, budget).elementary:
        raise HypothesisViolatedError("first summand is elementary")
    if not LatticeEngine(b, budget).elementary:
        raise HypothesisViolatedError("second summand is elementary")
    total = direct_sum(a, b)
    elementary = LatticeEngine(total, budget).elementary
    return _emit(
        f"{a.name or 'A'}+{b.name or 'B'}",
        [ClaimResult.check("lemma3", "A ⊕ B is elementary", elementary, engine=Engine.BRUTE.value)],
    )


def verify_cor5(
    alg: LeibnizAlgebra,
    levi: LeviData,
    oracle_primes: Optional[Sequence[int]] = None,
    budget: Optional[LatticeBudget] = None,
) -> list[ClaimResult]:
    """Perfect L: E-algebra iff a sum of sl2 copies.

    The sl2 side comes from the declared Levi data; the E-algebra side is read
    off the first usable reduction mod p.
    """
    if not alg.field.is_rational:
        raise WrongCharacteristicError("the perfect-algebra criterion is stated over Q")
    if not is_perfect(alg):
        raise HypothesisViolatedError("L is perfect")
    levi.check(alg)
    sl2_sum = levi.radical.is_zero
    primes = settings.oracle_prime_list if oracle_primes is None else oracle_primes
    for reduced in _reductions(alg, primes, skip=(2,)):
        try:
            is_e = LatticeEngine(reduced, budget).e_algebra
        except BudgetExceededError as exc:
            logger.debug(f"cor5 oracle over {reduced.field} skipped: {exc.message}")
            continue
        return _emit(
            alg.name or "L",
            [
                ClaimResult.relation(
                    "cor5",
                    "E-algebra iff sum of sl2 copies",
                    is_e == sl2_sum,
                    True,
                    False,
                    Engine.BRUTE.value,
                    e_algebra=is_e,
                    sl2_sum=sl2_sum,
                    p=reduced.field.characteristic,
                )
            ],
        )
    return _emit(
        alg.name or "L",
        [ClaimResult.undecidable("cor5", "E-algebra iff sum of sl2 copies", "no usable prime")],
    )


# -------------------------
# Nilpotent algebras and cross-engine agreement
# -------------------------


def verify_nilpotent_frattini(
    alg: LeibnizAlgebra, budget: Optional[LatticeBudget] = None
) -> list[ClaimResult]:
    """Nilpotent L has J(L) = Φ(L) = L^2."""
    if not is_nilpotent(alg):
        raise HypothesisViolatedError("L is nilpotent")
    square = derived_algebra(alg)
    if alg.field.is_prime_field:
        engine = LatticeEngine(alg, budget)
        jac, phi = engine.jacobson, engine.phi
    else:
        jac, phi = jacobson_char0(alg), frattini_char0(alg).space
    return _emit(
        alg.name or "L",
        [
            ClaimResult.check(
                "cor13",
                "nilpotent ⇒ J(L) = Φ(L) = L^2",
                jac == square and phi == square,
                engine=_engine_tag(alg),
                J=jac,
                phi=phi,
                square=square,
            )
        ],
    )


def cross_engine_check(
    alg: LeibnizAlgebra, p: int, budget: Optional[LatticeBudget] = None
) -> list[ClaimResult]:
    """Compare the characteristic-0 engines with enumeration after reduction mod p."""
    if not alg.field.is_rational:
        raise WrongCharacteristicError("cross-engine checks start from a table over Q")
    reduced = alg.reduced_mod(p)
    target = f"{alg.name or 'L'} mod {p}"
    brute = Engine.BRUTE.value
    claims: list[ClaimResult] = []
    if is_solvable(alg):
        square = derived_algebra(alg).over(reduced.field)
        jac_p = jacobson_bruteforce(reduced, budget, assume_solvable=is_solvable(reduced))
        claims.append(
            ClaimResult.check("cross", "brute J(L) = L^2 for solvable L", jac_p == square, engine=brute, J=jac_p)
        )
    try:
        nil_q = nilradical(alg)
    except NonSplitError as exc:
        claims.append(ClaimResult.undecidable("cross", "brute Nil = char0 Nil", exc.message, brute))
        return _emit(target, claims)
    if p <= alg.dim:
        claims.append(
            ClaimResult.undecidable("cross", "brute Nil = char0 Nil", f"p = {p} does not exceed dim L", brute)
        )
        return _emit(target, claims)
    nil_p = LatticeEngine(reduced, budget).nil
    transported = nil_q.over(reduced.field)
    claims.append(
        ClaimResult.relation(
            "cross",
            "brute Nil = char0 Nil",
            nil_p == transported,
            True,
            False,
            brute,
            brute_nil=nil_p,
            char0_nil=transported,
        )
    )
    return _emit(target, claims)


# -------------------------
# Unique maximal ideals
# -------------------------


@dataclass(frozen=True)
class Thm17Verdict:
    unique_maximal_ideal: bool
    matched_case: Optional[int]
    engine: str
    evidence: dict[str, Any] = field(default_factory=dict)
    claims: list[ClaimResult] = field(default_factory=list)


def _unique_maximal_ideal(
    alg: LeibnizAlgebra, levi: Optional[LeviData], budget: Optional[LatticeBudget]
) -> tuple[bool, dict[str, Any]]:
    if alg.field.is_prime_field:
        maximal = LatticeEngine(alg, budget).maximal_ideals
        return len(maximal) == 1, {"maximal_ideals": list(maximal)}
    square = derived_algebra(alg)
    if is_solvable(alg):
        # maximal ideals of a solvable algebra are the hyperplanes containing L^2
        return alg.dim - square.dim == 1, {"codim_square": alg.dim - square.dim}
    if levi is None:
        raise UndecidableError(
            "maximal ideals of a non-solvable algebra need Levi data", algebra=alg.name
        )
    levi.check(alg)
    unique = square.is_full and levi.sl2_copies == 1
    return unique, {"perfect": square.is_full, "sl2_copies": levi.sl2_copies}


def _nilradical_for(alg: LeibnizAlgebra, budget: Optional[LatticeBudget]) -> Subspace:
    if alg.field.is_prime_field:
        return LatticeEngine(alg, budget).nil
    return nilradical(alg)


def _single_generator(alg: LeibnizAlgebra) -> Optional[tuple]:
    full = alg.full_space()
    if alg.dim - derived_algebra(alg).dim != 1:
        # the image of one generator spans L/L^2
        return None
    for k in range(alg.dim):
        v = alg.basis_vector(k)
        if subalgebra_closure(alg, [v]) == full:
            return v
    bound = settings.cyclic_search_bound
    for coeffs in cartesian(range(-bound, bound + 1), repeat=alg.dim):
        if all(c == 0 for c in coeffs):
            continue
        v = tuple(alg.field.coerce(c) for c in coeffs)
        if subalgebra_closure(alg, [v]) == full:
            return v
    return None


def _match_case(
    alg: LeibnizAlgebra, nil: Subspace, levi: Optional[LeviData]
) -> tuple[Optional[int], dict[str, Any]]:
    if is_nilpotent(alg):
        gen = _single_generator(alg) if alg.dim else None
        if gen is not None:
            return 1, {"generator": alg.format_vector(gen)}
        return None, {"generator": None}
    nil_square = product_space(alg, nil, nil)
    top = quotient(alg, nil_square)
    nil_bar = top.project_subspace(nil)
    q = top.algebra
    if levi is not None and levi.sl2_copies == 1 and (nil + levi.factor).is_full:
        s_bar = top.project_subspace(levi.factor)
        acted = product_space(q, s_bar, nil_bar) + product_space(q, nil_bar, s_bar)
        if acted == nil_bar:
            return 2, {"N": nil, "S": levi.factor}
    if nil.codim != 1:
        return None, {"N": nil}
    x = alg.basis_vector(nil.complement_coordinates()[0])
    x_bar = top.project_subspace(alg.span([x]))
    square_x = multiply(alg, x, x)
    evidence = {"N": nil, "x": alg.format_vector(x), "x^2": str(square_x)}
    if not square_x.is_zero:
        if product_space(q, x_bar, q.full_space()) == nil_bar:
            return 3, evidence
    elif product_space(q, x_bar, nil_bar) + product_space(q, nil_bar, x_bar) == nil_bar:
        return 4, evidence
    return None, evidence


def verify_thm17(
    alg: LeibnizAlgebra,
    levi: Optional[LeviData] = None,
    budget: Optional[LatticeBudget] = None,
) -> Thm17Verdict:
    """Decide uniqueness of the maximal ideal and match the structural cases."""
    engine = _engine_tag(alg)
    unique, evidence = _unique_maximal_ideal(alg, levi, budget)
    try:
        nil = _nilradical_for(alg, budget)
    except NonSplitError as exc:
        claim = ClaimResult.undecidable("thm17", "unique maximal ideal iff a case matches", exc.message, engine)
        return Thm17Verdict(unique, None, engine, evidence, _emit(alg.name or "L", [claim]))
    case, case_evidence = _match_case(alg, nil, levi)
    evidence.update(case_evidence)
    claims = [
        ClaimResult.relation(
            "thm17",
            "unique maximal ideal iff a case matches",
            unique == (case is not None),
            True,
            alg.field.is_rational,
            engine,
            unique=unique,
            case=case,
        )
    ]
    return Thm17Verdict(unique, case, engine, evidence, _emit(alg.name or "L", claims))


# -------------------------
# N + <x> with N abelian
# -------------------------


def _check_abelian_extension(alg: LeibnizAlgebra, x: Sequence[Any], n: Subspace) -> None:
    if not is_ideal(alg, n):
        raise HypothesisViolatedError("N is an ideal")
    if not product_space(alg, n, n).is_zero:
        raise HypothesisViolatedError("N is abelian")
    if n.contains_vector(x) or not (n + alg.span([x])).is_full:
        raise HypothesisViolatedError("L = N + <x> with x outside N")
    if multiply(alg, x, x).is_zero:
        raise HypothesisViolatedError("x^2 is non-zero")


def _fitting_chain_claim(alg: LeibnizAlgebra, x: Sequence[Any]) -> ClaimResult:
    lx = left_mult(alg, x)
    t = subalgebra_closure(alg, [x])
    on_t = restrict_operator(lx, t)
    null_t = fitting_decomposition(on_t).null
    null_t_in_l = alg.span([t.combine(c) for c in null_t.vectors])
    null_l = fitting_decomposition(lx).null
    # T_i = ker (L_x|T)^i and L_i = ker L_x^i must agree up to the length of the T chain
    chain_agrees = True
    for i in range(1, null_t.dim + 1):
        t_i = kernel(on_t.power(i))
        l_i = kernel(lx.power(i))
        if alg.span([t.combine(c) for c in t_i.vectors]) != l_i:
            chain_agrees = False
            break
    return ClaimResult.check(
        "lemma18",
        "Fitting null components of L_x on T and on L coincide",
        chain_agrees and null_t_in_l == null_l,
        engine=Engine.DEFINITIONAL.value,
        T=t,
        null_T=null_t_in_l,
        null_L=null_l,
    )


def verify_lemmas_15_16_18(
    alg: LeibnizAlgebra,
    x: "AlgebraElement | Sequence[Any]",
    n: Subspace,
    budget: Optional[LatticeBudget] = None,
) -> list[ClaimResult]:
    coords = x.coords if isinstance(x, AlgebraElement) else tuple(alg.field.coerce(a) for a in x)
    _check_abelian_extension(alg, coords, n)
    engine = _engine_tag(alg)
    full = alg.full_space()
    x_line = alg.span([coords])
    xl = product_space(alg, x_line, full)
    lx = product_space(alg, full, x_line)
    claims = [ClaimResult.check("lemma15", "xL is an ideal", is_ideal(alg, xl), engine=engine, xL=xl)]
    if xl + lx == n:
        claims.append(ClaimResult.check("lemma16", "xL + Lx = N ⇒ xL = N", xl == n, engine=engine, xL=xl))
    else:
        claims.append(
            ClaimResult.check("lemma16", "xL + Lx = N ⇒ xL = N", True, "premise xL + Lx = N does not hold", engine)
        )
    if xl != n:
        claims.append(
            ClaimResult.undecidable("lemma18", "J(L) = Nil(L) = N", "premise xL = N does not hold", engine)
        )
        return _emit(alg.name or "L", claims)
    if alg.field.is_prime_field:
        lattice = LatticeEngine(alg, budget)
        jac, nil = lattice.jacobson, lattice.nil
        unique = len(lattice.maximal_ideals) == 1
    else:
        jac = jacobson_char0(alg)
        nil = nilradical(alg)
        unique = alg.dim - derived_algebra(alg).dim == 1
    claims.append(
        ClaimResult.relation(
            "lemma18", "J(L) = Nil(L) = N", jac == nil == n, True, alg.field.is_rational, engine, J=jac, nil=nil
        )
    )
    claims.append(
        ClaimResult.relation(
            "lemma18", "L has a unique maximal ideal", unique, True, alg.field.is_rational, engine
        )
    )
    claims.append(_fitting_chain_claim(alg, coords))
    return _emit(alg.name or "L", claims)

