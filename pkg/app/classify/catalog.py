"""Catalog of the algebra families used by the verifiers.

Every constructor goes through the checked ``LeibnizAlgebra`` construction,
so a mistyped table fails loudly instead of corrupting results.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterator, Mapping, Optional

from ..algebra import LeibnizAlgebra, direct_sum
from ..errors import BadParamsError, CharacteristicClashError, NotReducibleError
from ..linalg import RATIONALS, FieldSpec
from ..radicals import LeviData

_TARGET_RE = re.compile(r"^(?P<name>[A-Za-z0-9_]+)(?::(?P<params>[^@]*))?(?:@(?P<field>.+))?$")
_PARAM_ALIASES = {"α": "alpha", "β": "beta", "a": "alpha", "b": "beta"}


class Family(str, Enum):
    FAMILY_1A = "Family1a"
    FAMILY_1B = "Family1b"
    HEISENBERG = "Heisenberg"
    CYCLIC_NILPOTENT = "CyclicNilpotent"
    FAMILY_4 = "Family4"
    SL2_SUM = "Sl2Sum"
    THM17_N_PLUS_S = "Thm17_NplusS"
    THM17_XSQUARE_NONZERO = "Thm17_XsquareNonzero"
    THM17_XSQUARE_ZERO = "Thm17_XsquareZero"
    E_ALGEBRA_WITNESS = "EAlgebraWitness"

    @classmethod
    def parse(cls, name: str) -> "Family":
        for member in cls:
            if member.value.lower() == name.lower():
                return member
        raise BadParamsError(
            f"unknown family {name!r}", known=[m.value for m in cls]
        )


_DEFAULTS: dict[Family, dict[str, Any]] = {
    Family.FAMILY_1A: {"c": 1},
    Family.FAMILY_1B: {"c": 1},
    Family.HEISENBERG: {"m": 1},
    Family.CYCLIC_NILPOTENT: {"n": 3},
    Family.FAMILY_4: {"alpha": 1, "beta": 1},
    Family.SL2_SUM: {"k": 1},
    Family.THM17_N_PLUS_S: {},
    Family.THM17_XSQUARE_NONZERO: {},
    Family.THM17_XSQUARE_ZERO: {},
    Family.E_ALGEBRA_WITNESS: {"n": 2},
}

_INTEGER_PARAMS = {"m", "n", "k"}


def parse_field(text: str) -> FieldSpec:
    """``Q``, ``GF(p)``, ``GFp`` or a bare prime."""
    t = text.strip().replace(" ", "")
    if t.upper() in ("Q", "QQ", "0"):
        return RATIONALS
    match = re.fullmatch(r"(?:GF\(?(\d+)\)?|(\d+))", t, flags=re.IGNORECASE)
    if not match:
        raise BadParamsError(f"unrecognized field {text!r}")
    return FieldSpec.prime(int(match.group(1) or match.group(2)))


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: Mapping[str, Any] = field(default_factory=dict)

    @classmethod
    def of(cls, family: "Family | str", **params: Any) -> "FamilySpec":
        fam = family if isinstance(family, Family) else Family.parse(family)
        merged = dict(_DEFAULTS[fam])
        for key, value in params.items():
            key = _PARAM_ALIASES.get(key, key)
            if key not in _DEFAULTS[fam]:
                raise BadParamsError(f"{fam.value} takes no parameter {key!r}", parameter=key)
            merged[key] = _parse_param(key, value)
        spec = cls(fam, merged)
        spec.check()
        return spec

    def check(self) -> None:
        p = self.params
        for key in ("c", "alpha", "beta"):
            if key in p and p[key] == 0:
                raise BadParamsError(f"{self.family.value}: {key} must be non-zero", parameter=key)
        if "n" in p and p["n"] < 2:
            raise BadParamsError(f"{self.family.value}: n must be at least 2", parameter="n")
        for key in ("m", "k"):
            if key in p and p[key] < 1:
                raise BadParamsError(f"{self.family.value}: {key} must be at least 1", parameter=key)

    @property
    def label(self) -> str:
        if not self.params:
            return self.family.value
        body = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.family.value}:{body}"


def _parse_param(key: str, value: Any) -> Any:
    try:
        if key in _INTEGER_PARAMS:
            return int(value)
        return Fraction(str(value)) if isinstance(value, str) else Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise BadParamsError(f"bad value {value!r} for parameter {key}", parameter=key) from None


def parse_target(text: str) -> tuple[FamilySpec, FieldSpec]:
    """``Family1a:c=2@GF(5)`` -> (spec, field); the field defaults to Q."""
    match = _TARGET_RE.match(text.strip())
    if not match:
        raise BadParamsError(f"malformed catalog target {text!r}")
    params: dict[str, str] = {}
    if match.group("params"):
        for item in match.group("params").split(","):
            if not item.strip():
                continue
            if "=" not in item:
                raise BadParamsError(f"parameter {item!r} is not key=value")
            k, v = item.split("=", 1)
            params[k.strip()] = v.strip()
    field_spec = parse_field(match.group("field")) if match.group("field") else RATIONALS
    return FamilySpec.of(match.group("name"), **params), field_spec


# -------------------------
# Constructors
# -------------------------


def _scalar(field_spec: FieldSpec, spec: FamilySpec, key: str) -> Any:
    value = field_spec.coerce(spec.params[key])
    if value == 0:
        raise BadParamsError(
            f"{spec.family.value}: {key}={spec.params[key]} vanishes in {field_spec}",
            parameter=key,
        )
    return value


def _family_1a(f: FieldSpec, spec: FamilySpec) -> LeibnizAlgebra:
    c = _scalar(f, spec, "c")
    return LeibnizAlgebra.from_products(
        f,
        ["x", "y", "z"],
        {("x", "z"): {"z": c}, ("x", "y"): {"y": c, "z": 1}},
        name=spec.label,
    )


def _family_1b(f: FieldSpec, spec: FamilySpec) -> LeibnizAlgebra:
    c = _scalar(f, spec, "c")
    return LeibnizAlgebra.from_products(
        f,
        ["x", "y", "z"],
        {
            ("x", "z"): {"z": c},
            ("x", "y"): {"y": c, "z": 1},
            ("z", "x"): {"z": f.neg(c)},
            ("y", "x"): {"y": f.neg(c), "z": -1},
        },
        name=spec.label,
    )


def _heisenberg(f: FieldSpec, spec: FamilySpec) -> LeibnizAlgebra:
    m = spec.params["m"]
    xs = [f"x{i}" for i in range(1, m + 1)] if m > 1 else ["x"]
    ys = [f"y{i}" for i in range(1, m + 1)] if m > 1 else ["y"]
    products: dict[tuple[str, str], dict[str, Any]] = {}
    for x, y in zip(xs, ys):
        products[(x, y)] = {"z": 1}
        products[(y, x)] = {"z": -1}
    return LeibnizAlgebra.from_products(f, xs + ys + ["z"], products, name=spec.label)


def _cyclic_labels(n: int) -> list[str]:
    return ["a"] + [f"a{i}" for i in range(2, n + 1)]


def _cyclic_nilpotent(f: FieldSpec, spec: FamilySpec) -> LeibnizAlgebra:
    labels = _cyclic_labels(spec.params["n"])
    products = {("a", labels[i]): {labels[i + 1]: 1} for i in range(len(labels) - 1)}
    return LeibnizAlgebra.from_products(f, labels, products, name=spec.label)


def _family_4(f: FieldSpec, spec: FamilySpec) -> LeibnizAlgebra:
    # products among {a, b} and within {x, y} are zero
    alpha = _scalar(f, spec, "alpha")
    beta = _scalar(f, spec, "beta")
    return LeibnizAlgebra.from_products(
        f,
        ["a", "b", "x", "y"],
        {
            ("a", "x"): {"x": alpha},
            ("a", "y"): {"y": alpha},
            ("b", "x"): {"x": beta},
            ("b", "y"): {"y": beta},
            ("x", "a"): {"x": f.neg(alpha)},
            ("x", "b"): {"y": 1, "x": f.neg(beta)},
        },
        name=spec.label,
    )


def _require_odd(f: FieldSpec, spec: FamilySpec) -> None:
    if f.characteristic == 2:
        raise CharacteristicClashError(
            f"{spec.family.value} contains sl2, which degenerates in characteristic 2",
            family=spec.family.value,
        )


def sl2(f: FieldSpec) -> LeibnizAlgebra:
    """sl2 with [e,f]=h, [h,e]=2e, [h,f]=-2f."""
    return LeibnizAlgebra.from_products(
        f,
        ["e", "f", "h"],
        {
            ("e", "f"): {"h": 1},
            ("f", "e"): {"h": -1},
            ("h", "e"): {"e": 2},
            ("e", "h"): {"e": -2},
            ("h", "f"): {"f": -2},
            ("f", "h"): {"f": 2},
        },
        name="sl2",
    )


def _sl2_sum(f: FieldSpec, spec: FamilySpec) -> LeibnizAlgebra:
    _require_odd(f, spec)
    alg = sl2(f)
    for _ in range(spec.params["k"] - 1):
        alg = direct_sum(alg, sl2(f))
    return LeibnizAlgebra.from_structure_constants(f, alg.labels, alg.sc, name=spec.label)


def _n_plus_s(f: FieldSpec, spec: FamilySpec) -> LeibnizAlgebra:
    """sl2 acting on its natural module V = <v1, v2>, V abelian."""
    _require_odd(f, spec)
    base = sl2(f)
    products: dict[tuple[str, str], dict[str, Any]] = {}
    for i, a in enumerate(base.labels):
        for j, b in enumerate(base.labels):
            terms = {base.labels[k]: c for k, c in enumerate(base.sc[i][j]) if c != 0}
            if terms:
                products[(a, b)] = terms
    action = {("e", "v2"): "v1", ("f", "v1"): "v2", ("h", "v1"): "v1", ("h", "v2"): "v2"}
    signs = {("h", "v2"): -1}
    for (s, v), w in action.items():
        coeff = signs.get((s, v), 1)
        products[(s, v)] = {w: coeff}
        products[(v, s)] = {w: -coeff}
    return LeibnizAlgebra.from_products(
        f, ["e", "f", "h", "v1", "v2"], products, name=spec.label
    )


def _xsquare_nonzero(f: FieldSpec, spec: FamilySpec) -> LeibnizAlgebra:
    return LeibnizAlgebra.from_products(
        f, ["x", "n"], {("x", "x"): {"n": 1}, ("x", "n"): {"n": 1}}, name=spec.label
    )


def _xsquare_zero(f: FieldSpec, spec: FamilySpec) -> LeibnizAlgebra:
    return LeibnizAlgebra.from_products(
        f, ["x", "n"], {("x", "n"): {"n": 1}, ("n", "x"): {"n": -1}}, name=spec.label
    )


def _e_algebra_witness(f: FieldSpec, spec: FamilySpec) -> LeibnizAlgebra:
    _require_odd(f, spec)
    cyclic = _cyclic_nilpotent(f, FamilySpec(Family.CYCLIC_NILPOTENT, {"n": spec.params["n"]}))
    alg = direct_sum(sl2(f), cyclic)
    return LeibnizAlgebra.from_structure_constants(f, alg.labels, alg.sc, name=spec.label)


_BUILDERS: dict[Family, Callable[[FieldSpec, FamilySpec], LeibnizAlgebra]] = {
    Family.FAMILY_1A: _family_1a,
    Family.FAMILY_1B: _family_1b,
    Family.HEISENBERG: _heisenberg,
    Family.CYCLIC_NILPOTENT: _cyclic_nilpotent,
    Family.FAMILY_4: _family_4,
    Family.SL2_SUM: _sl2_sum,
    Family.THM17_N_PLUS_S: _n_plus_s,
    Family.THM17_XSQUARE_NONZERO: _xsquare_nonzero,
    Family.THM17_XSQUARE_ZERO: _xsquare_zero,
    Family.E_ALGEBRA_WITNESS: _e_algebra_witness,
}


def build(spec: FamilySpec, field_spec: FieldSpec = RATIONALS) -> LeibnizAlgebra:
    return _BUILDERS[spec.family](field_spec, spec)


# -------------------------
# Catalog entries
# -------------------------


@dataclass(frozen=True)
class CatalogEntry:
    spec: FamilySpec
    algebra: LeibnizAlgebra
    levi: Optional[LeviData]

    @property
    def label(self) -> str:
        return f"{self.spec.label}@{self.algebra.field.label}"


def levi_data(spec: FamilySpec, alg: LeibnizAlgebra) -> Optional[LeviData]:
    """Declared Levi decomposition for the catalog families that have one."""
    fam = spec.family
    if fam is Family.SL2_SUM:
        return LeviData(alg.zero_space(), alg.full_space(), spec.params["k"], direct=True)
    if fam is Family.THM17_N_PLUS_S:
        return LeviData(alg.span_labels("v1", "v2"), alg.span_labels("e", "f", "h"), 1)
    if fam is Family.E_ALGEBRA_WITNESS:
        sl2_part = alg.span_labels("e", "f", "h")
        rest = [lab for lab in alg.labels if lab not in ("e", "f", "h")]
        return LeviData(alg.span_labels(*rest), sl2_part, 1, direct=True)
    return LeviData(alg.full_space(), alg.zero_space(), 0, direct=True)


def build_entry(spec: FamilySpec, field_spec: FieldSpec = RATIONALS) -> CatalogEntry:
    alg = build(spec, field_spec)
    levi = levi_data(spec, alg)
    if levi is not None:
        levi.check(alg)
    return CatalogEntry(spec, alg, levi)


def default_grid() -> list[FamilySpec]:
    """Parameter grid exercised when no targets are given."""
    grid: list[FamilySpec] = []
    for fam in (Family.FAMILY_1A, Family.FAMILY_1B):
        for c in ("1", "2", "-1", "1/2"):
            grid.append(FamilySpec.of(fam, c=c))
    grid += [FamilySpec.of(Family.HEISENBERG, m=m) for m in (1, 2)]
    grid += [FamilySpec.of(Family.CYCLIC_NILPOTENT, n=n) for n in range(2, 7)]
    grid += [
        FamilySpec.of(Family.FAMILY_4, alpha=a, beta=b) for a in (1, 2) for b in (1, 2)
    ]
    grid += [FamilySpec.of(Family.SL2_SUM, k=k) for k in (1, 2)]
    grid += [
        FamilySpec.of(Family.THM17_N_PLUS_S),
        FamilySpec.of(Family.THM17_XSQUARE_NONZERO),
        FamilySpec.of(Family.THM17_XSQUARE_ZERO),
        FamilySpec.of(Family.E_ALGEBRA_WITNESS),
    ]
    return grid


def iter_grid(field_spec: FieldSpec = RATIONALS) -> Iterator[CatalogEntry]:
    """Catalog entries of the default grid that are definable over ``field_spec``."""
    for spec in default_grid():
        try:
            yield build_entry(spec, field_spec)
        except (BadParamsError, CharacteristicClashError, NotReducibleError):
            continue
