"""Exact ground fields: the rationals and prime fields GF(p).

Scalars are plain Python values: ``fractions.Fraction`` over Q (always
reduced, sign on the numerator) and ``int`` residues in ``[0, p)`` over GF(p).
Both forms are canonical, so scalar equality is ``==``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from sympy import isprime

from ..errors import BadParamsError, NotReducibleError, ParseError

Scalar = Union[Fraction, int]

_SCALAR_RE = re.compile(r"^([+-]?)(\d+)(?:/(\d+))?$")
_MAX_PRIME = 2**31


@dataclass(frozen=True)
class FieldSpec:
    """Q when ``characteristic == 0``, otherwise GF(characteristic)."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p == 0:
            return
        if not (2 <= p < _MAX_PRIME) or not isprime(p):
            raise BadParamsError(f"GF(p) needs a prime 2 <= p < 2^31, got {p}", p=p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(int(p))

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    @property
    def label(self) -> str:
        return "Q" if self.is_rational else f"GF({self.characteristic})"

    def __str__(self) -> str:
        return self.label

    # -- constants and coercion -------------------------------------------

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.is_rational else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.is_rational else 1

    def __call__(self, value: Union[int, Fraction, str]) -> Scalar:
        return self.coerce(value)

    def coerce(self, value: Union[int, Fraction, str]) -> Scalar:
        """Map an integer, fraction or scalar string into the field."""
        if isinstance(value, str):
            return self.parse(value)
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise NotReducibleError(
                    f"{value} has a denominator divisible by {p}", value=str(value), p=p
                )
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def parse(self, text: str) -> Scalar:
        """Parse ``[sign]int[/positive int]`` exactly."""
        match = _SCALAR_RE.match(text.strip())
        if not match:
            raise ParseError(f"malformed scalar {text!r}")
        sign, num, den = match.groups()
        if den is not None and int(den) == 0:
            raise ParseError(f"zero denominator in scalar {text!r}")
        value = Fraction(int(num), int(den) if den else 1)
        if sign == "-":
            value = -value
        return self.coerce(value)

    def format(self, a: Scalar) -> str:
        if self.is_rational:
            a = Fraction(a)
            if a.denominator == 1:
                return str(a.numerator)
            return f"{a.numerator}/{a.denominator}"
        return str(int(a))

    def elements(self) -> Iterator[Scalar]:
        if self.is_rational:
            raise BadParamsError("Q has no finite element enumeration")
        return iter(range(self.characteristic))

    def lift(self, a: Scalar) -> int:
        """Integer representative of a GF(p) residue, centred on 0."""
        a = int(a)
        p = self.characteristic
        return a - p if a > p // 2 else a

    # -- arithmetic --------------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a - b) % self.characteristic
        return a - b

    def neg(self, a: Scalar) -> Scalar:
        if self.characteristic:
            return -a % self.characteristic
        return -a

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return a * b % self.characteristic
        return a * b

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(int(a), -1, self.characteristic)
        return 1 / Fraction(a)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def dot(self, u, v) -> Scalar:
        total = sum(a * b for a, b in zip(u, v))
        if self.characteristic:
            return total % self.characteristic
        return Fraction(total)


RATIONALS = FieldSpec.rationals()
