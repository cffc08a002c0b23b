"""Differential coefficient fields: ℚ with the trivial derivation and ℚ(x) with d/dx."""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from sympy import integer_nthroot

from ..exceptions import DivisionByZeroError, DomainMismatchError, ParseError
from .rational_function import (
    ONE,
    ONE_POLY,
    ZERO,
    RationalFunction,
    irreducible_factors,
    poly,
    to_fraction,
    to_rational,
)

logger = logging.getLogger(__name__)


class CoeffFieldKind(str, Enum):
    """Supported coefficient fields"""

    Q = "Q"
    QX = "Qx"


@dataclass(frozen=True, slots=True)
class CoeffField:
    kind: CoeffFieldKind

    @classmethod
    def rationals(cls) -> "CoeffField":
        return cls(CoeffFieldKind.Q)

    @classmethod
    def rational_functions(cls) -> "CoeffField":
        return cls(CoeffFieldKind.QX)

    @classmethod
    def parse(cls, text: str) -> "CoeffField":
        key = text.strip()
        for kind in CoeffFieldKind:
            if key.lower() == kind.value.lower() or (kind == CoeffFieldKind.QX and key in ("Q(x)", "Q[x]")):
                return cls(kind)
        raise ParseError(f"unknown coefficient field {text!r}", 1, 1, frozenset({"Q", "Qx"}))

    @property
    def trivial_derivation(self) -> bool:
        return self.kind == CoeffFieldKind.Q

    def __str__(self) -> str:
        return self.kind.value

    def zero(self) -> RationalFunction:
        return ZERO

    def one(self) -> RationalFunction:
        return ONE

    def element(self, value: Union[RationalFunction, int, Fraction]) -> RationalFunction:
        """Coerce into the field, rejecting non-constants in ℚ."""
        value = RationalFunction.coerce(value)
        if self.trivial_derivation and not value.is_constant:
            raise DomainMismatchError(f"{value} is not an element of Q")
        return value

    def contains(self, value: RationalFunction) -> bool:
        return not self.trivial_derivation or value.is_constant


def derive_coeff(field: CoeffField, f: RationalFunction) -> RationalFunction:
    """The field derivation: zero on ℚ, d/dx on ℚ(x)."""
    if field.trivial_derivation:
        return ZERO
    return f.derivative()


def dagger_coeff(field: CoeffField, f: RationalFunction) -> RationalFunction:
    """Logarithmic derivative f'/f."""
    if f.is_zero:
        raise DivisionByZeroError("the logarithmic derivative of 0 is undefined")
    return derive_coeff(field, f) / f


def _rational_nth_root(q: Fraction, n: int) -> Optional[Fraction]:
    if q == 0:
        return Fraction(0)
    sign = 1
    if q < 0:
        if n % 2 == 0:
            return None
        sign = -1
    num, exact_num = integer_nthroot(abs(q.numerator), n)
    den, exact_den = integer_nthroot(q.denominator, n)
    if not (exact_num and exact_den):
        return None
    return Fraction(sign * int(num), int(den))


def nth_root_coeff(u: RationalFunction, n: int) -> Optional[RationalFunction]:
    """An exact nth root of ``u`` in ℚ(x) (positive leading coefficient for even n), or None."""
    if n < 1:
        raise DomainMismatchError("root index must be positive")
    if u.is_zero:
        raise DivisionByZeroError("nth root of 0 is not defined here")
    if n == 1:
        return u
    if u.is_constant:
        root = _rational_nth_root(u.constant_value(), n)
        return None if root is None else RationalFunction.constant(root)
    lc_root = _rational_nth_root(to_fraction(u.num.LC()), n)
    if lc_root is None:
        return None
    num = poly(to_rational(lc_root))
    den = ONE_POLY
    for factor, k in irreducible_factors(u.num):
        if k % n:
            return None
        num = num * factor ** (k // n)
    for factor, k in irreducible_factors(u.den):
        if k % n:
            return None
        den = den * factor ** (k // n)
    root = RationalFunction(num, den)
    logger.debug("nth_root_coeff: %s^(1/%d) = %s", u, n, root)
    return root
