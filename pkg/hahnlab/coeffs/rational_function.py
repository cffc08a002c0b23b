"""Exact rational functions over ℚ in one variable ``x``.

Values are kept canonical: coprime numerator and denominator, monic
denominator, zero represented as 0/1.  Polynomial arithmetic is delegated to
sympy ``Poly`` over ``QQ``.
"""

from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from sympy import QQ, Poly, Rational, Symbol

from ..defaults import MAX_FACTOR_DEGREE
from ..exceptions import CoefficientSizeError, DivisionByZeroError, DomainMismatchError

X = Symbol("x")

Scalar = Union[int, Fraction]


def to_rational(value: Scalar) -> Rational:
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def to_fraction(value: object) -> Fraction:
    """Convert a sympy rational number to ``Fraction``."""
    return Fraction(int(value.p), int(value.q))  # type: ignore[attr-defined]


def poly(value: object) -> Poly:
    if isinstance(value, Fraction):
        value = to_rational(value)
    return Poly(value, X, domain=QQ)


def poly_from_coeffs(coeffs: Sequence[Scalar]) -> Poly:
    """Polynomial from ascending coefficients."""
    return Poly.from_list([to_rational(c) for c in reversed(list(coeffs))] or [0], X, domain=QQ)


def poly_coeffs(p: Poly) -> List[Fraction]:
    """Ascending coefficients as fractions."""
    if p.is_zero:
        return []
    return [to_fraction(c) for c in reversed(p.all_coeffs())]


def poly_key(p: Poly) -> Tuple[Fraction, ...]:
    return tuple(poly_coeffs(p))


ZERO_POLY = poly(0)
ONE_POLY = poly(1)


def format_polynomial(p: Poly) -> str:
    coeffs = poly_coeffs(p)
    if not coeffs:
        return "0"
    parts: List[str] = []
    for degree in range(len(coeffs) - 1, -1, -1):
        c = coeffs[degree]
        if c == 0:
            continue
        monomial = "" if degree == 0 else ("x" if degree == 1 else f"x^{degree}")
        magnitude = abs(c)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


def term_count(p: Poly) -> int:
    return sum(1 for c in poly_coeffs(p) if c)


@lru_cache(maxsize=4096)
def _factor_cached(key: Tuple[Fraction, ...]) -> Tuple[Tuple[Tuple[Fraction, ...], int], ...]:
    p = poly_from_coeffs(key)
    _, factors = p.factor_list()
    monic = [(f.monic(), k) for f, k in factors]
    monic.sort(key=lambda item: (item[0].degree(), [str(c) for c in poly_coeffs(item[0])]))
    return tuple((poly_key(f), k) for f, k in monic)


def irreducible_factors(p: Poly) -> List[Tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, sorted by degree then coefficients."""
    if p.is_zero:
        raise DivisionByZeroError("cannot factor the zero polynomial")
    if p.degree() > MAX_FACTOR_DEGREE:
        raise CoefficientSizeError(f"polynomial of degree {p.degree()} exceeds the factorization limit")
    if p.degree() <= 0:
        return []
    return [(poly_from_coeffs(key), k) for key, k in _factor_cached(poly_key(p))]


class RationalFunction:
    """An element of ℚ(x) in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = ONE_POLY, normalized: bool = False):
        if not normalized:
            num, den = _normalize(num, den)
        self.num: Poly = num
        self.den: Poly = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def coerce(cls, value: Union["RationalFunction", Scalar]) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise DomainMismatchError(f"cannot use {type(value).__name__} as a coefficient")

    @classmethod
    def constant(cls, value: Scalar) -> "RationalFunction":
        return cls(poly(Fraction(value)), ONE_POLY, normalized=True)

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(poly(X), ONE_POLY, normalized=True)

    @classmethod
    def from_polynomial(cls, p: Poly) -> "RationalFunction":
        return cls(p, ONE_POLY, normalized=True)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar]) -> "RationalFunction":
        return cls.from_polynomial(poly_from_coeffs(coeffs))

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return bool(self.num.is_zero)

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    @property
    def is_constant(self) -> bool:
        return self.is_polynomial and self.num.degree() <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise DomainMismatchError(f"{self} is not a rational constant")
        return Fraction(0) if self.is_zero else to_fraction(self.num.LC())

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Union["RationalFunction", Scalar]) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.den == other.den:
            if self.is_polynomial:
                return RationalFunction(self.num + other.num, self.den, normalized=True)
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, normalized=True)

    def __sub__(self, other: Union["RationalFunction", Scalar]) -> "RationalFunction":
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other: Union["RationalFunction", Scalar]) -> "RationalFunction":
        return RationalFunction.coerce(other) + (-self)

    def __mul__(self, other: Union["RationalFunction", Scalar]) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return RationalFunction(self.num.mul_ground(to_rational(other)), self.den, normalized=True)
        other = RationalFunction.coerce(other)
        if self.is_zero or other.is_zero:
            return ZERO
        if self.is_polynomial and other.is_polynomial:
            return RationalFunction(self.num * other.num, ONE_POLY, normalized=True)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise DivisionByZeroError("division by zero in k")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: Union["RationalFunction", Scalar]) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZeroError("division by zero in k")
            return self * (1 / Fraction(other))
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other: Union["RationalFunction", Scalar]) -> "RationalFunction":
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction(self.num**exponent, self.den**exponent, normalized=True)

    def derivative(self) -> "RationalFunction":
        """Quotient-rule derivative d/dx."""
        if self.is_constant:
            return ZERO
        if self.is_polynomial:
            return RationalFunction(self.num.diff(X), ONE_POLY, normalized=True)
        return RationalFunction(self.num.diff(X) * self.den - self.num * self.den.diff(X), self.den**2)

    def polynomial_part(self) -> Tuple[Poly, "RationalFunction"]:
        """Split into (polynomial part, proper part)."""
        quotient, remainder = self.num.div(self.den)
        return quotient, RationalFunction(remainder, self.den, normalized=True)

    # -- comparison and printing ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((poly_key(self.num), poly_key(self.den)))

    def __str__(self) -> str:
        numerator = format_polynomial(self.num)
        if self.is_polynomial:
            return numerator
        if term_count(self.num) > 1:
            numerator = f"({numerator})"
        denominator = format_polynomial(self.den)
        if term_count(self.den) > 1:
            denominator = f"({denominator})"
        return f"{numerator}/{denominator}"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    @property
    def needs_parentheses(self) -> bool:
        """True when the printed form has a top-level sum."""
        return self.is_polynomial and term_count(self.num) > 1


def _normalize(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    if den.is_zero:
        raise DivisionByZeroError("zero denominator")
    if num.is_zero:
        return ZERO_POLY, ONE_POLY
    if den.degree() > 0:
        g = num.gcd(den)
        if g.degree() > 0:
            num = num.exquo(g)
            den = den.exquo(g)
    lc = den.LC()
    if lc != 1:
        num = num.quo_ground(lc)
        den = den.monic()
    return num, den


ZERO = RationalFunction(ZERO_POLY, ONE_POLY, normalized=True)
ONE = RationalFunction(ONE_POLY, ONE_POLY, normalized=True)

