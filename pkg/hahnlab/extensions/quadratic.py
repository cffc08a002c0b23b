"""Quadratic extensions F = K(w) with w² = m for a monomial m of K.

The derivation extends by w' = (m†/2)·w, so
(a + b·w)' = a' + (b' + b·m†/2)·w.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from ..coeffs.field import nth_root_coeff
from ..coeffs.rational_function import RationalFunction
from ..exceptions import DomainMismatchError
from ..groups.value_group import GroupElement
from ..hahn.derivation import ConstancyVerdict, dagger_series, derive_series
from ..hahn.series import FieldSpec, HahnSeries, format_series

logger = logging.getLogger(__name__)

HalfValue = Union[Fraction, Tuple[Fraction, ...]]


def _half(gamma: GroupElement) -> HalfValue:
    if isinstance(gamma.value, tuple):
        return tuple(Fraction(v, 2) for v in gamma.value)
    return gamma.value / 2


def _as_half(gamma: GroupElement) -> HalfValue:
    if isinstance(gamma.value, tuple):
        return tuple(Fraction(v) for v in gamma.value)
    return gamma.value


def _add_half(a: HalfValue, b: HalfValue) -> HalfValue:
    if isinstance(a, tuple):
        return tuple(x + y for x, y in zip(a, b))  # type: ignore[arg-type]
    return a + b  # type: ignore[operator]


def format_half_value(value: HalfValue) -> str:
    if isinstance(value, tuple):
        return "(" + ",".join(str(v) for v in value) + ")"
    return str(value)


def is_square_monomial(m: HahnSeries) -> bool:
    """True when m = (d·t^δ)² for some d ∈ k and δ ∈ Γ."""
    gamma, d = m.leading_term()
    try:
        gamma.divided_by(2)
    except DomainMismatchError:
        return False
    return nth_root_coeff(d, 2) is not None


@dataclass(frozen=True, eq=False)
class QuadExtElement:
    """a + b·w with w² = m."""

    a: HahnSeries
    b: HahnSeries
    m: HahnSeries

    def __post_init__(self) -> None:
        if not self.m.is_monomial:
            raise DomainMismatchError(f"the extension datum {self.m} must be a single exact term")
        if not (self.a.spec == self.b.spec == self.m.spec):
            raise DomainMismatchError("components of an extension element must share a field spec")

    @classmethod
    def base(cls, a: HahnSeries, m: HahnSeries) -> "QuadExtElement":
        return cls(a, a.spec.zero(), m)

    @classmethod
    def generator(cls, m: HahnSeries) -> "QuadExtElement":
        """w itself."""
        return cls(m.spec.zero(), m.spec.one(), m)

    @property
    def spec(self) -> FieldSpec:
        return self.a.spec

    @property
    def proper(self) -> bool:
        """False when m is already a square in K, so w does not generate a proper extension."""
        return not is_square_monomial(self.m)

    @property
    def w_dagger(self) -> RationalFunction:
        """w† = m†/2, an element of k."""
        return dagger_series(self.m).coefficient(self.spec.group.zero()) / 2

    def _check(self, other: "QuadExtElement") -> "QuadExtElement":
        if not isinstance(other, QuadExtElement):
            raise DomainMismatchError(f"cannot combine an extension element with {type(other).__name__}")
        if other.m != self.m:
            raise DomainMismatchError("elements of different quadratic extensions")
        return other

    def __add__(self, other: "QuadExtElement") -> "QuadExtElement":
        other = self._check(other)
        return QuadExtElement(self.a + other.a, self.b + other.b, self.m)

    def __neg__(self) -> "QuadExtElement":
        return QuadExtElement(-self.a, -self.b, self.m)

    def __sub__(self, other: "QuadExtElement") -> "QuadExtElement":
        return self + (-self._check(other))

    def __mul__(self, other: "QuadExtElement") -> "QuadExtElement":
        other = self._check(other)
        return QuadExtElement(self.a * other.a + self.b * other.b * self.m, self.a * other.b + self.b * other.a, self.m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadExtElement):
            return NotImplemented
        return self.m == other.m and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.m))

    def agrees_with(self, other: "QuadExtElement") -> bool:
        other = self._check(other)
        return self.a.agrees_with(other.a) and self.b.agrees_with(other.b)

    def valuation(self) -> HalfValue:
        """min(v(a), v(b) + v(m)/2) in Γ ⊗ ℤ[1/2]."""
        candidates = []
        if self.a.terms:
            candidates.append(_as_half(self.a.order()))
        if self.b.terms:
            candidates.append(_add_half(_as_half(self.b.order()), _half(self.m.order())))
        if not candidates:
            raise DomainMismatchError(f"{self} has no known leading term")
        return min(candidates)  # type: ignore[type-var]

    def __str__(self) -> str:
        if not self.b.terms and self.b.is_exact:
            return format_series(self.a)
        b_text = format_series(self.b)
        if len(self.b.terms) + (not self.b.is_exact) > 1 or b_text.startswith("-"):
            b_text = f"({b_text})"
        w_text = "w" if b_text == "1" else f"{b_text}*w"
        if self.a.is_zero:
            return w_text
        return f"{format_series(self.a)} + {w_text}"


def ext_derive(z: QuadExtElement) -> QuadExtElement:
    b_part = derive_series(z.b) + z.b.scale(z.w_dagger)
    return QuadExtElement(derive_series(z.a), b_part, z.m)


def ext_is_constant(z: QuadExtElement) -> ConstancyVerdict:
    derivative = ext_derive(z)
    bounds = [b for b in (derivative.a.truncation, derivative.b.truncation) if b is not None]
    up_to = min(bounds) if bounds else None
    for part in (derivative.a, derivative.b):
        if part.terms:
            return ConstancyVerdict(False, up_to, part.terms[0][0])
    return ConstancyVerdict(True, up_to)
