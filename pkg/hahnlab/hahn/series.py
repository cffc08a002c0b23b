"""Truncated Hahn series over a coefficient field and a value group.

A series is a finite support plus an optional truncation bound γ_t: the value
is known exactly below γ_t and unknown from γ_t on.  The exact zero is the
empty support without a bound.  Bounds propagate as:

* add: the smaller of the two bounds;
* multiply: min(T_f + v(g), T_g + v(f));
* invert f = a·t^γ(1 + ε): T_f − 2γ, or an explicit precision when f is exact.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from ..cmaps import AdditiveMap, c_eval
from ..coeffs.field import CoeffField
from ..coeffs.rational_function import ONE, RationalFunction
from ..defaults import DEFAULT_TRUNCATION, MAX_EXPANSION_TERMS
from ..exceptions import (
    DivisionByZeroError,
    DomainMismatchError,
    NeedsPrecisionError,
    PrecisionExhaustedError,
    UnsupportedValueGroupError,
)
from ..groups.value_group import GroupElement, ValueGroup

logger = logging.getLogger(__name__)

Coefficient = Union[RationalFunction, int, Fraction]
Term = Tuple[GroupElement, RationalFunction]


@dataclass(frozen=True)
class FieldSpec:
    """The twisted Hahn field k((t^Γ)) with derivation ∂_c and a default truncation bound."""

    field: CoeffField
    group: ValueGroup
    cmap: AdditiveMap
    truncation: GroupElement

    def __post_init__(self) -> None:
        if self.cmap.group != self.group:
            raise DomainMismatchError(f"c is defined on {self.cmap.group}, the value group is {self.group}")
        if self.cmap.field != self.field:
            raise DomainMismatchError(f"c takes values in {self.cmap.field}, the coefficient field is {self.field}")
        if self.truncation.group != self.group:
            raise DomainMismatchError(f"truncation bound {self.truncation} is not in {self.group}")
        if not self.truncation.is_positive():
            raise DomainMismatchError(f"truncation bound must be positive, got {self.truncation}")

    @classmethod
    def build(
        cls,
        field: CoeffField,
        group: ValueGroup,
        cmap: Optional[AdditiveMap] = None,
        truncation: Union[GroupElement, int, str, None] = None,
    ) -> "FieldSpec":
        if cmap is None:
            cmap = AdditiveMap.zero(group, field)
        if truncation is None:
            truncation = DEFAULT_TRUNCATION
        if not isinstance(truncation, GroupElement):
            truncation = group.element(truncation)
        return cls(field, group, cmap, truncation)

    def c(self, gamma: GroupElement) -> RationalFunction:
        return c_eval(self.cmap, gamma)

    def exponent(self, value: Union[GroupElement, int, Fraction, str, Tuple[int, ...]]) -> GroupElement:
        if isinstance(value, GroupElement):
            if value.group != self.group:
                raise DomainMismatchError(f"{value} is not an element of {self.group}")
            return value
        return self.group.element(value)

    def zero(self) -> "HahnSeries":
        return HahnSeries(self)

    def one(self) -> "HahnSeries":
        return self.constant(ONE)

    def constant(self, value: Coefficient) -> "HahnSeries":
        return HahnSeries(self, [(self.group.zero(), self.field.element(value))])

    def monomial(self, coefficient: Coefficient, exponent: Union[GroupElement, int, Fraction, str]) -> "HahnSeries":
        return HahnSeries(self, [(self.exponent(exponent), self.field.element(coefficient))])

    def t(self, exponent: Union[GroupElement, int, Fraction, str] = 1) -> "HahnSeries":
        return self.monomial(ONE, exponent)

    def series(self, terms: Iterable[Tuple[object, Coefficient]], truncation: object = None) -> "HahnSeries":
        bound = None if truncation is None else self.exponent(truncation)  # type: ignore[arg-type]
        return HahnSeries(self, [(self.exponent(e), self.field.element(a)) for e, a in terms], bound)  # type: ignore


@dataclass(frozen=True)
class PlusInfinity:
    """Valuation of the exact zero."""

    def __str__(self) -> str:
        return "+inf"


@dataclass(frozen=True)
class AboveTruncation:
    """Valuation of a truncated series with empty support: unknown, at least ``bound``."""

    bound: GroupElement

    def __str__(self) -> str:
        return f">= {self.bound}"


Valuation = Union[GroupElement, PlusInfinity, AboveTruncation]


class HahnSeries:
    """Σ a_γ t^γ with finite support, sorted by exponent, plus an optional truncation bound."""

    __slots__ = ("spec", "terms", "truncation")

    def __init__(self, spec: FieldSpec, terms: Iterable[Term] = (), truncation: Optional[GroupElement] = None):
        collected: Dict[GroupElement, RationalFunction] = {}
        for exponent, coefficient in terms:
            if exponent.group != spec.group:
                raise DomainMismatchError(f"exponent {exponent} is not in {spec.group}")
            if truncation is not None and exponent >= truncation:
                continue
            if exponent in collected:
                collected[exponent] = collected[exponent] + coefficient
            else:
                collected[exponent] = coefficient
        self.spec = spec
        self.terms: Tuple[Term, ...] = tuple(sorted(((e, a) for e, a in collected.items() if not a.is_zero)))
        self.truncation = truncation

    # -- inspection --------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.truncation is None

    @property
    def is_zero(self) -> bool:
        """True for the exact zero only."""
        return not self.terms and self.truncation is None

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and self.truncation is None

    def valuation(self) -> Valuation:
        if self.terms:
            return self.terms[0][0]
        if self.truncation is None:
            return PlusInfinity()
        return AboveTruncation(self.truncation)

    def order(self) -> GroupElement:
        """Least exponent of the support; raises when it is not known."""
        if self.terms:
            return self.terms[0][0]
        if self.truncation is not None:
            raise NeedsPrecisionError(f"support is empty below {self.truncation}; the valuation is unknown")
        raise DivisionByZeroError("the zero series has no leading term")

    def leading_term(self) -> Term:
        self.order()
        return self.terms[0]

    def lower_bound(self) -> Optional[GroupElement]:
        """A lower bound for v(f): the valuation, or the truncation when the support is empty."""
        if self.terms:
            return self.terms[0][0]
        return self.truncation

    def coefficient(self, exponent: Union[GroupElement, int, Fraction, str]) -> RationalFunction:
        gamma = self.spec.exponent(exponent)
        if self.truncation is not None and gamma >= self.truncation:
            raise PrecisionExhaustedError(f"coefficient of t^{gamma.literal()} lies above the truncation")
        for e, a in self.terms:
            if e == gamma:
                return a
        return self.spec.field.zero()

    def truncate(self, bound: GroupElement) -> "HahnSeries":
        if self.truncation is not None and self.truncation <= bound:
            return self
        return HahnSeries(self.spec, self.terms, bound)

    def agrees_with(self, other: "HahnSeries") -> bool:
        """Equality up to the smaller of the two truncation bounds."""
        other = self._coerce(other)
        bounds = [b for b in (self.truncation, other.truncation) if b is not None]
        if not bounds:
            return self.terms == other.terms
        bound = min(bounds)
        return self.truncate(bound).terms == other.truncate(bound).terms

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: object) -> "HahnSeries":
        if isinstance(other, HahnSeries):
            if other.spec is not self.spec and other.spec != self.spec:
                raise DomainMismatchError("series over different field specs cannot be combined")
            return other
        if isinstance(other, (RationalFunction, int, Fraction)):
            return self.spec.constant(other)
        raise DomainMismatchError(f"cannot combine a series with {type(other).__name__}")

    def __add__(self, other: object) -> "HahnSeries":
        other = self._coerce(other)
        return HahnSeries(self.spec, self.terms + other.terms, _min_bound(self.truncation, other.truncation))

    __radd__ = __add__

    def __neg__(self) -> "HahnSeries":
        return HahnSeries(self.spec, [(e, -a) for e, a in self.terms], self.truncation)

    def __sub__(self, other: object) -> "HahnSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "HahnSeries":
        return self._coerce(other) + (-self)

    def __mul__(self, other: object) -> "HahnSeries":
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return self.spec.zero()
        bound = None
        if self.truncation is not None:
            bound = _min_bound(bound, self.truncation + other.lower_bound())  # type: ignore[operator]
        if other.truncation is not None:
            bound = _min_bound(bound, other.truncation + self.lower_bound())  # type: ignore[operator]
        products: List[Term] = []
        for e, a in self.terms:
            for f, b in other.terms:
                exponent = e + f
                if bound is None or exponent < bound:
                    products.append((exponent, a * b))
        return HahnSeries(self.spec, products, bound)

    __rmul__ = __mul__

    def scale(self, coefficient: Coefficient) -> "HahnSeries":
        coefficient = self.spec.field.element(coefficient)
        return HahnSeries(self.spec, [(e, a * coefficient) for e, a in self.terms], self.truncation)

    def shift(self, gamma: GroupElement) -> "HahnSeries":
        """Multiply by t^γ."""
        bound = None if self.truncation is None else self.truncation + gamma
        return HahnSeries(self.spec, [(e + gamma, a) for e, a in self.terms], bound)

    def inverse(self, precision: Optional[GroupElement] = None) -> "HahnSeries":
        """Multiplicative inverse; an exact non-monomial input is expanded below ``precision``.

        ``precision`` defaults to the field spec's truncation bound.
        """
        gamma, a = self.leading_term()
        a_inv = a.inverse()
        if self.is_monomial:
            return HahnSeries(self.spec, [(-gamma, a_inv)])
        # f = a t^γ (1 + ε) with v(ε) > 0; (1 + ε)⁻¹ is needed to relative precision R
        if self.truncation is not None:
            relative = self.truncation - gamma
        else:
            relative = (precision if precision is not None else self.spec.truncation) + gamma
        zero = self.spec.group.zero()
        if relative <= zero:
            raise NeedsPrecisionError(f"cannot invert {self} below t^{(relative - gamma).literal()}")
        epsilon = HahnSeries(self.spec, [(e - gamma, c * a_inv) for e, c in self.terms[1:]], relative)
        total = self.spec.one().truncate(relative)
        power = total
        steps = 0
        while power.terms:
            steps += 1
            if steps > MAX_EXPANSION_TERMS:
                if not self.spec.group.archimedean:
                    raise UnsupportedValueGroupError(
                        f"geometric expansion does not reach t^{relative.literal()} in {self.spec.group}"
                    )
                raise PrecisionExhaustedError(f"geometric expansion of 1/({self}) exceeded {MAX_EXPANSION_TERMS} steps")
            power = -(power * epsilon).truncate(relative)
            total = total + power
        logger.debug("inverse: %d geometric steps to relative precision %s", steps, relative)
        return total.shift(-gamma).scale(a_inv)

    def __truediv__(self, other: object) -> "HahnSeries":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: object) -> "HahnSeries":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "HahnSeries":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.spec.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison and printing -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (RationalFunction, int, Fraction)):
            other = self.spec.constant(other)
        if not isinstance(other, HahnSeries):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms and self.truncation == other.truncation

    def __hash__(self) -> int:
        return hash((self.terms, self.truncation))

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        return f"HahnSeries({self})"


def _min_bound(a: Optional[GroupElement], b: Optional[GroupElement]) -> Optional[GroupElement]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def monomial_text(gamma: GroupElement) -> str:
    literal = gamma.literal()
    return "t" if literal == "1" else f"t^{literal}"


def format_series(f: HahnSeries) -> str:
    """Canonical text: ascending exponents, ``+ O(t^γ)`` for a truncated series."""
    items: List[Tuple[bool, str]] = []
    many = len(f.terms) + (f.truncation is not None) > 1
    for exponent, a in f.terms:
        text = str(a)
        negative = text.startswith("-") and not a.needs_parentheses
        if negative:
            text = text[1:]
        if a.needs_parentheses and (many or bool(exponent)):
            text = f"({text})"
        if exponent:
            monomial = monomial_text(exponent)
            text = monomial if text == "1" else f"{text}*{monomial}"
        items.append((negative, text))
    if f.truncation is not None:
        items.append((False, f"O({monomial_text(f.truncation)})"))
    if not items:
        return "0"
    parts = [("-" if items[0][0] else "") + items[0][1]]
    for negative, text in items[1:]:
        parts.append((" - " if negative else " + ") + text)
    return "".join(parts)
