"""Differential polynomials over the valuation ring and their reductions.

A monomial is an exponent vector (e₀, …, e_r) over Y, Y', …, Y^(r) with
trailing zeros trimmed; the empty vector is the constant monomial.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..coeffs.field import CoeffField
from ..coeffs.operators import LinearDiffOperator
from ..coeffs.rational_function import ZERO, RationalFunction
from ..exceptions import DomainMismatchError, PrecisionExhaustedError
from ..groups.value_group import GroupElement
from ..hahn.derivation import derive_series, residue
from ..hahn.series import FieldSpec, HahnSeries

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


def _trim(monomial: Sequence[int]) -> Monomial:
    values = list(monomial)
    if any(v < 0 for v in values):
        raise DomainMismatchError(f"negative exponent in differential monomial {tuple(values)}")
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def monomial_degree(monomial: Monomial) -> int:
    return sum(monomial)


def _add_monomials(a: Monomial, b: Monomial) -> Monomial:
    width = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(width))


def format_monomial(monomial: Monomial) -> str:
    factors = []
    for order, power in enumerate(monomial):
        if power:
            name = "Y" + "'" * order
            factors.append(name if power == 1 else f"{name}^{power}")
    return "*".join(factors)


def _print_order(monomial: Monomial, width: int) -> Tuple[int, List[int]]:
    padded = list(monomial) + [0] * (width - len(monomial))
    return -monomial_degree(monomial), [-v for v in reversed(padded)]


def _format_terms(items: Sequence[Tuple[Monomial, str, bool, bool]]) -> str:
    """Join (monomial, coefficient text, negative, needs parentheses) items highest degree first."""
    if not items:
        return "0"
    width = max(len(m) for m, _, _, _ in items)
    parts: List[str] = []
    for monomial, text, negative, compound in sorted(items, key=lambda item: _print_order(item[0], width)):
        name = format_monomial(monomial)
        if compound and (name or len(items) > 1):
            text = f"({text})"
        if name:
            body = name if text == "1" else f"{text}*{name}"
        else:
            body = text
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


Scalar = Union[HahnSeries, RationalFunction, int, Fraction]


class DifferentialPolynomial:
    """P = Σ a_m · Y^m with Hahn series coefficients a_m."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: FieldSpec, terms: Iterable[Tuple[Sequence[int], HahnSeries]] = ()):
        collected: Dict[Monomial, HahnSeries] = {}
        for monomial, coefficient in terms:
            key = _trim(monomial)
            if coefficient.spec != spec:
                raise DomainMismatchError("coefficient series over a different field spec")
            collected[key] = collected[key] + coefficient if key in collected else coefficient
        self.spec = spec
        self.terms: Tuple[Tuple[Monomial, HahnSeries], ...] = tuple(
            sorted((m, a) for m, a in collected.items() if not a.is_zero)
        )

    @classmethod
    def variable(cls, spec: FieldSpec, order: int = 0) -> "DifferentialPolynomial":
        """Y^(order)."""
        return cls(spec, [((0,) * order + (1,), spec.one())])

    @classmethod
    def constant(cls, spec: FieldSpec, value: Scalar) -> "DifferentialPolynomial":
        if not isinstance(value, HahnSeries):
            value = spec.constant(value)
        return cls(spec, [((), value)])

    @property
    def order(self) -> int:
        return max([len(m) - 1 for m, _ in self.terms] + [0])

    @property
    def total_degree(self) -> int:
        """Largest monomial degree; -1 for the zero polynomial."""
        return max([monomial_degree(m) for m, _ in self.terms] + [-1])

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: Sequence[int]) -> HahnSeries:
        key = _trim(monomial)
        for m, a in self.terms:
            if m == key:
                return a
        return self.spec.zero()

    def _coerce(self, other: object) -> "DifferentialPolynomial":
        if isinstance(other, DifferentialPolynomial):
            if other.spec != self.spec:
                raise DomainMismatchError("differential polynomials over different field specs")
            return other
        if isinstance(other, (HahnSeries, RationalFunction, int, Fraction)):
            return DifferentialPolynomial.constant(self.spec, other)
        raise DomainMismatchError(f"cannot combine a differential polynomial with {type(other).__name__}")

    def __add__(self, other: object) -> "DifferentialPolynomial":
        other = self._coerce(other)
        return DifferentialPolynomial(self.spec, list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self) -> "DifferentialPolynomial":
        return DifferentialPolynomial(self.spec, [(m, -a) for m, a in self.terms])

    def __sub__(self, other: object) -> "DifferentialPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "DifferentialPolynomial":
        return self._coerce(other) + (-self)

    def __mul__(self, other: object) -> "DifferentialPolynomial":
        other = self._coerce(other)
        products = [(_add_monomials(m, n), a * b) for m, a in self.terms for n, b in other.terms]
        return DifferentialPolynomial(self.spec, products)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "DifferentialPolynomial":
        if n < 0:
            raise DomainMismatchError("differential polynomials have no negative powers")
        result = DifferentialPolynomial.constant(self.spec, 1)
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, y: HahnSeries) -> HahnSeries:
        return dp_evaluate(self, y)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferentialPolynomial):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        items = []
        for monomial, a in self.terms:
            text = str(a)
            simple = len(a.terms) == 1 and a.truncation is None
            negative = simple and text.startswith("-") and not a.terms[0][1].needs_parentheses
            if negative:
                text = text[1:]
            items.append((monomial, text, negative, not simple or a.terms[0][1].needs_parentheses))
        return _format_terms(items)

    def __repr__(self) -> str:
        return f"DifferentialPolynomial({self})"


class ResidueDiffPolynomial:
    """An element of k{Y}: the coefficientwise residue of a differential polynomial."""

    __slots__ = ("field", "terms")

    def __init__(self, field: CoeffField, terms: Iterable[Tuple[Sequence[int], RationalFunction]] = ()):
        collected: Dict[Monomial, RationalFunction] = {}
        for monomial, coefficient in terms:
            key = _trim(monomial)
            collected[key] = collected.get(key, ZERO) + coefficient
        self.field = field
        self.terms: Tuple[Tuple[Monomial, RationalFunction], ...] = tuple(
            sorted((m, a) for m, a in collected.items() if not a.is_zero)
        )

    @property
    def total_degree(self) -> int:
        return max([monomial_degree(m) for m, _ in self.terms] + [-1])

    def linear_operator(self) -> LinearDiffOperator:
        """L̄ = Σ ā_i ∂^i from the degree-one monomials."""
        coeffs: Dict[int, RationalFunction] = {}
        for m, a in self.terms:
            if monomial_degree(m) == 1:
                coeffs[len(m) - 1] = a
        width = max(coeffs) + 1 if coeffs else 0
        return LinearDiffOperator(self.field, tuple(coeffs.get(i, ZERO) for i in range(width)))

    def constant_term(self) -> RationalFunction:
        for m, a in self.terms:
            if not m:
                return a
        return ZERO

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ResidueDiffPolynomial):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        items = []
        for monomial, a in self.terms:
            text = str(a)
            negative = text.startswith("-") and not a.needs_parentheses
            items.append((monomial, text[1:] if negative else text, negative, a.needs_parentheses))
        return _format_terms(items)


def dp_evaluate(
    P: DifferentialPolynomial, y: HahnSeries, precision: Optional[GroupElement] = None
) -> HahnSeries:
    """P(y) using iterated ∂_c; raises when the result is not known below ``precision``."""
    if y.spec != P.spec:
        raise DomainMismatchError("cannot evaluate a differential polynomial at a series of another spec")
    derivatives = [y]
    for _ in range(P.order):
        derivatives.append(derive_series(derivatives[-1]))
    total = P.spec.zero()
    for monomial, a in P.terms:
        value = a
        for order, power in enumerate(monomial):
            if power:
                value = value * derivatives[order] ** power
        total = total + value
    if precision is not None and not total.terms and total.truncation is not None and total.truncation < precision:
        raise PrecisionExhaustedError(
            f"P(y) is only known below t^{total.truncation.literal()}, t^{precision.literal()} was requested"
        )
    return total


def dp_reduce(P: DifferentialPolynomial) -> ResidueDiffPolynomial:
    return ResidueDiffPolynomial(P.spec.field, [(m, residue(a)) for m, a in P.terms])


def is_quasi_linear(P: DifferentialPolynomial) -> bool:
    """True iff the reduction has total degree exactly one."""
    return dp_reduce(P).total_degree == 1
