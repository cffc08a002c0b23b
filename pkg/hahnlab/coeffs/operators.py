"""Linear differential operators over the coefficient field and their rational solutions.

``solve_linear`` follows the classical rational-solutions method: a universal
denominator from indicial equations at the irreducible factors of the leading
coefficient, a degree bound from the indicial equation at infinity, then
undetermined coefficients solved exactly with sympy matrices.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ, Matrix, Poly, Symbol

from ..defaults import MAX_SOLUTION_DEGREE
from ..exceptions import CoefficientSizeError, DomainMismatchError, InvalidOperatorError
from .field import CoeffField, derive_coeff
from .rational_function import (
    ONE,
    ONE_POLY,
    ZERO,
    RationalFunction,
    X,
    irreducible_factors,
    poly,
    poly_coeffs,
    to_fraction,
    to_rational,
)

logger = logging.getLogger(__name__)

S = Symbol("s")


def format_linear_form(coeffs: Sequence[RationalFunction], variable: str = "Y") -> str:
    """Print Σ a_i Y^(i) (highest order first) in the expression grammar."""
    parts: List[str] = []
    for order in range(len(coeffs) - 1, -1, -1):
        a = coeffs[order]
        if a.is_zero:
            continue
        name = variable + "'" * order
        text = str(a)
        negative = text.startswith("-") and not a.needs_parentheses
        if negative:
            text = text[1:]
        if a.needs_parentheses:
            text = f"({text})"
        body = name if text == "1" else f"{text}*{name}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts) or "0"


@dataclass(frozen=True)
class LinearDiffOperator:
    """a₀ + a₁∂ + … + a_r∂^r over a coefficient field (trailing zeros trimmed)."""

    field: CoeffField
    coeffs: Tuple[RationalFunction, ...]

    def __post_init__(self) -> None:
        coeffs = [RationalFunction.coerce(a) for a in self.coeffs]
        for a in coeffs:
            self.field.element(a)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def derivation(cls, field: CoeffField) -> "LinearDiffOperator":
        return cls(field, (ZERO, ONE))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> RationalFunction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __call__(self, y: RationalFunction) -> RationalFunction:
        return apply_operator(self, y)

    def __str__(self) -> str:
        return format_linear_form(self.coeffs)


def apply_operator(op: LinearDiffOperator, y: RationalFunction) -> RationalFunction:
    if not op.field.contains(y):
        raise DomainMismatchError(f"{y} is not an element of {op.field}")
    total = ZERO
    derivative = y
    for i, a in enumerate(op.coeffs):
        if i:
            derivative = derive_coeff(op.field, derivative)
        if not a.is_zero:
            total = total + a * derivative
    return total


def twist_operator(op: LinearDiffOperator, c0: RationalFunction) -> LinearDiffOperator:
    """Replace ∂ by ∂ + c₀ and expand: Σ a_i (∂ + c₀)^i."""
    c0 = op.field.element(c0)
    if c0.is_zero or op.order <= 0:
        return op
    result: List[RationalFunction] = [ZERO] * (op.order + 1)
    power: List[RationalFunction] = [ONE]  # coefficients of T_i
    for i, a in enumerate(op.coeffs):
        if i:
            nxt = [ZERO] * (len(power) + 1)
            for j, t in enumerate(power):
                nxt[j] = nxt[j] + derive_coeff(op.field, t) + c0 * t
                nxt[j + 1] = nxt[j + 1] + t
            power = nxt
        if not a.is_zero:
            for j, t in enumerate(power):
                result[j] = result[j] + a * t
    return LinearDiffOperator(op.field, tuple(result))


@dataclass(frozen=True)
class LinearSolution:
    """Canonical particular solution (None if A(y) = b has none) and a kernel basis."""

    particular: Optional[RationalFunction]
    kernel: Tuple[RationalFunction, ...] = field(default_factory=tuple)

    @property
    def solvable(self) -> bool:
        return self.particular is not None


def solve_linear(op: LinearDiffOperator, b: RationalFunction) -> LinearSolution:
    if op.is_zero:
        raise InvalidOperatorError("cannot solve with the zero operator")
    b = op.field.element(b)
    if op.field.trivial_derivation:
        a0 = op.coefficient(0)
        if not a0.is_zero:
            return LinearSolution(b / a0)
        return LinearSolution(ZERO if b.is_zero else None, (ONE,))
    if op.order == 0:
        return LinearSolution(b / op.coeffs[0])
    if all(a.is_constant for a in op.coeffs) and not op.coeffs[0].is_zero and b.is_polynomial:
        return LinearSolution(_solve_constant_coefficients(op, b))
    return _solve_rational(op, b)


def _solve_constant_coefficients(op: LinearDiffOperator, b: RationalFunction) -> RationalFunction:
    """Unique polynomial solution when a₀ ≠ 0 and every aᵢ is a rational constant."""
    a = [c.constant_value() for c in op.coeffs]
    rhs = poly_coeffs(b.num)
    n = len(rhs) - 1
    y = [Fraction(0)] * (n + 1)
    for j in range(n, -1, -1):
        acc = rhs[j]
        for i in range(1, len(a)):
            if j + i <= n and a[i]:
                acc -= a[i] * Fraction(factorial(j + i), factorial(j)) * y[j + i]
        y[j] = acc / a[0]
    return RationalFunction.from_coeffs(y)


# ---------------------------------------------------------------------------
# Rational solutions over ℚ(x)
# ---------------------------------------------------------------------------


def _falling(i: int) -> Poly:
    result = Poly(1, S, domain=QQ)
    for k in range(i):
        result = result * Poly(S - k, S, domain=QQ)
    return result


def _integer_roots(polys: Sequence[Poly]) -> List[int]:
    """Common integer roots of nonzero polynomials in s."""
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        return []
    common = nonzero[0]
    for p in nonzero[1:]:
        common = common.gcd(p)
    if common.degree() <= 0:
        return []
    roots = []
    for factor, _ in common.factor_list()[1]:
        if factor.degree() == 1:
            c1, c0 = factor.all_coeffs()
            root = to_fraction(-c0 / c1)
            if root.denominator == 1:
                roots.append(int(root))
    return sorted(roots)


def _valuation_at(p: Poly, q: Poly) -> int:
    v = 0
    while True:
        quotient, remainder = p.div(q)
        if not remainder.is_zero:
            return v
        p = quotient
        v += 1


def _pole_bound(coeffs: Dict[int, Poly], beta: Poly, q: Poly) -> int:
    """Maximal pole order at the irreducible q allowed by the indicial equation."""
    valuations = {i: _valuation_at(p, q) for i, p in coeffs.items()}
    m = min(v - i for i, v in valuations.items())
    dq = q.diff(X)
    columns: Dict[int, Poly] = {}
    for i, v in valuations.items():
        if v - i != m:
            continue
        local = (coeffs[i].exquo(q**v) * dq**i).rem(q)
        falling = _falling(i)
        for degree, c in enumerate(poly_coeffs(local)):
            if c:
                term = falling.mul_ground(to_rational(c))
                columns[degree] = columns[degree] + term if degree in columns else term
    candidates = [-root for root in _integer_roots(list(columns.values())) if root < 0]
    if not beta.is_zero:
        candidates.append(m - _valuation_at(beta, q))
    bound = max([0] + candidates)
    logger.debug("pole bound %d at %s (indicial shift %d)", bound, q.as_expr(), m)
    return bound


def _degree_bound(coeffs: Dict[int, Poly], beta: Poly) -> Optional[int]:
    """Largest possible degree of a rational solution (num degree minus den degree)."""
    top = max(p.degree() - i for i, p in coeffs.items())
    indicial = Poly(0, S, domain=QQ)
    for i, p in coeffs.items():
        if p.degree() - i == top:
            indicial = indicial + _falling(i).mul_ground(p.LC())
    candidates = _integer_roots([indicial])
    if not beta.is_zero:
        candidates.append(beta.degree() - top)
    return max(candidates) if candidates else None


def _solve_rational(op: LinearDiffOperator, b: RationalFunction) -> LinearSolution:
    common = ONE_POLY
    for a in list(op.coeffs) + [b]:
        common = common.lcm(a.den)
    coeffs = {i: (a.num * common.exquo(a.den)) for i, a in enumerate(op.coeffs) if not a.is_zero}
    beta = b.num * common.exquo(b.den)
    leading = coeffs[op.order]

    denominator = ONE_POLY
    for q, _ in irreducible_factors(leading):
        e = _pole_bound(coeffs, beta, q)
        if e:
            denominator = denominator * q**e
    shift = _degree_bound(coeffs, beta)
    if shift is None:
        return LinearSolution(ZERO if b.is_zero else None)
    top = shift + denominator.degree()
    if top < 0:
        return LinearSolution(ZERO if b.is_zero else None)
    if top > MAX_SOLUTION_DEGREE:
        raise CoefficientSizeError(f"rational solution ansatz of degree {top} exceeds the solver limit")
    logger.debug("solve_linear: denominator %s, numerator degree <= %d", denominator.as_expr(), top)

    basis = [RationalFunction(poly(X**j), denominator) for j in range(top + 1)]
    images = [apply_operator(op, f) for f in basis]
    lcd = b.den
    for image in images:
        lcd = lcd.lcm(image.den)
    columns = [poly_coeffs(image.num * lcd.exquo(image.den)) for image in images]
    target = poly_coeffs(b.num * lcd.exquo(b.den))
    height = max([len(c) for c in columns] + [len(target), 1])

    def entry(vector: List[Fraction], k: int) -> object:
        return to_rational(vector[k]) if k < len(vector) else 0

    system = Matrix(height, top + 1, lambda r, c: entry(columns[c], r))
    rhs = Matrix(height, 1, lambda r, _: entry(target, r))
    reduced, pivots = system.row_join(rhs).rref()
    kernel = tuple(_combine(basis, vector) for vector in system.nullspace())
    if top + 1 in pivots:
        return LinearSolution(None, kernel)
    values = [Fraction(0)] * (top + 1)
    for row, col in enumerate(pivots):
        values[col] = to_fraction(reduced[row, top + 1])
    particular = _combine(basis, values)
    return LinearSolution(particular, kernel)


def _combine(basis: Sequence[RationalFunction], vector: Sequence[object]) -> RationalFunction:
    total = ZERO
    for f, c in zip(basis, vector):
        c = c if isinstance(c, Fraction) else to_fraction(c)
        if c:
            total = total + f * c
    return total
