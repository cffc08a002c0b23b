"""Evaluate parsed expressions in a field spec.

Values are promoted along k → K → K{Y}: rational functions, Hahn series,
differential polynomials.
"""

from fractions import Fraction
from typing import Union

from ..coeffs.field import CoeffField
from ..coeffs.rational_function import RationalFunction
from ..dhensel.diffpoly import DifferentialPolynomial
from ..exceptions import DomainMismatchError
from ..hahn.series import FieldSpec, HahnSeries
from .parser import BigO, Neg, Node, Num, Pow, Var, integer_exponent, parse_expression

Value = Union[RationalFunction, HahnSeries, DifferentialPolynomial]


def _level(value: Value) -> int:
    if isinstance(value, DifferentialPolynomial):
        return 2
    if isinstance(value, HahnSeries):
        return 1
    return 0


def _promote(value: Value, level: int, spec: FieldSpec) -> Value:
    if level >= 1 and isinstance(value, RationalFunction):
        value = spec.constant(value)
    if level >= 2 and isinstance(value, HahnSeries):
        value = DifferentialPolynomial.constant(spec, value)
    return value


def evaluate_coefficient(node: Node, field: CoeffField) -> RationalFunction:
    """Evaluate an expression that may only mention ``x``."""
    if isinstance(node, Num):
        return RationalFunction.constant(node.value)
    if isinstance(node, Var):
        if node.name != "x":
            raise DomainMismatchError(f"{node.name} is not allowed in a coefficient")
        return field.element(RationalFunction.x())
    if isinstance(node, BigO):
        raise DomainMismatchError("O(...) is not allowed in a coefficient")
    if isinstance(node, Neg):
        return -evaluate_coefficient(node.operand, field)
    if isinstance(node, Pow):
        n = integer_exponent(node.exponent)
        if n is None:
            raise DomainMismatchError("coefficients only take integer powers")
        return evaluate_coefficient(node.base, field) ** n
    left = evaluate_coefficient(node.left, field)
    right = evaluate_coefficient(node.right, field)
    return _apply(node.op, left, right)  # type: ignore[return-value]


def _apply(op: str, left: Value, right: Value) -> Value:
    if op == "+":
        return left + right  # type: ignore[operator]
    if op == "-":
        return left - right  # type: ignore[operator]
    if op == "*":
        return left * right  # type: ignore[operator]
    if isinstance(right, DifferentialPolynomial):
        raise DomainMismatchError("cannot divide by a differential polynomial")
    if isinstance(left, DifferentialPolynomial):
        inverse = right.inverse() if isinstance(right, HahnSeries) else left.spec.constant(right).inverse()
        return left * inverse
    return left / right  # type: ignore[operator]


def evaluate(node: Node, spec: FieldSpec) -> Value:
    if isinstance(node, Num):
        return RationalFunction.constant(node.value)
    if isinstance(node, Var):
        if node.name == "x":
            return spec.field.element(RationalFunction.x())
        if node.name == "t":
            return spec.t(1)
        return DifferentialPolynomial.variable(spec, node.order)
    if isinstance(node, BigO):
        return HahnSeries(spec, (), spec.exponent(node.exponent))
    if isinstance(node, Neg):
        return -evaluate(node.operand, spec)
    if isinstance(node, Pow):
        if isinstance(node.base, Var) and node.base.name == "t":
            return spec.t(node.exponent)  # type: ignore[arg-type]
        n = integer_exponent(node.exponent)
        if n is None:
            raise DomainMismatchError("only t takes fractional or tuple exponents")
        base = evaluate(node.base, spec)
        return base**n  # type: ignore[operator]
    left = evaluate(node.left, spec)
    right = evaluate(node.right, spec)
    level = max(_level(left), _level(right))
    return _apply(node.op, _promote(left, level, spec), _promote(right, level, spec))


def evaluate_text(text: str, spec: FieldSpec) -> Value:
    return evaluate(parse_expression(text).tree, spec)


def as_series(value: Value, spec: FieldSpec) -> HahnSeries:
    if isinstance(value, DifferentialPolynomial):
        raise DomainMismatchError("expected a series, got a differential polynomial")
    return _promote(value, 1, spec)  # type: ignore[return-value]


def as_coefficient(value: Value, spec: FieldSpec) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return spec.field.element(value)
    if isinstance(value, HahnSeries) and value.is_exact and all(not e for e, _ in value.terms):
        return value.coefficient(spec.group.zero())
    raise DomainMismatchError(f"expected an element of {spec.field}, got {value}")


def as_polynomial(value: Value, spec: FieldSpec) -> DifferentialPolynomial:
    return _promote(value, 2, spec)  # type: ignore[return-value]


def parse_series(text: str, spec: FieldSpec) -> HahnSeries:
    return as_series(evaluate_text(text, spec), spec)


def parse_coefficient(text: str, field: CoeffField) -> RationalFunction:
    return evaluate_coefficient(parse_expression(text).tree, field)


def parse_polynomial(text: str, spec: FieldSpec) -> DifferentialPolynomial:
    return as_polynomial(evaluate_text(text, spec), spec)


def parse_fraction(text: str) -> Fraction:
    """A rational literal such as ``3``, ``-1/2`` or ``(2/3)``."""
    value = parse_coefficient(text, CoeffField.rationals())
    return value.constant_value()
