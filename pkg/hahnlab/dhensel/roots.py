"""nth roots of units by Newton iteration, and constant nth roots of constants."""

import logging
from fractions import Fraction
from typing import Union

from ..coeffs.field import nth_root_coeff
from ..defaults import MAX_NEWTON_STEPS
from ..exceptions import (
    DivisionByZeroError,
    DomainMismatchError,
    InvariantViolationError,
    NoRootInResidueError,
    NotConstantError,
    PrecisionExhaustedError,
    PurityPreconditionError,
    UnsupportedValueGroupError,
)
from ..groups.value_group import GroupElement
from ..hahn.derivation import is_constant, residue
from ..hahn.series import HahnSeries

logger = logging.getLogger(__name__)

Bound = Union[GroupElement, int, Fraction, str]


def hensel_nth_root(u: HahnSeries, n: int, bound: Bound) -> HahnSeries:
    """y with v(y) = 0 and v(yⁿ − u) ≥ bound, lifting the nth root of π(u).

    For even n the residue root with positive leading coefficient is lifted.
    """
    if n < 1:
        raise DomainMismatchError("root index must be positive")
    spec = u.spec
    bound = spec.exponent(bound)
    zero = spec.group.zero()
    if u.is_zero or not u.terms or u.terms[0][0] != zero:
        raise PurityPreconditionError(f"hensel_nth_root needs a unit, v({u}) = {u.valuation()}")
    root = nth_root_coeff(residue(u), n)
    if root is None:
        raise NoRootInResidueError(f"the residue {residue(u)} has no {n}th root in {spec.field}")

    y = spec.constant(root)
    for _ in range(MAX_NEWTON_STEPS):
        error = y**n - u
        if error.is_zero:
            logger.debug("hensel_nth_root: exact root %s", y)
            return y
        lowest = error.lower_bound()
        if lowest is not None and lowest >= bound:
            return y.truncate(bound)
        if not error.terms:
            raise PrecisionExhaustedError(f"{u} is only known below t^{error.truncation.literal()}")  # type: ignore
        gamma = error.terms[0][0]
        precision = min(bound, gamma + gamma)
        derivative = (y ** (n - 1)).scale(n)
        correction = (error.truncate(precision) * derivative.inverse(precision)).truncate(precision)
        y = HahnSeries(spec, (y - correction).truncate(precision).terms)
        logger.debug("hensel_nth_root: error at t^%s, working precision t^%s", gamma.literal(), precision.literal())
    if not spec.group.archimedean:
        raise UnsupportedValueGroupError(f"Newton iteration does not reach t^{bound.literal()} in {spec.group}")
    raise PrecisionExhaustedError(f"Newton iteration exceeded {MAX_NEWTON_STEPS} steps")


def purity_witness(a: HahnSeries, b: HahnSeries, n: int, bound: Bound) -> HahnSeries:
    """w = a·y with wⁿ = b and w constant, for a constant b with v(b) = n·v(a).

    The residue root is checked before the constancy of b, so an element whose
    residue has no root fails with ``NoRootInResidueError`` first.
    """
    spec = a.spec
    bound = spec.exponent(bound)
    if a.is_zero:
        raise DivisionByZeroError("purity_witness needs a ≠ 0")
    alpha = a.order()
    if b.is_zero or not b.terms or b.order() != n * alpha:
        raise PurityPreconditionError(f"v(b) = {b.valuation()} is not {n}·v(a) = {n * alpha}")
    quotient = b * (a**n).inverse(bound - n * alpha)
    if nth_root_coeff(residue(quotient), n) is None:
        raise NoRootInResidueError(f"the residue {residue(quotient)} of b/a^{n} has no {n}th root in {spec.field}")
    if not is_constant(b):
        raise NotConstantError(f"{b} is not constant")
    y = hensel_nth_root(quotient, n, bound)
    w = a * y
    verdict = is_constant(w)
    if not verdict or w.order() != alpha:
        raise InvariantViolationError(f"purity witness {w} is not a constant of valuation {alpha}")
    logger.debug("purity_witness: w = %s (%s)", w, verdict.describe())
    return w
