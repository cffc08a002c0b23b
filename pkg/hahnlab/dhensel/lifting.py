"""Differential-Hensel lifting for quasi-linear differential polynomials.

With P̄ = b̄ + L̄(Y) the reduction of P, a first approximation solves
L̄(z) = −b̄ in k.  Each later step reads off the leading term r·t^γ of P(y)
and solves the γ-twist of L̄, (L̄ with ∂ replaced by ∂ + c(γ))(u) = −r, then
adds u·t^γ.  Because P̄ is linear, every partial derivative ∂P/∂Y^(i) has
residue ā_i at any y in 𝒪, so L̄ stays fixed across the loop.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Tuple, Union

from ..coeffs.operators import LinearDiffOperator, solve_linear, twist_operator
from ..coeffs.rational_function import RationalFunction
from ..defaults import LIFT_ITERATION_MULTIPLIER
from ..exceptions import (
    DomainMismatchError,
    InvariantViolationError,
    LiftIterationLimitError,
    LinearSurjectivityFailure,
    NotQuasiLinearError,
    PrecisionExhaustedError,
    UnsupportedValueGroupError,
)
from ..groups.value_group import GroupElement, GroupKind
from ..hahn.series import HahnSeries
from .diffpoly import DifferentialPolynomial, dp_evaluate, dp_reduce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LiftStep:
    """One solved residue equation: ``operator(correction) = rhs`` at level ``gamma`` (None for the first step)."""

    gamma: Optional[GroupElement]
    operator: LinearDiffOperator
    rhs: RationalFunction
    correction: RationalFunction
    residual_valuation: str


@dataclass(frozen=True)
class LiftResult:
    solution: HahnSeries
    residual: HahnSeries
    steps: Tuple[LiftStep, ...]

    @property
    def levels(self) -> List[GroupElement]:
        """Valuations of P(y) at which corrections were made, strictly increasing."""
        return [s.gamma for s in self.steps if s.gamma is not None]


def _denominator(P: DifferentialPolynomial, bound: GroupElement) -> int:
    """D with every exponent of the lift in (1/D)ℤ."""
    group = P.spec.group
    if group.kind == GroupKind.LEX:
        if group.rank > 1:
            raise UnsupportedValueGroupError(f"lifting needs an archimedean value group, got {group}")
        return 1
    if group.kind != GroupKind.Q:
        return group.denominator
    scale = bound.fraction.denominator
    for _, a in P.terms:
        for e, _ in a.terms:
            scale = lcm(scale, e.fraction.denominator)
        if a.truncation is not None:
            scale = lcm(scale, a.truncation.fraction.denominator)
    return scale


def _iteration_cap(bound: GroupElement, denominator: int) -> int:
    if isinstance(bound.value, tuple):
        size = bound.value[0]
    else:
        size = bound.value * denominator
    return max(1, int(LIFT_ITERATION_MULTIPLIER * size))


def _solve_residue(
    operator: LinearDiffOperator, rhs: RationalFunction, gamma: GroupElement
) -> RationalFunction:
    solution = solve_linear(operator, rhs)
    if solution.particular is None:
        raise LinearSurjectivityFailure(gamma, operator, rhs)
    return solution.particular


def dhensel_lift_traced(
    P: DifferentialPolynomial,
    bound: Union[GroupElement, int, Fraction, str],
    max_iterations: Optional[int] = None,
) -> LiftResult:
    """Lift a zero of P̄ to y ∈ 𝒪 with v(P(y)) ≥ bound, recording every step."""
    spec = P.spec
    bound = spec.exponent(bound)
    if not bound.is_positive():
        raise DomainMismatchError(f"lifting bound must be positive, got {bound}")
    denominator = _denominator(P, bound)
    reduction = dp_reduce(P)
    if reduction.total_degree != 1:
        raise NotQuasiLinearError(f"reduction {reduction} of {P} does not have total degree 1")
    operator = reduction.linear_operator()
    zero = spec.group.zero()

    rhs = -reduction.constant_term()
    z = _solve_residue(operator, rhs, zero)
    y = spec.constant(z)
    residual = dp_evaluate(P, y)
    steps = [LiftStep(None, operator, rhs, z, str(residual.valuation()))]
    logger.debug("dhensel_lift: step 0 solved (%s)(z) = %s, z = %s", operator, rhs, z)

    cap = max_iterations if max_iterations is not None else _iteration_cap(bound, denominator)
    previous: Optional[GroupElement] = None
    while True:
        if not residual.terms:
            if residual.truncation is None or residual.truncation >= bound:
                break
            raise PrecisionExhaustedError(
                f"P(y) is unknown from t^{residual.truncation.literal()} on, below the bound t^{bound.literal()}"
            )
        gamma, leading = residual.terms[0]
        if gamma >= bound:
            break
        if gamma <= zero or (previous is not None and gamma <= previous):
            raise InvariantViolationError(f"lifting made no progress: v(P(y)) = {gamma} after {previous}")
        if len(steps) > cap:
            raise LiftIterationLimitError(f"lifting exceeded {cap} iterations below t^{bound.literal()}")
        twisted = twist_operator(operator, spec.c(gamma))
        rhs = -leading
        u = _solve_residue(twisted, rhs, gamma)
        y = y + spec.monomial(u, gamma)
        residual = dp_evaluate(P, y)
        steps.append(LiftStep(gamma, twisted, rhs, u, str(residual.valuation())))
        logger.debug("dhensel_lift: level %s solved (%s)(u) = %s, u = %s", gamma, twisted, rhs, u)
        previous = gamma
    return LiftResult(y, residual, tuple(steps))


def dhensel_lift(
    P: DifferentialPolynomial,
    bound: Union[GroupElement, int, Fraction, str],
    max_iterations: Optional[int] = None,
) -> HahnSeries:
    return dhensel_lift_traced(P, bound, max_iterations).solution


def solve_one_unit_dagger(eps: HahnSeries, bound: Union[GroupElement, int, Fraction, str]) -> HahnSeries:
    """δ with v(δ) > 0 and (1 + δ)† = eps up to t^bound, for eps in the maximal ideal."""
    spec = eps.spec
    lower = eps.lower_bound()
    if lower is not None and not lower.is_positive():
        raise DomainMismatchError(f"{eps} is not in the maximal ideal")
    Y = DifferentialPolynomial.variable(spec)
    P = DifferentialPolynomial.variable(spec, 1) - Y * eps - eps
    delta = dhensel_lift(P, bound)
    logger.debug("solve_one_unit_dagger(%s) = %s", eps, delta)
    return delta
