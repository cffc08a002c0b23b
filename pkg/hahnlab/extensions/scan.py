"""Valuations of constants in F = K(√(s·t)) over the two-layer tower ℚ(x)((s))((t)).

The tower is flattened to a single twisted Hahn field over Γ = ℤ² with the
lexicographic order, coordinates (t-exponent, s-exponent); the outer layer
has c_t = 0 and the inner layer c_s(1) = 1, so c(e₁) = 0 and c(e₂) = 1.  The
valuation of F is read off the t-coordinate.

A constant a + b·w with b ≠ 0 would need every coefficient u of b at
t^i·s^k to satisfy u' + (k + w†)·u = 0.  With w† = 1/2 the operator
∂ + k + 1/2 has no nonzero rational kernel and −k − 1/2 is never a
logarithmic derivative in ℚ(x), so b = 0 and constants have integer
valuations only.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Sequence

from ..cmaps import AdditiveMap
from ..coeffs.dagger import log_derivative_membership
from ..coeffs.field import CoeffField
from ..coeffs.operators import LinearDiffOperator, solve_linear, twist_operator
from ..coeffs.rational_function import ONE, ZERO, RationalFunction
from ..defaults import DEFAULT_EXAMPLE_BOUND
from ..exceptions import DomainMismatchError, InvariantViolationError
from ..groups.subgroup import FgSubgroup, PurityVerdict
from ..groups.value_group import ValueGroup
from ..hahn.series import FieldSpec, HahnSeries
from ..models import ConstantScanReport, HalfIntegerCertificate
from .quadratic import QuadExtElement, ext_is_constant, format_half_value

logger = logging.getLogger(__name__)


def tower_spec(bound: int = DEFAULT_EXAMPLE_BOUND) -> FieldSpec:
    group = ValueGroup.lex(2)
    field = CoeffField.rational_functions()
    cmap = AdditiveMap(group, field, (ZERO, ONE))
    return FieldSpec(field, group, cmap, group.element((bound + 1, 0)))


def tower_datum(spec: FieldSpec) -> HahnSeries:
    """m = s·t."""
    return spec.t((1, 1))


def constant_valuation_purity(valuations: Sequence[Fraction]) -> PurityVerdict:
    """Purity in (1/2)ℤ of the subgroup generated by the valuations of the constants found."""
    half_integers = ValueGroup.fractional(2)
    return FgSubgroup(half_integers, [half_integers.element(v) for v in valuations]).is_pure()


def ext_constant_scan(bound: int = DEFAULT_EXAMPLE_BOUND) -> ConstantScanReport:
    if bound < 1:
        raise DomainMismatchError("scan bound must be positive")
    spec = tower_spec(bound)
    m = tower_datum(spec)
    w = QuadExtElement.generator(m)
    w_dagger = w.w_dagger
    derivation = LinearDiffOperator.derivation(spec.field)

    half_values = [Fraction(2 * i + 1, 2) for i in range(-bound, bound)]
    certificates: Dict[RationalFunction, HalfIntegerCertificate] = {}
    half_constants: List[str] = []
    half_found: List[Fraction] = []
    for i in range(-bound, bound):
        for k in range(-bound, bound + 1):
            shift = spec.c(spec.exponent((i, k))) + w_dagger
            kernel = solve_linear(twist_operator(derivation, shift), ZERO).kernel
            for u in kernel:
                half_constants.append(str(QuadExtElement(spec.zero(), spec.monomial(u, (i, k)), m)))
                half_found.append(Fraction(2 * i + 1, 2))
            if shift not in certificates:
                certificates[shift] = HalfIntegerCertificate(
                    s_exponent=k,
                    required_dagger=str(-shift),
                    kernel_dimension=len(kernel),
                    membership=log_derivative_membership(spec.field, -shift).to_dict(),
                )

    integer_constants: List[str] = []
    integer_found: List[int] = []
    for j in range(-bound, bound + 1):
        z = QuadExtElement.base(spec.t((j, 0)), m)
        if not ext_is_constant(z):
            raise InvariantViolationError(f"{z} was expected to be constant")
        integer_constants.append(str(z))
        integer_found.append(j)

    found = sorted(set(map(Fraction, integer_found)) | set(half_found))
    verdict = constant_valuation_purity(found)
    witness = None
    if verdict.witness is not None:
        gamma, n = verdict.witness
        witness = {"gamma": str(gamma), "n": str(n)}
    logger.info(
        "constant scan to %d: %d half-integer constants, %d integer constants",
        bound,
        len(half_constants),
        len(integer_found),
    )
    return ConstantScanReport(
        bound=bound,
        extension="w^2 = t^(1,1)",
        w_dagger=str(w_dagger),
        w_is_constant=bool(ext_is_constant(w)),
        half_integer_valuations=[format_half_value(v) for v in half_values],
        half_integer_constants=half_constants,
        certificates=sorted(certificates.values(), key=lambda c: c.s_exponent),
        integer_constants=integer_constants,
        constant_valuations=[format_half_value(v) for v in found],
        pure=verdict.pure,
        purity_witness=witness,
    )
