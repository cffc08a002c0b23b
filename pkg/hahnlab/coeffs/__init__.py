"""Coefficient fields k, linear operators over k and logarithmic derivatives."""

from .dagger import DaggerCertificate, NonMemberReason, dagger_saturation, log_derivative_membership
from .field import CoeffField, CoeffFieldKind, dagger_coeff, derive_coeff, nth_root_coeff
from .operators import LinearDiffOperator, LinearSolution, apply_operator, solve_linear, twist_operator
from .rational_function import ONE, ZERO, RationalFunction

__all__ = [
    "CoeffField",
    "CoeffFieldKind",
    "DaggerCertificate",
    "LinearDiffOperator",
    "LinearSolution",
    "NonMemberReason",
    "ONE",
    "RationalFunction",
    "ZERO",
    "apply_operator",
    "dagger_coeff",
    "dagger_saturation",
    "derive_coeff",
    "log_derivative_membership",
    "nth_root_coeff",
    "solve_linear",
    "twist_operator",
]
