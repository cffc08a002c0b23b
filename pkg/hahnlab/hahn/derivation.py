"""The twisted derivation ∂_c on Hahn series and the maps built on it.

∂_c(Σ a_γ t^γ) = Σ (a_γ' + c(γ)·a_γ) t^γ, so t^γ has logarithmic derivative
c(γ) and every coefficient slice is acted on by the twist ∂ + c(γ).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from ..coeffs.dagger import DaggerCertificate, log_derivative_membership
from ..coeffs.field import dagger_coeff, derive_coeff
from ..coeffs.rational_function import RationalFunction, format_polynomial, poly_coeffs
from ..defaults import DEFAULT_DAGGER_SEARCH_BOUND
from ..exceptions import (
    DivisionByZeroError,
    DomainMismatchError,
    NeedsPrecisionError,
    NotInValuationRingError,
    UnsupportedValueGroupError,
)
from ..groups.value_group import GroupElement, GroupKind
from .series import FieldSpec, HahnSeries

logger = logging.getLogger(__name__)


def derive_series(f: HahnSeries) -> HahnSeries:
    spec = f.spec
    terms = [(e, derive_coeff(spec.field, a) + spec.c(e) * a) for e, a in f.terms]
    return HahnSeries(spec, terms, f.truncation)


def dagger_series(f: HahnSeries, precision: Optional[GroupElement] = None) -> HahnSeries:
    """f† = ∂_c(f)/f; an exact monomial a·t^γ gives the exact constant a† + c(γ)."""
    if f.is_zero:
        raise DivisionByZeroError("the logarithmic derivative of 0 is undefined")
    gamma, a = f.leading_term()
    if f.is_monomial:
        return f.spec.constant(dagger_coeff(f.spec.field, a) + f.spec.c(gamma))
    return derive_series(f) * f.inverse(precision)


def residue(f: HahnSeries) -> RationalFunction:
    """π: 𝒪 → k, the coefficient at exponent 0."""
    zero = f.spec.group.zero()
    if f.terms:
        if f.terms[0][0] < zero:
            raise NotInValuationRingError(f"v({f}) = {f.terms[0][0]} is negative")
        return f.coefficient(zero)
    if f.truncation is not None and f.truncation <= zero:
        raise NeedsPrecisionError(f"{f} does not determine a residue")
    return f.spec.field.zero()


def cross_section(spec: FieldSpec, gamma: Union[GroupElement, int, Fraction, str]) -> HahnSeries:
    """s(γ) = t^γ."""
    return spec.t(gamma)


@dataclass(frozen=True)
class ConstancyVerdict:
    """Result of ``is_constant``; ``up_to`` is the truncation bound the verdict is qualified by."""

    constant: bool
    up_to: Optional[GroupElement] = None
    offending: Optional[GroupElement] = None

    def __bool__(self) -> bool:
        return self.constant

    def describe(self) -> str:
        if not self.constant:
            return f"not constant: the coefficient of t^{self.offending.literal() if self.offending else '?'} moves"
        if self.up_to is None:
            return "constant"
        return f"constant up to O(t^{self.up_to.literal()})"


def is_constant(f: HahnSeries) -> ConstancyVerdict:
    spec = f.spec
    for e, a in f.terms:
        if not (derive_coeff(spec.field, a) + spec.c(e) * a).is_zero:
            return ConstancyVerdict(False, f.truncation, e)
    return ConstancyVerdict(True, f.truncation)


# ---------------------------------------------------------------------------
# a† = u for u in k
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DaggerSolved:
    """a = f·t^m with a† = u."""

    solution: HahnSeries
    exponent: GroupElement
    coefficient: RationalFunction
    status: str = field(default="solution", init=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status,
            "solution": str(self.solution),
            "exponent": str(self.exponent),
            "coefficient": str(self.coefficient),
        }


@dataclass(frozen=True)
class DaggerUnsat:
    """No a ≠ 0 has a† = u; ``reason`` holds for every candidate exponent."""

    reason: str
    candidate: Optional[GroupElement] = None
    membership: Optional[DaggerCertificate] = None
    status: str = field(default="unsat", init=False)

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"status": self.status, "certificate": self.reason}
        if self.candidate is not None:
            payload["candidate"] = str(self.candidate)
        if self.membership is not None:
            payload["membership"] = self.membership.to_dict()
        return payload


@dataclass(frozen=True)
class DaggerUnknown:
    """No solution with |m| within ``searched`` steps of Γ and no structural certificate."""

    searched: int
    status: str = field(default="unknown", init=False)

    def to_dict(self) -> Dict[str, Any]:
        return {"status": self.status, "searched": self.searched}


DaggerOutcome = Union[DaggerSolved, DaggerUnsat, DaggerUnknown]


def _solved(spec: FieldSpec, step: GroupElement, j: int, f: RationalFunction) -> DaggerSolved:
    exponent = j * step
    return DaggerSolved(spec.monomial(f, exponent), exponent, f)


def _polynomial_ratio(numerator: Any, denominator: Any) -> Optional[Fraction]:
    """q with numerator = q·denominator, for polynomials; None if not proportional."""
    a, b = poly_coeffs(numerator), poly_coeffs(denominator)
    if len(a) != len(b):
        return None
    q = a[-1] / b[-1]
    return q if all(x == q * y for x, y in zip(a, b)) else None


def solve_dagger(
    spec: FieldSpec, u: Union[RationalFunction, int, Fraction], k_bound: int = DEFAULT_DAGGER_SEARCH_BOUND
) -> DaggerOutcome:
    """Decide whether a† = u has a solution a = f·t^m (m ∈ Γ, f ∈ k^×)."""
    if spec.group.kind not in (GroupKind.Z, GroupKind.FRAC):
        raise UnsupportedValueGroupError(f"solve_dagger needs Γ = Z or Z/d, got {spec.group}")
    if k_bound < 0:
        raise DomainMismatchError("search bound must be nonnegative")
    u = spec.field.element(u)
    step = spec.group.generators()[0]
    g = spec.c(step)

    if spec.field.trivial_derivation:
        # k† = {0}: a† = u forces u = j·c(step)
        if g.is_zero:
            if u.is_zero:
                return _solved(spec, step, 0, spec.field.one())
            return DaggerUnsat(f"c = 0 and Q has only the logarithmic derivative 0, but u = {u}")
        j = u.constant_value() / g.constant_value()
        if j.denominator != 1:
            return DaggerUnsat(f"u/c({step}) = {j} is not an integer")
        return _solved(spec, step, int(j), spec.field.one())

    if g.is_zero:
        certificate = log_derivative_membership(spec.field, u)
        if certificate.member:
            return _solved(spec, step, 0, certificate.witness)  # type: ignore[arg-type]
        return DaggerUnsat(f"c = 0 and u is not a logarithmic derivative: {certificate.describe()}", None, certificate)

    u_poly, _ = u.polynomial_part()
    g_poly, _ = g.polynomial_part()
    if g_poly.is_zero and not u_poly.is_zero:
        return DaggerUnsat(
            f"polynomial part of u - m*c({step}) is {format_polynomial(u_poly)} for every m", None, None
        )
    if not g_poly.is_zero:
        reason = (
            f"polynomial part of u - m*c({step}) is ({format_polynomial(u_poly)}) - m*({format_polynomial(g_poly)}),"
            " nonzero for every integer m"
        )
        if u_poly.is_zero:
            ratio: Optional[Fraction] = Fraction(0)
        else:
            ratio = _polynomial_ratio(u_poly, g_poly)
        if ratio is None or ratio.denominator != 1:
            return DaggerUnsat(reason)
        candidate = int(ratio)
        certificate = log_derivative_membership(spec.field, u - g * candidate)
        if certificate.member:
            return _solved(spec, step, candidate, certificate.witness)  # type: ignore[arg-type]
        return DaggerUnsat(
            f"only m = {candidate * step} clears the polynomial part, and {certificate.describe()}",
            candidate * step,
            certificate,
        )

    for j in _search_order(k_bound):
        certificate = log_derivative_membership(spec.field, u - g * j)
        if certificate.member:
            logger.debug("solve_dagger: u - c(%s) is a logarithmic derivative", j * step)
            return _solved(spec, step, j, certificate.witness)  # type: ignore[arg-type]
    logger.warning("solve_dagger(%s): no solution with |m| <= %d steps and no certificate", u, k_bound)
    return DaggerUnknown(k_bound)


def _search_order(bound: int):
    yield 0
    for j in range(1, bound + 1):
        yield j
        yield -j
