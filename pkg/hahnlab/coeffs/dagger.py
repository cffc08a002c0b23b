"""Membership in the group of logarithmic derivatives k† = {f'/f : f ≠ 0}.

Over ℚ(x) an element g lies in k† iff it is proper, has a squarefree
denominator and an integer residue along every irreducible factor of that
denominator; the witness is then Π p^{residue}.  Over ℚ with the trivial
derivation k† = {0}.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Any, Dict, List, Optional, Tuple, Union

from sympy import Poly

from ..exceptions import InvariantViolationError
from .field import CoeffField, dagger_coeff
from .rational_function import ONE_POLY, RationalFunction, X, format_polynomial, irreducible_factors, to_fraction

logger = logging.getLogger(__name__)


class NonMemberReason(str, Enum):
    """Why an element is not a logarithmic derivative"""

    POLYNOMIAL_PART = "nonzero polynomial part"
    NON_SIMPLE_POLE = "non-simple pole"
    IRRATIONAL_RESIDUE = "non-rational residue"
    NON_INTEGER_RESIDUE = "non-integer residue"


@dataclass(frozen=True, eq=False)
class DaggerCertificate:
    """Verdict of ``log_derivative_membership``.

    Members carry the factorization of a witness f with f† = g, re-checked on
    construction.  Non-members carry the reason, the offending irreducible
    factor and the residue found there.
    """

    field: CoeffField
    target: RationalFunction
    member: bool
    factors: Tuple[Tuple[Poly, int], ...] = ()
    reason: Optional[NonMemberReason] = None
    pole: Optional[Poly] = None
    residue: Optional[RationalFunction] = None

    def __post_init__(self) -> None:
        if self.member and dagger_coeff(self.field, self.witness) != self.target:
            raise InvariantViolationError(f"witness {self.witness} does not have logarithmic derivative {self.target}")

    @property
    def witness(self) -> Optional[RationalFunction]:
        if not self.member:
            return None
        num, den = ONE_POLY, ONE_POLY
        for p, n in self.factors:
            if n > 0:
                num = num * p**n
            else:
                den = den * p ** (-n)
        return RationalFunction(num, den)

    def describe(self) -> str:
        if self.member:
            return f"member: f = {self.witness}"
        if self.reason == NonMemberReason.POLYNOMIAL_PART:
            return str(self.reason.value)
        at = format_polynomial(self.pole) if self.pole is not None else "?"
        if self.reason == NonMemberReason.NON_SIMPLE_POLE:
            return f"non-simple pole at {at}"
        return f"{self.reason.value if self.reason else 'non-member'} {self.residue} at {at}"

    def to_dict(self) -> Dict[str, Any]:
        if self.member:
            return {
                "verdict": "member",
                "witness": str(self.witness),
                "factors": [[format_polynomial(p), n] for p, n in self.factors],
            }
        payload: Dict[str, Any] = {"verdict": "non-member", "reason": self.reason.value if self.reason else None}
        if self.pole is not None:
            payload["pole"] = format_polynomial(self.pole)
        if self.residue is not None:
            payload["residue"] = str(self.residue)
        return payload


@dataclass(frozen=True, eq=False)
class _ResidueData:
    """Local residues of a proper element with simple poles, or the first obstruction."""

    residues: Tuple[Tuple[Poly, Fraction], ...] = ()
    reason: Optional[NonMemberReason] = None
    pole: Optional[Poly] = None
    residue: Optional[RationalFunction] = None


def local_residue(numerator: Poly, denominator: Poly, p: Poly) -> Poly:
    """A·((D/p)·p')⁻¹ mod p for a simple irreducible factor p of D."""
    cofactor = denominator.exquo(p)
    inverse = (cofactor * p.diff(X)).invert(p)
    return (numerator * inverse).rem(p)


def _analyse(g: RationalFunction) -> _ResidueData:
    polynomial, proper = g.polynomial_part()
    if not polynomial.is_zero:
        return _ResidueData(reason=NonMemberReason.POLYNOMIAL_PART)
    if proper.is_zero:
        return _ResidueData()
    factors = irreducible_factors(proper.den)
    for p, k in factors:
        if k > 1:
            return _ResidueData(reason=NonMemberReason.NON_SIMPLE_POLE, pole=p)
    residues: List[Tuple[Poly, Fraction]] = []
    for p, _ in factors:
        r = local_residue(proper.num, proper.den, p)
        if r.degree() > 0:
            return _ResidueData(
                reason=NonMemberReason.IRRATIONAL_RESIDUE, pole=p, residue=RationalFunction.from_polynomial(r)
            )
        residues.append((p, to_fraction(r.LC())))
    return _ResidueData(residues=tuple(residues))


def log_derivative_membership(field: CoeffField, g: Union[RationalFunction, int, Fraction]) -> DaggerCertificate:
    g = field.element(g)
    if g.is_zero:
        return DaggerCertificate(field, g, True)
    if field.trivial_derivation:
        return DaggerCertificate(field, g, False, reason=NonMemberReason.POLYNOMIAL_PART)
    data = _analyse(g)
    if data.reason is not None:
        logger.debug("log_derivative_membership(%s): %s", g, data.reason.value)
        return DaggerCertificate(field, g, False, reason=data.reason, pole=data.pole, residue=data.residue)
    for p, r in data.residues:
        if r.denominator != 1:
            return DaggerCertificate(
                field,
                g,
                False,
                reason=NonMemberReason.NON_INTEGER_RESIDUE,
                pole=p,
                residue=RationalFunction.constant(r),
            )
    return DaggerCertificate(field, g, True, factors=tuple((p, int(r)) for p, r in data.residues))


def dagger_saturation(field: CoeffField, g: Union[RationalFunction, int, Fraction]) -> Optional[int]:
    """Least n ≥ 1 with n·g ∈ k†, or None."""
    g = field.element(g)
    if g.is_zero:
        return 1
    if field.trivial_derivation:
        return None
    data = _analyse(g)
    if data.reason is not None:
        return None
    n = 1
    for _, r in data.residues:
        n = lcm(n, r.denominator)
    return n


def is_log_derivative(field: CoeffField, g: RationalFunction) -> bool:
    return log_derivative_membership(field, g).member
