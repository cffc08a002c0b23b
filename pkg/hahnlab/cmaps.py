"""Additive maps c: Γ → k and the constants they allow.

A monomial d·t^γ of the twisted Hahn field is constant iff d† = −c(γ), so the
valuations of constants form Δ_C = {γ : c(γ) ∈ k†}.  Over ℚ(x) membership in
k† is a conjunction of ℚ-linear conditions (no polynomial part, simple poles,
rational residues) and integrality of residues, so Δ_C is computed by an
integer nullspace followed by a congruence reduction.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Poly

from .coeffs.dagger import dagger_saturation, log_derivative_membership
from .coeffs.field import CoeffField
from .coeffs.rational_function import (
    ONE_POLY,
    ZERO,
    RationalFunction,
    X,
    irreducible_factors,
    poly_coeffs,
)
from .exceptions import DomainMismatchError, InvariantViolationError
from .groups.lattice import identity, integer_relations, lattice_basis, rational_relations
from .groups.subgroup import FgSubgroup
from .groups.value_group import GroupElement, GroupKind, ValueGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdditiveMap:
    """c: Γ → k given by the images of Γ's canonical generators.

    For (1/d)ℤ the single image is c(1/d); for ℚ it is c(1) and c extends
    ℚ-linearly; for ℤⁿ the images are c(e₁), …, c(eₙ).
    """

    group: ValueGroup
    field: CoeffField
    images: Tuple[RationalFunction, ...]

    def __post_init__(self) -> None:
        images = tuple(self.field.element(RationalFunction.coerce(v)) for v in self.images)
        if len(images) != self.group.rank:
            raise DomainMismatchError(f"{self.group} needs {self.group.rank} generator image(s), got {len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def zero(cls, group: ValueGroup, field: CoeffField) -> "AdditiveMap":
        return cls(group, field, (ZERO,) * group.rank)

    @property
    def is_zero(self) -> bool:
        return all(v.is_zero for v in self.images)

    def __call__(self, gamma: GroupElement) -> RationalFunction:
        return c_eval(self, gamma)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.group.kind == GroupKind.LEX:
            return ", ".join(f"e{i + 1} -> {v}" for i, v in enumerate(self.images))
        return f"{self.group.generators()[0]} -> {self.images[0]}"


def c_eval(c: AdditiveMap, gamma: GroupElement) -> RationalFunction:
    if gamma.group != c.group:
        raise DomainMismatchError(f"{gamma} is not in the domain {c.group} of c")
    if isinstance(gamma.value, tuple):
        total = ZERO
        for n, image in zip(gamma.value, c.images):
            if n:
                total = total + image * n
        return total
    multiple = gamma.value / c.group.step if c.group.kind == GroupKind.FRAC else gamma.value
    return c.images[0] * multiple


# ---------------------------------------------------------------------------
# Working lattice
# ---------------------------------------------------------------------------


def _working_basis(c: AdditiveMap, within: Optional[FgSubgroup]) -> List[GroupElement]:
    if within is not None:
        if within.ambient != c.group:
            raise DomainMismatchError(f"subgroup of {within.ambient} given for c on {c.group}")
        return list(within.basis)
    return c.group.generators()


def _working_lattice(c: AdditiveMap, within: Optional[FgSubgroup]) -> FgSubgroup:
    return within if within is not None else FgSubgroup.whole(c.group)


def _combine(basis: Sequence[GroupElement], vector: Sequence[int], group: ValueGroup) -> GroupElement:
    total = group.zero()
    for n, b in zip(vector, basis):
        if n:
            total = total + n * b
    return total


def _subgroup(c: AdditiveMap, basis: Sequence[GroupElement], vectors: Sequence[Sequence[int]]) -> FgSubgroup:
    elements = [_combine(basis, v, c.group) for v in vectors]
    return FgSubgroup(c.group, [e for e in elements if e])


def _coefficient_rows(values: Sequence[RationalFunction]) -> List[List[Fraction]]:
    """Coordinates of the values over a common denominator in the monomial basis."""
    common = ONE_POLY
    for v in values:
        common = common.lcm(v.den)
    rows = [poly_coeffs(v.num * common.exquo(v.den)) for v in values]
    width = max([len(r) for r in rows] + [0])
    return [r + [Fraction(0)] * (width - len(r)) for r in rows]


def c_kernel(c: AdditiveMap, within: Optional[FgSubgroup] = None) -> FgSubgroup:
    """Generators of {γ : c(γ) = 0} (inside ``within`` when given)."""
    basis = _working_basis(c, within)
    images = [c_eval(c, b) for b in basis]
    rows = _coefficient_rows(images)
    relations = rational_relations(rows) if rows and rows[0] else identity(len(basis))
    return _subgroup(c, basis, relations)


# ---------------------------------------------------------------------------
# Δ_C = {γ : c(γ) ∈ k†}
# ---------------------------------------------------------------------------


def _pad(values: List[Fraction], width: int) -> List[Fraction]:
    return values[:width] + [Fraction(0)] * (width - len(values))


def _principal_digits(value: RationalFunction, p: Poly, e: int) -> List[Poly]:
    """Coefficient polynomials (deg < deg p) of p^-1, …, p^-e in the partial fraction of ``value``."""
    den = value.den
    order = 0
    rest = den
    while order < e:
        quotient, remainder = rest.div(p)
        if not remainder.is_zero:
            break
        rest = quotient
        order += 1
    digits = [Poly(0, X, domain=p.domain)] * e
    if order == 0:
        return digits
    modulus = p**order
    numerator = (value.num * rest.invert(modulus)).rem(modulus)
    expansion: List[Poly] = []
    for _ in range(order):
        numerator, digit = numerator.div(p)
        expansion.append(digit)
    # numerator/p^order = Σ_k expansion[k] p^(k-order); the p^-j coefficient is expansion[order-j]
    for j in range(1, order + 1):
        digits[j - 1] = expansion[order - j]
    return digits


def dagger_lattice(field: CoeffField, values: Sequence[RationalFunction]) -> List[List[int]]:
    """Basis of {n ∈ ℤ^g : Σ nᵢ·valuesᵢ ∈ k†}."""
    g = len(values)
    if g == 0:
        return []
    if field.trivial_derivation:
        rows = _coefficient_rows(values)
        return rational_relations(rows) if rows and rows[0] else identity(g)
    parts = [v.polynomial_part() for v in values]
    polynomial_width = max([len(poly_coeffs(p)) for p, _ in parts] + [0])
    linear: List[List[Fraction]] = [_pad(poly_coeffs(p), polynomial_width) for p, _ in parts]
    integral: List[List[Fraction]] = [[] for _ in range(g)]

    common = ONE_POLY
    for _, proper in parts:
        common = common.lcm(proper.den)
    for p, e in irreducible_factors(common) if common.degree() > 0 else []:
        width = p.degree()
        inverse_derivative = p.diff(X).invert(p)
        digits = [_principal_digits(proper, p, e) for _, proper in parts]
        for j in range(2, e + 1):
            for i in range(g):
                linear[i].extend(_pad(poly_coeffs(digits[i][j - 1]), width))
        for i in range(g):
            residue = _pad(poly_coeffs((digits[i][0] * inverse_derivative).rem(p)), width)
            linear[i].extend(residue[1:])
            integral[i].append(residue[0])

    lattice = rational_relations(linear) if linear[0] else identity(g)
    if not lattice or not integral[0]:
        return lattice
    weights = [
        [sum((Fraction(b[i]) * integral[i][col] for i in range(g)), Fraction(0)) for col in range(len(integral[0]))]
        for b in lattice
    ]
    modulus = 1
    for row in weights:
        for w in row:
            modulus = lcm(modulus, w.denominator)
    if modulus == 1:
        return lattice
    k, width = len(lattice), len(weights[0])
    congruences = [[int(w * modulus) for w in row] for row in weights]
    congruences += [[modulus if col == row else 0 for col in range(width)] for row in range(width)]
    projected = [rel[:k] for rel in integer_relations(congruences, width)]
    multipliers = lattice_basis([m for m in projected if any(m)], k)
    return [[sum(m[j] * lattice[j][i] for j in range(k)) for i in range(g)] for m in multipliers]


def dagger_subgroup(c: AdditiveMap, within: Optional[FgSubgroup] = None) -> FgSubgroup:
    """Δ_C = {γ : −c(γ) ∈ k†} as a finitely generated subgroup."""
    basis = _working_basis(c, within)
    images = [c_eval(c, b) for b in basis]
    if len(basis) == 1 and not c.field.trivial_derivation:
        n = dagger_saturation(c.field, -images[0])
        vectors = [[n]] if n is not None else []
        return _subgroup(c, basis, vectors)
    return _subgroup(c, basis, dagger_lattice(c.field, images))


@dataclass(frozen=True)
class MeetVerdict:
    """Whether some nonzero c(γ) is a logarithmic derivative; witness (γ, f) with f† = c(γ)."""

    meets: bool
    witness: Optional[Tuple[GroupElement, RationalFunction]] = None

    def __bool__(self) -> bool:
        return self.meets


def image_meets_dagger(c: AdditiveMap, within: Optional[FgSubgroup] = None) -> MeetVerdict:
    if c.field.trivial_derivation:
        return MeetVerdict(False)
    for gamma in dagger_subgroup(c, within).basis:
        value = c_eval(c, gamma)
        if not value.is_zero:
            certificate = log_derivative_membership(c.field, value)
            if not certificate.member:
                raise InvariantViolationError(f"c({gamma}) = {value} was expected to be a logarithmic derivative")
            return MeetVerdict(True, (gamma, certificate.witness))  # type: ignore[arg-type]
    return MeetVerdict(False)


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


class ConstantsVerdict(str, Enum):
    """How large the valuation group of constants is"""

    FEW = "FewConstants"
    MANY = "ManyConstants"
    INTERMEDIATE = "Intermediate"


@dataclass(frozen=True)
class ConstantsClassification:
    verdict: ConstantsVerdict
    delta_c: FgSubgroup
    kernel: FgSubgroup
    injective: bool
    image_meets_dagger: bool
    meet_witness: Optional[Tuple[GroupElement, RationalFunction]] = None
    constant_monomials: Tuple[Tuple[GroupElement, RationalFunction], ...] = field(default_factory=tuple)

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "verdict": self.verdict.value,
            "delta_c": [str(g) for g in self.delta_c.basis],
            "kernel": [str(g) for g in self.kernel.basis],
            "injective": self.injective,
            "image_meets_dagger": self.image_meets_dagger,
            "constant_monomials": [{"exponent": str(g), "coefficient": str(d)} for g, d in self.constant_monomials],
        }
        if self.meet_witness is not None:
            gamma, f = self.meet_witness
            payload["meet_witness"] = {"gamma": str(gamma), "f": str(f)}
        return payload


def classify_constants(spec: Any, within: Optional[FgSubgroup] = None) -> ConstantsClassification:
    """Classify a field spec (or a bare c-map) by its valuation group of constants."""
    c: AdditiveMap = getattr(spec, "cmap", spec)
    lattice = _working_lattice(c, within)
    kernel = c_kernel(c, within)
    delta = dagger_subgroup(c, within)
    meet = image_meets_dagger(c, within)

    if delta.is_trivial:
        verdict = ConstantsVerdict.FEW
    elif delta == lattice:
        verdict = ConstantsVerdict.MANY
    else:
        verdict = ConstantsVerdict.INTERMEDIATE

    monomials = []
    for gamma in delta.basis:
        certificate = log_derivative_membership(c.field, -c_eval(c, gamma))
        if not certificate.member:
            raise InvariantViolationError(f"{gamma} in the constants' valuation group has no constant monomial")
        monomials.append((gamma, certificate.witness))

    injective = kernel.is_trivial
    if not kernel.is_subgroup_of(delta):
        raise InvariantViolationError("ker(c) is not contained in the valuation group of constants")
    if bool(meet) == (kernel == delta):
        raise InvariantViolationError("c(Γ) ∩ k† = {0} must hold exactly when ker(c) equals Δ_C")
    if (injective and not meet) != (verdict == ConstantsVerdict.FEW):
        raise InvariantViolationError("few constants must coincide with an injective c whose image avoids k†")
    logger.debug("classify_constants(%s): %s, Δ_C = %s, ker = %s", c, verdict.value, delta, kernel)
    return ConstantsClassification(
        verdict=verdict,
        delta_c=delta,
        kernel=kernel,
        injective=injective,
        image_meets_dagger=meet.meets,
        meet_witness=meet.witness,
        constant_monomials=tuple(monomials),  # type: ignore[arg-type]
    )
