"""Finitely generated subgroups of value groups.

Rank-one groups are handled by scaling to a common denominator so that every
question becomes an integer lattice question; lexicographic groups use their
integer coordinates directly.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

from ..exceptions import DomainMismatchError
from .lattice import lattice_basis, lattice_coordinates, rational_coordinates, reduce_modulo, smith_form
from .value_group import GroupElement, GroupKind, ValueGroup, common_scale

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PurityVerdict:
    """Result of a purity test; ``witness`` is (γ, n) with nγ ∈ Δ and γ ∉ Δ."""

    pure: bool
    witness: Optional[Tuple[GroupElement, int]] = None

    def __bool__(self) -> bool:
        return self.pure


class FgSubgroup:
    """Subgroup of a value group generated by finitely many elements.

    The canonical ``basis`` is the Hermite basis for ℤⁿ and a single
    nonnegative generator for rank-one groups; two subgroups are equal iff
    their canonical bases are equal.
    """

    __slots__ = ("ambient", "generators", "basis")

    def __init__(self, ambient: ValueGroup, generators: Sequence[GroupElement] = ()):
        for g in generators:
            if g.group != ambient:
                raise DomainMismatchError(f"generator {g} does not lie in {ambient}")
        self.ambient = ambient
        self.generators: Tuple[GroupElement, ...] = tuple(generators)
        self.basis: Tuple[GroupElement, ...] = self._canonical_basis()

    @classmethod
    def whole(cls, ambient: ValueGroup) -> "FgSubgroup":
        return cls(ambient, ambient.generators())

    @classmethod
    def trivial(cls, ambient: ValueGroup) -> "FgSubgroup":
        return cls(ambient, ())

    # -- internals ---------------------------------------------------------

    def _scale(self, extra: Sequence[GroupElement] = ()) -> int:
        if self.ambient.kind == GroupKind.LEX:
            return 1
        if self.ambient.kind == GroupKind.Q:
            return common_scale(list(self.generators) + list(extra))
        return self.ambient.denominator

    def _width(self) -> int:
        return self.ambient.rank

    def _canonical_basis(self) -> Tuple[GroupElement, ...]:
        if self.ambient.kind == GroupKind.LEX:
            rows = lattice_basis([g.coordinates() for g in self.generators], self._width())
            return tuple(GroupElement(self.ambient, tuple(r)) for r in rows)
        scale = self._scale()
        g = 0
        for element in self.generators:
            g = gcd(g, element.coordinates(scale)[0])
        if g == 0:
            return ()
        return (GroupElement(self.ambient, Fraction(g, scale)),)

    def _basis_rows(self, scale: int) -> List[List[int]]:
        return [b.coordinates(scale) for b in self.basis]

    # -- queries -----------------------------------------------------------

    @property
    def is_trivial(self) -> bool:
        return not self.basis

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, gamma: GroupElement) -> bool:
        if gamma.group != self.ambient:
            raise DomainMismatchError(f"{gamma} is not an element of {self.ambient}")
        if not gamma:
            return True
        scale = self._scale([gamma])
        return lattice_coordinates(self._basis_rows(scale), gamma.coordinates(scale)) is not None

    __contains__ = contains

    def torsion_index(self, gamma: GroupElement) -> Optional[int]:
        """Least n ≥ 1 with nγ ∈ Δ, or None."""
        if gamma.group != self.ambient:
            raise DomainMismatchError(f"{gamma} is not an element of {self.ambient}")
        scale = self._scale([gamma])
        coords = rational_coordinates(self._basis_rows(scale), gamma.coordinates(scale))
        if coords is None:
            return None
        n = 1
        for q in coords:
            n = lcm(n, q.denominator)
        return n

    def is_pure(self) -> PurityVerdict:
        """Decide purity in the ambient group, with a (γ, n) witness when impure."""
        if self.is_trivial:
            return PurityVerdict(True)
        if self.ambient.kind == GroupKind.Q:
            # ℚ is divisible: half of any nonzero generator escapes the subgroup
            return PurityVerdict(False, (self.basis[0].divided_by(2), 2))
        scale = self._scale()
        rows = self._basis_rows(scale)
        snf = smith_form(rows, self._width())
        for i, d in enumerate(snf.divisors):
            if d > 1:
                vector = reduce_modulo(rows, list(snf.right_inverse[i]))
                witness = self._from_coordinates(vector, scale)
                logger.debug("Subgroup %s is impure: %d·%s lies inside", self, d, witness)
                return PurityVerdict(False, (witness, d))
        return PurityVerdict(True)

    def _from_coordinates(self, vector: Sequence[int], scale: int) -> GroupElement:
        if self.ambient.kind == GroupKind.LEX:
            return GroupElement(self.ambient, tuple(vector))
        return GroupElement(self.ambient, Fraction(vector[0], scale))

    def is_subgroup_of(self, other: "FgSubgroup") -> bool:
        return all(other.contains(b) for b in self.basis)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FgSubgroup):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __str__(self) -> str:
        if self.is_trivial:
            return "{0}"
        return "<" + ", ".join(str(b) for b in self.basis) + ">"

    def __repr__(self) -> str:
        return f"FgSubgroup({self.ambient}, {self})"
