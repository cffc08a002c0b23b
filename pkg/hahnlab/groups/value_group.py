"""Ordered abelian value groups and their elements.

Supported groups: ℤ, ℚ, (1/d)ℤ and ℤⁿ with the lexicographic order.
Rank-one elements store an exact ``Fraction``; lexicographic elements store an
integer tuple of the group's rank.
"""

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from math import lcm
from typing import List, Tuple, Union

from ..exceptions import DomainMismatchError, ParseError

GroupValue = Union[Fraction, Tuple[int, ...]]


class GroupKind(str, Enum):
    """Value group families"""

    Z = "Z"
    Q = "Q"
    FRAC = "FracZ"
    LEX = "ZnLex"


_GROUP_PATTERN = re.compile(r"^\s*(?:Z\s*/\s*(?P<den>\d+)|Z\s*\^\s*(?P<rank>\d+)\s*lex|(?P<plain>[ZQ]))\s*$")
_FRACTION_PATTERN = re.compile(r"^\s*\(?\s*(?P<num>[+-]?\d+)\s*(?:/\s*(?P<den>\d+))?\s*\)?\s*$")


@dataclass(frozen=True, slots=True)
class ValueGroup:
    kind: GroupKind
    rank: int = 1
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("value group rank must be at least 1")
        if self.denominator < 1:
            raise ValueError("value group denominator must be at least 1")
        if self.kind != GroupKind.LEX and self.rank != 1:
            raise ValueError(f"{self.kind.value} has rank 1")
        if self.kind != GroupKind.FRAC and self.denominator != 1:
            raise ValueError("only (1/d)Z carries a denominator")

    # -- constructors ------------------------------------------------------

    @classmethod
    def integers(cls) -> "ValueGroup":
        return cls(GroupKind.Z)

    @classmethod
    def rationals(cls) -> "ValueGroup":
        return cls(GroupKind.Q)

    @classmethod
    def fractional(cls, denominator: int) -> "ValueGroup":
        if denominator == 1:
            return cls(GroupKind.Z)
        return cls(GroupKind.FRAC, denominator=denominator)

    @classmethod
    def lex(cls, rank: int) -> "ValueGroup":
        return cls(GroupKind.LEX, rank=rank)

    @classmethod
    def parse(cls, text: str) -> "ValueGroup":
        """Parse ``Z``, ``Q``, ``Z/2`` or ``Z^3lex``."""
        match = _GROUP_PATTERN.match(text)
        if not match:
            raise ParseError(f"unknown value group {text!r}", 1, 1, frozenset({"Z", "Q", "Z/d", "Z^nlex"}))
        if match.group("den"):
            den = int(match.group("den"))
            if den < 1:
                raise ParseError("denominator must be positive", 1, match.start("den") + 1)
            return cls.fractional(den)
        if match.group("rank"):
            rank = int(match.group("rank"))
            if rank < 1:
                raise ParseError("rank must be positive", 1, match.start("rank") + 1)
            return cls.lex(rank)
        return cls.integers() if match.group("plain") == "Z" else cls.rationals()

    # -- properties --------------------------------------------------------

    @property
    def archimedean(self) -> bool:
        return self.kind != GroupKind.LEX or self.rank == 1

    @property
    def finitely_generated(self) -> bool:
        return self.kind != GroupKind.Q

    @property
    def step(self) -> Fraction:
        """Smallest positive element of a discrete rank-one group."""
        return Fraction(1, self.denominator)

    def __str__(self) -> str:
        if self.kind == GroupKind.FRAC:
            return f"Z/{self.denominator}"
        if self.kind == GroupKind.LEX:
            return f"Z^{self.rank}lex"
        return self.kind.value

    # -- elements ----------------------------------------------------------

    def zero(self) -> "GroupElement":
        if self.kind == GroupKind.LEX:
            return GroupElement(self, (0,) * self.rank)
        return GroupElement(self, Fraction(0))

    def element(self, value: Union[int, Fraction, str, Tuple[int, ...]]) -> "GroupElement":
        if isinstance(value, str):
            return self.parse_element(value)
        if self.kind == GroupKind.LEX:
            if isinstance(value, (int, Fraction)):
                if self.rank != 1 or Fraction(value).denominator != 1:
                    raise DomainMismatchError(f"{value} is not an element of {self}")
                value = (int(value),)
            return GroupElement(self, tuple(int(v) for v in value))  # type: ignore[union-attr]
        return GroupElement(self, Fraction(value))  # type: ignore[arg-type]

    def generators(self) -> List["GroupElement"]:
        """Canonical generators; ℚ reports 1 (it is not finitely generated)."""
        if self.kind == GroupKind.LEX:
            return [GroupElement(self, tuple(1 if i == j else 0 for j in range(self.rank))) for i in range(self.rank)]
        return [GroupElement(self, self.step)]

    def parse_element(self, text: str, column: int = 1) -> "GroupElement":
        raw = text.strip()
        if self.kind == GroupKind.LEX:
            inner = raw[1:-1] if raw.startswith("(") and raw.endswith(")") else raw
            parts = [p.strip() for p in inner.split(",")]
            try:
                coords = tuple(int(p) for p in parts)
            except ValueError:
                raise ParseError(f"expected an integer tuple, got {text!r}", 1, column, frozenset({"(int,...)"}))
            if len(coords) != self.rank:
                raise ParseError(f"expected {self.rank} coordinates, got {len(coords)}", 1, column)
            return GroupElement(self, coords)
        match = _FRACTION_PATTERN.match(raw)
        if not match:
            raise ParseError(f"expected a group element of {self}, got {text!r}", 1, column, frozenset({"int", "p/q"}))
        den = int(match.group("den") or 1)
        if den == 0:
            raise ParseError("zero denominator", 1, column)
        return self.element(Fraction(int(match.group("num")), den))

    def contains_value(self, value: GroupValue) -> bool:
        if self.kind == GroupKind.LEX:
            return isinstance(value, tuple) and len(value) == self.rank
        if not isinstance(value, Fraction):
            return False
        if self.kind == GroupKind.Q:
            return True
        return self.denominator % value.denominator == 0


@total_ordering
@dataclass(frozen=True, slots=True)
class GroupElement:
    """An element of a value group; ordered, added and scaled within its group."""

    group: ValueGroup
    value: GroupValue

    def __post_init__(self) -> None:
        if not self.group.contains_value(self.value):
            raise DomainMismatchError(f"{self.value!r} is not an element of {self.group}")

    def _check(self, other: object) -> "GroupElement":
        if not isinstance(other, GroupElement):
            raise DomainMismatchError(f"cannot combine a group element with {type(other).__name__}")
        if other.group != self.group:
            raise DomainMismatchError(f"elements of {self.group} and {other.group} cannot be combined")
        return other

    def __lt__(self, other: object) -> bool:
        return self.value < self._check(other).value  # type: ignore[operator]

    def __add__(self, other: "GroupElement") -> "GroupElement":
        other = self._check(other)
        if isinstance(self.value, tuple):
            return GroupElement(self.group, tuple(a + b for a, b in zip(self.value, other.value)))  # type: ignore
        return GroupElement(self.group, self.value + other.value)  # type: ignore[operator]

    def __neg__(self) -> "GroupElement":
        if isinstance(self.value, tuple):
            return GroupElement(self.group, tuple(-a for a in self.value))
        return GroupElement(self.group, -self.value)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-self._check(other))

    def __mul__(self, n: int) -> "GroupElement":
        if not isinstance(n, int):
            return NotImplemented
        if isinstance(self.value, tuple):
            return GroupElement(self.group, tuple(n * a for a in self.value))
        return GroupElement(self.group, n * self.value)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        if isinstance(self.value, tuple):
            return any(self.value)
        return self.value != 0

    def is_positive(self) -> bool:
        return self > self.group.zero()

    @property
    def fraction(self) -> Fraction:
        """Exact rational value of a rank-one element."""
        if isinstance(self.value, tuple):
            raise DomainMismatchError(f"{self} is not a rank-one element")
        return self.value

    def divided_by(self, n: int) -> "GroupElement":
        """γ/n when it lies in the group."""
        if isinstance(self.value, tuple):
            if any(a % n for a in self.value):
                raise DomainMismatchError(f"{self} is not divisible by {n} in {self.group}")
            return GroupElement(self.group, tuple(a // n for a in self.value))
        return GroupElement(self.group, self.value / n)

    def coordinates(self, scale: int = 1) -> List[int]:
        """Integer coordinates; rank-one values are multiplied by ``scale`` first."""
        if isinstance(self.value, tuple):
            return list(self.value)
        scaled = self.value * scale
        if scaled.denominator != 1:
            raise DomainMismatchError(f"{self} is not integral at scale {scale}")
        return [int(scaled)]

    def literal(self) -> str:
        """Exponent literal as written after ``t^``."""
        if isinstance(self.value, tuple):
            return "(" + ",".join(str(a) for a in self.value) + ")"
        if self.value.denominator == 1 and self.value >= 0:
            return str(self.value.numerator)
        return f"({self.value})"

    def __str__(self) -> str:
        if isinstance(self.value, tuple):
            return "(" + ",".join(str(a) for a in self.value) + ")"
        return str(self.value)

    def __repr__(self) -> str:
        return f"GroupElement({self.group}, {self})"


def common_scale(elements: List[GroupElement]) -> int:
    """Least common denominator of rank-one elements (1 for lexicographic ones)."""
    scale = 1
    for element in elements:
        if not isinstance(element.value, tuple):
            scale = lcm(scale, element.value.denominator)
    return scale
