"""Value groups, their elements and finitely generated subgroups."""

from .subgroup import FgSubgroup, PurityVerdict
from .value_group import GroupElement, GroupKind, ValueGroup

__all__ = ["FgSubgroup", "GroupElement", "GroupKind", "PurityVerdict", "ValueGroup"]
