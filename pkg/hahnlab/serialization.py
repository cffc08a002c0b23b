"""Canonical JSON output.

Exact values (fractions, group elements, coefficients, series) are written as
strings; keys are sorted and the layout is fixed so outputs can be compared
byte for byte.
"""

import json
from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel

from .coeffs.rational_function import RationalFunction
from .groups.subgroup import FgSubgroup
from .groups.value_group import GroupElement
from .hahn.series import AboveTruncation, HahnSeries, PlusInfinity


def to_jsonable(value: Any) -> Any:
    """Convert a result value into plain JSON data with exact values as strings."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, int):
        return value
    if isinstance(value, (Fraction, GroupElement, RationalFunction, HahnSeries, PlusInfinity, AboveTruncation)):
        return str(value)
    if isinstance(value, FgSubgroup):
        return [str(g) for g in value.basis]
    if isinstance(value, BaseModel):
        return to_jsonable(value.model_dump(mode="json"))
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def canonical_json(value: Any) -> str:
    return json.dumps(to_jsonable(value), sort_keys=True, indent=2, ensure_ascii=False)
