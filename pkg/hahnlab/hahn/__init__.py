"""Twisted Hahn series fields k((t^Γ)) with the derivation ∂_c."""

from .derivation import (
    ConstancyVerdict,
    DaggerOutcome,
    DaggerSolved,
    DaggerUnknown,
    DaggerUnsat,
    cross_section,
    dagger_series,
    derive_series,
    is_constant,
    residue,
    solve_dagger,
)
from .series import AboveTruncation, FieldSpec, HahnSeries, PlusInfinity, format_series

__all__ = [
    "AboveTruncation",
    "ConstancyVerdict",
    "DaggerOutcome",
    "DaggerSolved",
    "DaggerUnknown",
    "DaggerUnsat",
    "FieldSpec",
    "HahnSeries",
    "PlusInfinity",
    "cross_section",
    "dagger_series",
    "derive_series",
    "format_series",
    "is_constant",
    "residue",
    "solve_dagger",
]
