"""Differential polynomials, d-Hensel lifting and Newton root lifting."""

from .diffpoly import DifferentialPolynomial, ResidueDiffPolynomial, dp_evaluate, dp_reduce, is_quasi_linear
from .lifting import LiftResult, LiftStep, dhensel_lift, dhensel_lift_traced, solve_one_unit_dagger
from .roots import hensel_nth_root, purity_witness

__all__ = [
    "DifferentialPolynomial",
    "LiftResult",
    "LiftStep",
    "ResidueDiffPolynomial",
    "dhensel_lift",
    "dhensel_lift_traced",
    "dp_evaluate",
    "dp_reduce",
    "hensel_nth_root",
    "is_quasi_linear",
    "purity_witness",
    "solve_one_unit_dagger",
]
