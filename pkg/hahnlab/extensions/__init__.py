"""Quadratic monomial extensions, the constant scan and the example catalog."""

from .quadratic import QuadExtElement, ext_derive, ext_is_constant
from .scan import ext_constant_scan, tower_datum, tower_spec
from .suite import EXAMPLES, run_example_suite

__all__ = [
    "EXAMPLES",
    "QuadExtElement",
    "ext_constant_scan",
    "ext_derive",
    "ext_is_constant",
    "run_example_suite",
    "tower_datum",
    "tower_spec",
]
