"""hahnlab — exact computations in Hahn series fields with a twisted derivation

Coefficients live in Q or Q(x), exponents in Z, Q, (1/d)Z or Z^n with the
lexicographic order, and the derivation on k((t^Γ)) is twisted by an additive
map c: Γ → k.  The package decides logarithmic-derivative equations, lifts
zeros of quasi-linear differential polynomials, classifies the constants and
runs a catalog of worked examples.
"""

__version__ = "0.3.0"

from .cmaps import AdditiveMap, ConstantsVerdict, c_eval, c_kernel, classify_constants, image_meets_dagger
from .coeffs import CoeffField, LinearDiffOperator, RationalFunction, log_derivative_membership, solve_linear
from .config import HahnLabConfig, build_field_spec, load_config, validate_config
from .dhensel import DifferentialPolynomial, dhensel_lift, hensel_nth_root, purity_witness, solve_one_unit_dagger
from .exceptions import (
    CertifiedFailure,
    ConfigurationError,
    DomainMismatchError,
    HahnLabError,
    LinearSurjectivityFailure,
    NeedsPrecisionError,
    ParseError,
    PrecisionExhaustedError,
    UnsupportedSpecError,
)
from .extensions import QuadExtElement, ext_constant_scan, run_example_suite
from .groups import FgSubgroup, GroupElement, ValueGroup
from .hahn import FieldSpec, HahnSeries, dagger_series, derive_series, is_constant, residue, solve_dagger
from .parsing import parse_expression, parse_polynomial, parse_series

__all__ = [
    # Value groups and coefficients
    "ValueGroup",
    "GroupElement",
    "FgSubgroup",
    "CoeffField",
    "RationalFunction",
    "LinearDiffOperator",
    "solve_linear",
    "log_derivative_membership",
    # c-maps
    "AdditiveMap",
    "ConstantsVerdict",
    "c_eval",
    "c_kernel",
    "classify_constants",
    "image_meets_dagger",
    # Series
    "FieldSpec",
    "HahnSeries",
    "derive_series",
    "dagger_series",
    "residue",
    "is_constant",
    "solve_dagger",
    # Lifting
    "DifferentialPolynomial",
    "dhensel_lift",
    "hensel_nth_root",
    "purity_witness",
    "solve_one_unit_dagger",
    # Extensions and examples
    "QuadExtElement",
    "ext_constant_scan",
    "run_example_suite",
    # Parsing
    "parse_expression",
    "parse_series",
    "parse_polynomial",
    # Configuration
    "HahnLabConfig",
    "build_field_spec",
    "load_config",
    "validate_config",
    # Exceptions
    "HahnLabError",
    "CertifiedFailure",
    "ConfigurationError",
    "DomainMismatchError",
    "LinearSurjectivityFailure",
    "NeedsPrecisionError",
    "ParseError",
    "PrecisionExhaustedError",
    "UnsupportedSpecError",
]
