"""
Centralized default values for hahnlab.

Every numeric bound, cap, and literal default used across config.py, the
solvers, and the example suite is defined here once.  Import from this module
instead of hardcoding values.
"""

# ── Session Literals ────────────────────────────────────────────────────
DEFAULT_COEFF_FIELD = "Qx"
DEFAULT_VALUE_GROUP = "Z"
DEFAULT_CMAP = "0"
DEFAULT_TRUNCATION = "8"
DEFAULT_OUTPUT_FORMAT = "text"
DEFAULT_LOG_LEVEL = "WARNING"

# ── Coefficient Arithmetic ──────────────────────────────────────────────
MAX_FACTOR_DEGREE = 32  # irreducible factorization is refused above this degree
MAX_SOLUTION_DEGREE = 64  # undetermined-coefficient ansatz size for solve_linear

# ── Series Arithmetic ───────────────────────────────────────────────────
MAX_EXPANSION_TERMS = 512  # geometric-series steps before inversion gives up

# ── Dagger Equation ─────────────────────────────────────────────────────
DEFAULT_DAGGER_SEARCH_BOUND = 50

# ── Lifting ─────────────────────────────────────────────────────────────
LIFT_ITERATION_MULTIPLIER = 10  # cap = multiplier * denominator * bound
MAX_NEWTON_STEPS = 64

# ── Example Suite ───────────────────────────────────────────────────────
DEFAULT_EXAMPLE_BOUND = 6
DEFAULT_EXAMPLE_SEED = 20240917
GROUP_VALUATION_SAMPLES = 12
