"""Custom exceptions for hahnlab"""

from typing import Any, FrozenSet, Optional


class HahnLabError(Exception):
    """Base exception for all hahnlab errors"""

    pass


class CertifiedFailure(HahnLabError):
    """Mixin base for errors that certify an equation has no solution"""

    pass


# ---------------------------------------------------------------------------
# Configuration and parsing
# ---------------------------------------------------------------------------


class ConfigurationError(HahnLabError):
    """Raised when there's an issue with configuration"""

    pass


class ParseError(HahnLabError):
    """Raised when a literal or expression cannot be parsed.

    Carries the 1-based ``line`` and ``column`` of the offending token and the
    set of token kinds that would have been accepted there.
    """

    def __init__(self, message: str, line: int = 1, column: int = 1, expected: Optional[FrozenSet[str]] = None):
        self.message = message
        self.line = line
        self.column = column
        self.expected = frozenset(expected or ())
        detail = f"{line}:{column}: {message}"
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(detail)


# ---------------------------------------------------------------------------
# Domain and support
# ---------------------------------------------------------------------------


class DomainMismatchError(HahnLabError, ValueError):
    """Raised when values from different groups, fields or field specs are mixed"""

    pass


class UnsupportedSpecError(HahnLabError):
    """Raised when an operation does not support the requested field spec"""

    pass


class UnsupportedValueGroupError(UnsupportedSpecError):
    """Raised when an operation needs an archimedean or finitely generated value group"""

    pass


class CoefficientSizeError(UnsupportedSpecError):
    """Raised when a polynomial is too large to factor or solve at desk scale"""

    pass


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------


class DivisionByZeroError(HahnLabError, ZeroDivisionError):
    """Raised on division by an exact zero"""

    pass


class NeedsPrecisionError(HahnLabError):
    """Raised when a truncated value is too imprecise to decide the answer"""

    pass


class PrecisionExhaustedError(NeedsPrecisionError):
    """Raised when inputs run out of precision before a requested bound"""

    pass


class NotInValuationRingError(HahnLabError):
    """Raised when an element with negative valuation is reduced to the residue field"""

    pass


class InvalidOperatorError(HahnLabError):
    """Raised when a linear differential operator is zero or malformed"""

    pass


# ---------------------------------------------------------------------------
# Lifting and roots
# ---------------------------------------------------------------------------


class NotQuasiLinearError(HahnLabError):
    """Raised when a differential polynomial's reduction does not have total degree 1"""

    pass


class LinearSurjectivityFailure(CertifiedFailure):
    """Raised when a residue linear equation has no solution in the coefficient field.

    ``gamma`` is the valuation level of the failing step, ``operator`` the
    (twisted) residue operator and ``rhs`` the right-hand side.
    """

    def __init__(self, gamma: Any, operator: Any, rhs: Any):
        self.gamma = gamma
        self.operator = operator
        self.rhs = rhs
        super().__init__(f"no solution in k of ({operator})(u) = {rhs} at level {gamma}")


class LiftIterationLimitError(HahnLabError):
    """Raised when the lifting loop exceeds its iteration cap"""

    pass


class NoRootInResidueError(CertifiedFailure):
    """Raised when the residue of a unit has no nth root in the coefficient field"""

    pass


class NotConstantError(HahnLabError):
    """Raised when a purity witness is requested for a non-constant element"""

    pass


class PurityPreconditionError(HahnLabError):
    """Raised when valuations do not satisfy v(b) = n·v(a)"""

    pass


class InvariantViolationError(HahnLabError, AssertionError):
    """Raised when a runtime-checked mathematical invariant fails"""

    pass
