"""Report models shared by the example suite, the constant scan and the CLI.

Every exact value is carried as its canonical string (``p/q`` for rationals,
the series grammar for series) so that json output never touches floating
point.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

# ---------------------------------------------------------------------------
# Example suite
# ---------------------------------------------------------------------------


class ExampleStatus(str, Enum):
    """Outcome of a suite example."""

    PASS = "pass"
    FAIL = "fail"


class ExampleReport(BaseModel):
    """Result of one catalog example.

    ``anchor`` names the statement the example reproduces.  A failing report
    always carries the ``seed`` its inputs were drawn with.
    """

    model_config = ConfigDict(validate_assignment=True)

    id: str = Field(pattern=r"^E\d+$")
    anchor: str
    status: ExampleStatus
    witness: Optional[str] = None
    certificate: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = Field(default_factory=dict)
    seed: Optional[int] = None

    @model_validator(mode="after")
    def _failures_are_reproducible(self) -> "ExampleReport":
        if self.status == ExampleStatus.FAIL and self.seed is None:
            raise ValueError("a failing example report must carry its seed")
        return self

    @property
    def passed(self) -> bool:
        return self.status == ExampleStatus.PASS


# ---------------------------------------------------------------------------
# Quadratic extension constant scan
# ---------------------------------------------------------------------------


class HalfIntegerCertificate(BaseModel):
    """Why no constant has leading term u·t^(α)·s^(k)·w with α ∉ ℤ.

    The coefficient u would need u† = ``required_dagger``; ``membership``
    records why that value is not a logarithmic derivative.
    """

    s_exponent: int
    required_dagger: str
    kernel_dimension: int = Field(ge=0)
    membership: Dict[str, Any]


class ConstantScanReport(BaseModel):
    model_config = ConfigDict(validate_assignment=True)

    bound: int = Field(ge=1)
    extension: str
    w_dagger: str
    w_is_constant: bool
    half_integer_valuations: List[str]
    half_integer_constants: List[str] = Field(default_factory=list)
    certificates: List[HalfIntegerCertificate] = Field(default_factory=list)
    integer_constants: List[str] = Field(default_factory=list)
    constant_valuations: List[str] = Field(default_factory=list)
    pure: bool
    purity_witness: Optional[Dict[str, str]] = None

    @property
    def no_half_integer_constants(self) -> bool:
        return not self.half_integer_constants and len(self.certificates) > 0


# ---------------------------------------------------------------------------
# Lifting traces
# ---------------------------------------------------------------------------


class LiftStepRecord(BaseModel):
    """A solved residue equation of the lifting loop (``gamma`` is null for the first step)."""

    gamma: Optional[str] = None
    operator: str
    rhs: str
    correction: str
    residual_valuation: str


class LiftReport(BaseModel):
    solution: str
    residual: str
    bound: str
    steps: List[LiftStepRecord] = Field(default_factory=list)
