"""Result data types returned by the service layer."""

from pydantic import BaseModel

from laser_cp.physics.types import ExtremumRecord


class CurveResult(BaseModel):
    """Result of writing a potential curve."""

    path: str
    rows: int
    mode: str
    additive_only: bool
    z_min: float
    z_max: float


class DeltaResult(BaseModel):
    """Result of writing a ΔU = U_CP - U_LCP curve."""

    path: str
    rows: int


class SweepFailureItem(BaseModel):
    """A power that could not be swept."""

    power: float
    message: str


class ExtremaResult(BaseModel):
    """Result of a power sweep written as extremum rows."""

    path: str
    records: list[ExtremumRecord]
    failures: list[SweepFailureItem]


class CheckItem(BaseModel):
    """Verdict of one oracle check."""

    name: str
    passed: bool
    max_residual: float
    tolerance: float
    detail: str = ""


class CheckResult(BaseModel):
    """Verdicts of the whole oracle suite."""

    items: list[CheckItem]

    @property
    def passed(self) -> bool:
        """True when every check passed."""
        return all(item.passed for item in self.items)
