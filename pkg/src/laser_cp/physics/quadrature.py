"""Adaptive quadrature settings and a checked wrapper around ``scipy.integrate.quad``."""

import logging
from collections.abc import Callable, Sequence

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt
from scipy.integrate import quad

from laser_cp.physics.errors import QuadratureError

logger = logging.getLogger(__name__)


class QuadratureConfig(BaseModel):
    """Tolerances shared by every adaptive integral in the package."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    rel_tol: PositiveFloat = 1e-7
    # Absolute floor so identically-zero integrands (vacuum half-space) terminate immediately.
    abs_tol: PositiveFloat = 1e-30
    max_subdivisions: PositiveInt = 200
    # Exponential damping cut: integrate until exp(-2κz) drops below 10^-freq_cutoff_factor.
    freq_cutoff_factor: float = Field(default=16.0, gt=0.0)

    def halved(self) -> QuadratureConfig:
        """Copy with rel_tol halved (self-consistency check)."""
        return self.model_copy(update={"rel_tol": self.rel_tol / 2})


def integrate(
    func: Callable[[float], float],
    lower: float,
    upper: float,
    quad_cfg: QuadratureConfig,
    *,
    points: Sequence[float] | None = None,
    label: str = "integral",
) -> float:
    """Integrate ``func`` over a finite interval, raising QuadratureError when scipy reports a failure."""
    inner = [p for p in points or () if lower < p < upper]
    result = quad(
        func,
        lower,
        upper,
        epsabs=quad_cfg.abs_tol,
        epsrel=quad_cfg.rel_tol,
        limit=quad_cfg.max_subdivisions,
        points=inner or None,
        full_output=1,
    )
    value, error = float(result[0]), float(result[1])
    # quad appends a message only when ier > 0
    if len(result) > 3:
        logger.debug("%s did not converge: %s", label, result[3])
        raise QuadratureError(f"{label} did not converge within {quad_cfg.max_subdivisions} subdivisions", value, error)
    return value


def tightened(quad_cfg: QuadratureConfig, factor: float = 1e-3) -> QuadratureConfig:
    """Tolerances for an integral nested inside another one, so inner noise stays below the outer tolerance."""
    return quad_cfg.model_copy(update={"rel_tol": max(quad_cfg.rel_tol * factor, 1e-12)})
