"""Shared domain types: atom, laser, sampled curves and extremum records."""

import math
from dataclasses import dataclass
from enum import StrEnum
from typing import Annotated, Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, NonNegativeFloat, PositiveFloat

from laser_cp.physics.constants import HBAR

type FloatArray = npt.NDArray[np.float64]


class AtomSpecies(BaseModel):
    """Effective two-level atom plus optional downward transitions for the resonant CP sum."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    omega10: PositiveFloat = Field(description="Shifted transition angular frequency, rad/s")
    dipole: NonNegativeFloat = Field(description="Transition dipole magnitude, C·m")
    # (frequency rad/s, dipole C·m); empty for a ground-state atom
    downward_transitions: tuple[tuple[PositiveFloat, NonNegativeFloat], ...] = ()


def alpha_dc(atom: AtomSpecies) -> float:
    """Static polarizability 2|d|²/(3ħω̃_10), C²·m²/J."""
    return 2.0 * atom.dipole**2 / (3.0 * HBAR * atom.omega10)


class UniformField(BaseModel):
    """Laser of constant intensity at every distance."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["uniform"] = "uniform"
    intensity: NonNegativeFloat = Field(description="W/m²")


class EvanescentField(BaseModel):
    """Evanescent wave leaking out of the surface, U_L(z) = C0·P·exp(-2z/z0)."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["evanescent"] = "evanescent"
    c0: NonNegativeFloat = Field(description="Potential per unit power at the surface, J/W")
    power: NonNegativeFloat = Field(description="Laser power, W")
    z0: PositiveFloat = Field(description="Decay parameter, m")
    # Provenance of c0 only; never enters a formula.
    waist_x: PositiveFloat | None = None
    waist_y: PositiveFloat | None = None


FieldModel = Annotated[UniformField | EvanescentField, Field(discriminator="kind")]


class LaserSpec(BaseModel):
    """Drive laser: detuning from the atomic transition, field geometry and polarization angle."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    detuning: float = Field(description="Δ = ω_L - ω̃_10, rad/s")
    field: FieldModel
    theta: float = Field(default=math.pi / 2, ge=0.0, le=math.pi, description="Angle between z-axis and E, rad")

    def laser_frequency(self, atom: AtomSpecies) -> float:
        """Return ω_L = ω̃_10 + Δ."""
        return atom.omega10 + self.detuning

    def with_power(self, power: float) -> LaserSpec:
        """Copy with a different evanescent power (uniform fields are returned unchanged)."""
        if isinstance(self.field, EvanescentField):
            return self.model_copy(update={"field": self.field.model_copy(update={"power": power})})
        return self


class ExtremumKind(StrEnum):
    """Kind of a located potential extremum."""

    MINIMUM = "minimum"
    MAXIMUM = "maximum"


class ExtremumRecord(BaseModel):
    """A located minimum or maximum of the total potential at a given laser power."""

    model_config = ConfigDict(frozen=True)

    power: float
    kind: ExtremumKind
    z_position: float
    value: float


@dataclass(frozen=True, slots=True)
class PotentialCurve:
    """Potential components sampled on a strictly increasing z-grid (all values in J)."""

    z_grid: FloatArray
    u_cp: FloatArray
    u_l: FloatArray
    u_lcp: FloatArray
    u_tot: FloatArray

    def __post_init__(self) -> None:
        """Validate grid shape and monotonicity."""
        n = len(self.z_grid)
        if any(len(col) != n for col in (self.u_cp, self.u_l, self.u_lcp, self.u_tot)):
            raise ValueError("all curve columns must have the grid length")
        if n and (self.z_grid[0] <= 0.0 or np.any(np.diff(self.z_grid) <= 0.0)):
            raise ValueError("z_grid must be positive and strictly increasing")

    @staticmethod
    def from_components(z_grid: FloatArray, u_cp: FloatArray, u_l: FloatArray, u_lcp: FloatArray) -> PotentialCurve:
        """Build a curve whose total column is the component sum."""
        return PotentialCurve(z_grid=z_grid, u_cp=u_cp, u_l=u_l, u_lcp=u_lcp, u_tot=u_cp + u_l + u_lcp)
