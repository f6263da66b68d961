"""Physical constants in SI units.

CODATA values come from ``scipy.constants`` so golden outputs are reproducible for a given
scipy release. ``eps0`` is derived as ``1/(mu0*c^2)`` so the vacuum relation holds to rounding.
"""

import math

from pydantic import BaseModel, ConfigDict, PositiveFloat, model_validator
from scipy import constants as codata


class PhysicalConstants(BaseModel):
    """The four constants every formula uses."""

    model_config = ConfigDict(frozen=True)

    hbar: PositiveFloat  # J·s
    eps0: PositiveFloat  # F/m
    mu0: PositiveFloat  # N/A²
    c: PositiveFloat  # m/s

    @model_validator(mode="after")
    def _check_vacuum_relation(self) -> PhysicalConstants:
        if not math.isclose(self.mu0 * self.eps0 * self.c**2, 1.0, rel_tol=1e-12):
            raise ValueError("mu0*eps0*c^2 must equal 1")
        return self


CODATA = PhysicalConstants(hbar=codata.hbar, eps0=1.0 / (codata.mu_0 * codata.c**2), mu0=codata.mu_0, c=codata.c)

HBAR = CODATA.hbar
EPS0 = CODATA.eps0
MU0 = CODATA.mu0
C = CODATA.c
