"""Surface electromagnetic response: permittivity models, reflection coefficients, plasmonic quality factor."""

import cmath
import math
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, NonNegativeFloat, PositiveFloat

from laser_cp.physics.constants import C
from laser_cp.physics.errors import ModelError


class PerfectMirror(BaseModel):
    """Perfect conductor: r_s = -1, r_p = 1 at every frequency and wavevector."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["perfect_mirror"] = "perfect_mirror"


class ConstantEps(BaseModel):
    """Non-dispersive dielectric half-space."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["constant_eps"] = "constant_eps"
    eps: float = Field(ge=1.0)


class DrudeLorentz(BaseModel):
    """Single-resonance Drude-Lorentz medium, ε(ω) = 1 + ω_P²/(ω_0² - ω² - iγω)."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["drude_lorentz"] = "drude_lorentz"
    omega0: NonNegativeFloat
    omega_p: NonNegativeFloat
    gamma: PositiveFloat


class PlasmonDirect(BaseModel):
    """Plasmonic surface specified directly through Re r_p = sign·q (nonretarded formulas only)."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["plasmon_direct"] = "plasmon_direct"
    q: PositiveFloat
    sign: Literal[1, -1] = 1


SurfaceModel = Annotated[PerfectMirror | ConstantEps | DrudeLorentz | PlasmonDirect, Field(discriminator="kind")]


def permittivity(surface: SurfaceModel, omega: complex) -> complex:
    """Relative permittivity at a real or imaginary angular frequency.

    Raises:
        ModelError: For PerfectMirror and PlasmonDirect, which carry no permittivity.

    """
    match surface:
        case ConstantEps(eps=eps):
            return complex(eps)
        case DrudeLorentz(omega0=omega0, omega_p=omega_p, gamma=gamma):
            return 1.0 + omega_p**2 / (omega0**2 - omega**2 - 1j * gamma * omega)
        case _:
            raise ModelError(f"no permittivity defined for surface model '{surface.kind}'")


def rp_nonretarded(surface: SurfaceModel, omega: complex) -> complex:
    """Electrostatic p-polarized reflection coefficient (ε - 1)/(ε + 1)."""
    match surface:
        case PerfectMirror():
            return 1.0 + 0j
        case PlasmonDirect(q=q, sign=sign):
            return complex(sign * q)
        case _:
            eps = permittivity(surface, omega)
            return (eps - 1.0) / (eps + 1.0)


def _kz(k_sq: complex, k_parallel: float) -> complex:
    """Perpendicular wavevector on the branch Im(k_z) >= 0."""
    root = cmath.sqrt(k_sq - k_parallel**2)
    return -root if root.imag < 0.0 else root


def fresnel(surface: SurfaceModel, omega: complex, k_parallel: float) -> tuple[complex, complex]:
    """Half-space Fresnel coefficients (r_s, r_p) for vacuum above the surface.

    ``omega`` may be real (propagating light) or purely imaginary (iξ).

    Raises:
        ModelError: For PlasmonDirect, which has no retarded coefficients.

    """
    if isinstance(surface, PerfectMirror):
        return -1.0 + 0j, 1.0 + 0j
    if isinstance(surface, PlasmonDirect):
        raise ModelError("retarded coefficients undefined for surface model 'plasmon_direct'")
    if k_parallel < 0.0:
        raise ValueError("k_parallel must be non-negative")

    eps = permittivity(surface, omega)
    k_sq = omega**2 / C**2
    kz = _kz(k_sq, k_parallel)
    kz1 = _kz(eps * k_sq, k_parallel)
    r_s = (kz - kz1) / (kz + kz1)
    r_p = (eps * kz - kz1) / (eps * kz + kz1)
    return r_s, r_p


def quality_factor(surface: SurfaceModel) -> float:
    """Plasmonic quality factor Q ≈ ω_S/(2γ) with ω_S = sqrt(ω_0² + ω_P²/2)."""
    if not isinstance(surface, DrudeLorentz):
        raise ModelError(f"Q undefined for surface model '{surface.kind}'")
    return math.sqrt(surface.omega0**2 + surface.omega_p**2 / 2) / (2 * surface.gamma)
