"""Laser field profiles.

Time-averaging convention: E is the peak amplitude of E·cos(ω_L t), I = ½ε0c|E|², and
U_L = -¼α(ω_L)|E|² already contains both factors of ½ (quadratic response and cycle average).
The evanescent intensity is reconstructed from U_L(z) = C0·P·exp(-2z/z0), so feeding it back
into U_L reproduces the exponential profile exactly.
"""

import math

from laser_cp.physics.constants import C, EPS0
from laser_cp.physics.errors import DomainError
from laser_cp.physics.polarizability import polarizability_two_level
from laser_cp.physics.types import AtomSpecies, EvanescentField, LaserSpec, UniformField


def evanescent_potential(field: EvanescentField, z: float) -> float:
    """Return C0·P·exp(-2z/z0) in J."""
    return field.c0 * field.power * math.exp(-2 * z / field.z0)


def intensity_at(laser: LaserSpec, atom: AtomSpecies, z: float) -> float:
    """Laser intensity at distance z, W/m².

    Raises:
        DomainError: z < 0, or an evanescent barrier requested with red (or zero) detuning.

    """
    if z < 0.0:
        raise DomainError(f"distance must be non-negative, got z={z}")
    match laser.field:
        case UniformField(intensity=intensity):
            return intensity
        case EvanescentField() as field:
            if laser.detuning <= 0.0:
                raise DomainError("inconsistent sign: evanescent barrier requires blue detuning")
            if field.power == 0.0 or field.c0 == 0.0:
                return 0.0
            alpha = polarizability_two_level(atom, laser.detuning)
            return -2 * EPS0 * C * evanescent_potential(field, z) / alpha


def field_squared(laser: LaserSpec, atom: AtomSpecies, z: float) -> float:
    """Squared peak field amplitude |E|² = 2I/(ε0c), V²/m²."""
    return 2 * intensity_at(laser, atom, z) / (EPS0 * C)
