"""Ground-state atomic polarizability: full single-sum form and the near-resonant two-level form."""

import logging

from laser_cp.physics.constants import HBAR
from laser_cp.physics.errors import PoleError
from laser_cp.physics.types import AtomSpecies, alpha_dc

logger = logging.getLogger(__name__)

# Two-level form is a near-resonance approximation; beyond this |Δ|/ω̃_10 it is only indicative.
_TWO_LEVEL_DETUNING_LIMIT = 0.01


def polarizability(atom: AtomSpecies, omega: complex) -> float:
    """Isotropic polarizability (2/3ħ)·Σ_k ω_k|d_k|²/(ω_k² - ω²), C²·m²/J.

    ``omega`` is real or purely imaginary, so ω² is real. Downward transitions enter with
    negative transition frequency.

    Raises:
        PoleError: omega coincides with a transition frequency.

    """
    omega_sq = (omega * omega).real if isinstance(omega, complex) else omega * omega
    terms = [(atom.omega10, atom.dipole), *((-freq, dipole) for freq, dipole in atom.downward_transitions)]
    total = 0.0
    for freq, dipole in terms:
        denominator = freq * freq - omega_sq
        if abs(denominator) <= 1e-15 * freq * freq:
            raise PoleError(f"frequency {omega} is on the transition at {abs(freq):.6e} rad/s")
        total += freq * dipole**2 / denominator
    return 2 * total / (3 * HBAR)


def polarizability_two_level(atom: AtomSpecies, detuning: float) -> float:
    """Near-resonant polarizability -α_DC·ω̃_10/(2Δ), C²·m²/J.

    Raises:
        PoleError: detuning is zero.

    """
    if detuning == 0.0:
        raise PoleError("two-level polarizability diverges at zero detuning")
    if abs(detuning) / atom.omega10 > _TWO_LEVEL_DETUNING_LIMIT:
        logger.warning("Two-level polarizability used far from resonance: |Δ|/ω10=%.3g", abs(detuning) / atom.omega10)
    return -alpha_dc(atom) * atom.omega10 / (2 * detuning)
