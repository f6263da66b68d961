"""Casimir-Polder, optical dipole and laser-induced Casimir-Polder potentials.

The ordinary CP potential is the ξ-integral (ħμ0/2π)∫dξ ξ²α(iξ)Tr G^(S)(iξ) plus the resonant sum over
downward transitions (empty for a ground-state atom). The non-additive term is
U_LCP = -(μ0ω_L²/2)·α²(ω_L)·E·Re G^(S)(ω_L)·E. Two evaluation modes exist and are always chosen
explicitly: NONRETARDED uses the closed forms, FULL uses the Green's tensor quadrature.
"""

import math
from collections.abc import Callable
from enum import StrEnum

from pydantic import BaseModel, ConfigDict, PositiveFloat

from laser_cp.physics.constants import C, EPS0, HBAR, MU0
from laser_cp.physics.errors import DomainError, ModelError, PoleError
from laser_cp.physics.greens import scattering_green_imag, scattering_green_nonretarded, scattering_green_real
from laser_cp.physics.material import PerfectMirror, PlasmonDirect, SurfaceModel, rp_nonretarded
from laser_cp.physics.optics import evanescent_potential, field_squared, intensity_at
from laser_cp.physics.polarizability import polarizability as polarizability
from laser_cp.physics.polarizability import polarizability_two_level as polarizability_two_level
from laser_cp.physics.quadrature import QuadratureConfig, integrate, tightened
from laser_cp.physics.types import AtomSpecies, EvanescentField, LaserSpec, UniformField, alpha_dc


class EvaluationMode(StrEnum):
    """Which formulas the total potential is built from."""

    NONRETARDED = "nonretarded"
    FULL = "full"


class PolarizabilityModel(StrEnum):
    """Polarizability used at the laser frequency."""

    TWO_LEVEL = "two_level"
    FULL = "full"


class ForceComponent(StrEnum):
    """Potential component a force is taken from."""

    CP = "cp"
    L = "l"
    LCP = "lcp"
    TOT = "tot"


class EvaluationOptions(BaseModel):
    """Knobs shared by total_potential, force and the analysis layer."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    mode: EvaluationMode = EvaluationMode.NONRETARDED
    additive_only: bool = False
    # Pins C3 for the nonretarded U_CP; None picks the perfect-conductor or material value.
    c3: PositiveFloat | None = None
    polarizability_model: PolarizabilityModel = PolarizabilityModel.TWO_LEVEL


class PotentialComponents(BaseModel):
    """The three contributions and their sum, in J."""

    model_config = ConfigDict(frozen=True)

    u_cp: float
    u_l: float
    u_lcp: float
    u_tot: float

    @staticmethod
    def from_parts(u_cp: float, u_l: float, u_lcp: float) -> PotentialComponents:
        """Build with u_tot as the component sum."""
        return PotentialComponents(u_cp=u_cp, u_l=u_l, u_lcp=u_lcp, u_tot=u_cp + u_l + u_lcp)

    def select(self, component: ForceComponent) -> float:
        """Return one component by name."""
        return {
            ForceComponent.CP: self.u_cp,
            ForceComponent.L: self.u_l,
            ForceComponent.LCP: self.u_lcp,
            ForceComponent.TOT: self.u_tot,
        }[component]


def _check_z(z: float) -> None:
    if z <= 0.0:
        raise DomainError(f"atom-surface distance must be positive, got z={z}")


def _xi_integral(integrand: Callable[[float], float], omega10: float, quad: QuadratureConfig, label: str) -> float:
    """Integrate over ξ ∈ (0, ∞) with ξ = ω̃_10·t/(1 - t), t ∈ (0, 1)."""

    def mapped(t: float) -> float:
        xi = omega10 * t / (1 - t)
        return integrand(xi) * omega10 / (1 - t) ** 2

    return integrate(mapped, 0.0, 1.0, quad, label=label)


# --- Casimir-Polder ---


def c3_perfect_conductor(atom: AtomSpecies) -> float:
    """Nonretarded C3 = α_DC·ħ·ω̃_10/(32πε0) for a perfect conductor, J·m³."""
    return alpha_dc(atom) * HBAR * atom.omega10 / (32 * math.pi * EPS0)


def c3_nonretarded(atom: AtomSpecies, surface: SurfaceModel, quad: QuadratureConfig) -> float:
    """Material C3 = ħ/(16π²ε0)·∫dξ α(iξ)·r_p(iξ) with the electrostatic r_p, J·m³."""
    if isinstance(surface, PerfectMirror):
        return c3_perfect_conductor(atom)

    def integrand(xi: float) -> float:
        return polarizability(atom, 1j * xi) * rp_nonretarded(surface, 1j * xi).real

    return HBAR / (16 * math.pi**2 * EPS0) * _xi_integral(integrand, atom.omega10, quad, "C3 integral")


def u_cp_nonretarded(c3: float, z: float) -> float:
    """Return -C3/z³."""
    _check_z(z)
    return -c3 / z**3


def u_cp(atom: AtomSpecies, surface: SurfaceModel, z: float, quad: QuadratureConfig) -> float:
    """Retarded CP potential: off-resonant ξ-integral plus the resonant sum over downward transitions.

    Raises:
        ModelError: PlasmonDirect surfaces carry no retarded response.
        QuadratureError: An integral did not converge.

    """
    _check_z(z)
    if isinstance(surface, PlasmonDirect):
        raise ModelError("retarded CP potential undefined for surface model 'plasmon_direct'")
    inner = tightened(quad)

    def integrand(xi: float) -> float:
        trace = scattering_green_imag(surface, z, xi, inner).trace().real
        return xi * xi * polarizability(atom, 1j * xi) * trace

    off_resonant = HBAR * MU0 / (2 * math.pi) * _xi_integral(integrand, atom.omega10, quad, "U_CP ξ-integral")

    resonant = 0.0
    for freq, dipole in atom.downward_transitions:
        trace_re = scattering_green_real(surface, z, freq, quad).trace().real
        resonant -= MU0 / 3 * freq**2 * dipole**2 * trace_re
    return off_resonant + resonant


# --- optical dipole ---


def u_l(
    atom: AtomSpecies, laser: LaserSpec, z: float, *, polarizability_model: PolarizabilityModel = PolarizabilityModel.TWO_LEVEL
) -> float:
    """Optical dipole potential -¼α(ω_L)|E|², or C0·P·exp(-2z/z0) for an evanescent wave."""
    if z < 0.0:
        raise DomainError(f"distance must be non-negative, got z={z}")
    match laser.field:
        case EvanescentField() as field:
            return evanescent_potential(field, z)
        case UniformField():
            alpha = _laser_polarizability(atom, laser, polarizability_model)
            return -0.25 * alpha * field_squared(laser, atom, z)


def _laser_polarizability(atom: AtomSpecies, laser: LaserSpec, model: PolarizabilityModel) -> float:
    if model is PolarizabilityModel.FULL:
        return polarizability(atom, laser.laser_frequency(atom))
    return polarizability_two_level(atom, laser.detuning)


# --- laser-induced CP ---


def u_lcp(
    atom: AtomSpecies,
    surface: SurfaceModel,
    laser: LaserSpec,
    z: float,
    quad: QuadratureConfig,
    *,
    polarizability_model: PolarizabilityModel = PolarizabilityModel.TWO_LEVEL,
) -> float:
    """Non-additive potential -(μ0ω_L²/2)·α²·|E|²·(sin²θ·Re G_xx + cos²θ·Re G_zz).

    PlasmonDirect surfaces use the electrostatic tensor with Re r_p = sign·q.
    """
    _check_z(z)
    if laser.detuning == 0.0:
        raise PoleError("laser-induced CP potential diverges at zero detuning")
    e_sq = field_squared(laser, atom, z)
    if e_sq == 0.0:
        return 0.0
    omega_l = laser.laser_frequency(atom)
    if isinstance(surface, PlasmonDirect):
        return _u_lcp_electrostatic(atom, laser, rp_nonretarded(surface, omega_l).real, z, polarizability_model)
    alpha = _laser_polarizability(atom, laser, polarizability_model)
    green = scattering_green_real(surface, z, omega_l, quad)
    return -MU0 * omega_l**2 / 2 * alpha**2 * e_sq * green.oriented(laser.theta).real


def _u_lcp_electrostatic(atom: AtomSpecies, laser: LaserSpec, re_rp: float, z: float, model: PolarizabilityModel) -> float:
    """U_LCP with the electrostatic tensor and the chosen laser-frequency polarizability."""
    _check_z(z)
    if laser.detuning == 0.0:
        raise PoleError("laser-induced CP potential diverges at zero detuning")
    e_sq = field_squared(laser, atom, z)
    if e_sq == 0.0:
        return 0.0
    omega_l = laser.laser_frequency(atom)
    alpha = _laser_polarizability(atom, laser, model)
    green = scattering_green_nonretarded(re_rp, z, omega_l)
    return -MU0 * omega_l**2 / 2 * alpha**2 * e_sq * green.oriented(laser.theta).real


def u_lcp_nonretarded(atom: AtomSpecies, laser: LaserSpec, re_rp: float, z: float) -> float:
    """Closed form -ω̃_10²·α_DC²·I(z)·Re r_p/(128ε0²πcΔ²z³), field parallel to the surface."""
    _check_z(z)
    if laser.detuning == 0.0:
        raise PoleError("laser-induced CP potential diverges at zero detuning")
    intensity = intensity_at(laser, atom, z)
    numerator = atom.omega10**2 * alpha_dc(atom) ** 2 * intensity
    return -numerator / (128 * EPS0**2 * math.pi * C * laser.detuning**2 * z**3) * re_rp


def identity_residual(atom: AtomSpecies, laser: LaserSpec, re_rp_as_q: float, z: float, *, c3: float | None = None) -> float:
    """Relative mismatch of U_LCP·ħΔ = U_L·U_CP·Q in the nonretarded closed forms (0 when both sides vanish)."""
    q = abs(re_rp_as_q)
    lhs = u_lcp_nonretarded(atom, laser, q, z) * HBAR * laser.detuning
    c3_value = c3_perfect_conductor(atom) if c3 is None else c3
    rhs = u_l(atom, laser, z) * u_cp_nonretarded(c3_value, z) * q
    scale = max(abs(lhs), abs(rhs))
    if scale == 0.0:
        return 0.0
    return abs(lhs - rhs) / scale


# --- total and force ---


def nonretarded_c3(atom: AtomSpecies, surface: SurfaceModel, quad: QuadratureConfig, options: EvaluationOptions) -> float:
    """C3 used by the nonretarded U_CP: pinned value, perfect conductor for mirror/plasmon surfaces, else material."""
    if options.c3 is not None:
        return options.c3
    if isinstance(surface, PerfectMirror | PlasmonDirect):
        return c3_perfect_conductor(atom)
    return c3_nonretarded(atom, surface, quad)


def total_potential(
    atom: AtomSpecies,
    surface: SurfaceModel,
    laser: LaserSpec,
    z: float,
    quad: QuadratureConfig,
    options: EvaluationOptions | None = None,
    *,
    c3: float | None = None,
) -> PotentialComponents:
    """Evaluate U_CP, U_L, U_LCP and their sum at one distance.

    ``c3`` lets callers sampling many z values pass a precomputed nonretarded C3.
    """
    opts = options or EvaluationOptions()
    _check_z(z)
    use_closed_form_cp = opts.mode is EvaluationMode.NONRETARDED or isinstance(surface, PlasmonDirect)
    if use_closed_form_cp:
        cp = u_cp_nonretarded(nonretarded_c3(atom, surface, quad, opts) if c3 is None else c3, z)
    else:
        cp = u_cp(atom, surface, z, quad)
    light = u_l(atom, laser, z, polarizability_model=opts.polarizability_model)

    if opts.additive_only:
        lcp = 0.0
    elif opts.mode is EvaluationMode.NONRETARDED:
        re_rp = rp_nonretarded(surface, laser.laser_frequency(atom)).real
        if opts.polarizability_model is PolarizabilityModel.TWO_LEVEL:
            orientation = math.sin(laser.theta) ** 2 + 2 * math.cos(laser.theta) ** 2
            lcp = u_lcp_nonretarded(atom, laser, re_rp, z) * orientation
        else:
            lcp = _u_lcp_electrostatic(atom, laser, re_rp, z, opts.polarizability_model)
    else:
        lcp = u_lcp(atom, surface, laser, z, quad, polarizability_model=opts.polarizability_model)
    return PotentialComponents.from_parts(cp, light, lcp)


def central_force(potential: Callable[[float], float], z: float) -> float:
    """Return -dU/dz by a central difference with one level of Richardson extrapolation.

    Raises:
        DomainError: The stencil would reach z <= 0.

    """
    h = max(1e-4 * z, 1e-12)
    if z - h <= 0.0:
        raise DomainError(f"force stencil at z={z} would cross the surface")

    def difference(step: float) -> float:
        return (potential(z + step) - potential(z - step)) / (2 * step)

    coarse = difference(h)
    fine = difference(h / 2)
    return -(4 * fine - coarse) / 3


def force(
    atom: AtomSpecies,
    surface: SurfaceModel,
    laser: LaserSpec,
    z: float,
    quad: QuadratureConfig,
    options: EvaluationOptions | None = None,
    *,
    component: ForceComponent = ForceComponent.TOT,
) -> float:
    """Force along z (N, negative = toward the surface) from one potential component."""
    opts = options or EvaluationOptions()
    c3 = nonretarded_c3(atom, surface, quad, opts) if opts.mode is EvaluationMode.NONRETARDED else None
    return central_force(lambda zz: total_potential(atom, surface, laser, zz, quad, opts, c3=c3).select(component), z)
