"""Diagonal scattering Green's tensor of a planar half-space at coincident points.

Convention: G solves ∇×∇×G - (ω/c)²G = δ, units 1/m. With this normalization the U_CP ξ-integral
carries the prefactor ħμ0/(2π) and U_LCP carries -μ0ω_L²/2, and the electrostatic limit is
G_xx = G_yy = c²r_p/(32πω²z³), G_zz = 2G_xx.

The Sommerfeld k∥-integral is split at the light line k∥ = ω/c. The propagating sector is integrated
in k_z (the substitution k∥dk∥ = -k_z dk_z removes the 1/k_z singularity), the evanescent sector
in κ = sqrt(k∥² - k²). At imaginary frequency only the evanescent form exists.
"""

import cmath
import math
from collections.abc import Callable
from dataclasses import dataclass

from laser_cp.physics.constants import C
from laser_cp.physics.errors import DomainError, ModelError
from laser_cp.physics.material import ConstantEps, PerfectMirror, PlasmonDirect, SurfaceModel, fresnel
from laser_cp.physics.quadrature import QuadratureConfig, integrate


@dataclass(frozen=True, slots=True)
class GreensDiag:
    """Diagonal of G^(S)(r, r, ω) for a planar surface; gxx == gyy by symmetry."""

    gxx: complex
    gyy: complex
    gzz: complex

    @staticmethod
    def planar(gxx: complex, gzz: complex) -> GreensDiag:
        """Build from the two independent planar components."""
        return GreensDiag(gxx=gxx, gyy=gxx, gzz=gzz)

    def trace(self) -> complex:
        """Return gxx + gyy + gzz."""
        return self.gxx + self.gyy + self.gzz

    def oriented(self, theta: float) -> complex:
        """Project onto a unit field vector at angle theta from the surface normal."""
        return math.sin(theta) ** 2 * self.gxx + math.cos(theta) ** 2 * self.gzz


def _check_z(z: float) -> None:
    if z <= 0.0:
        raise DomainError(f"atom-surface distance must be positive, got z={z}")


def scattering_green_nonretarded(rp: complex, z: float, omega: complex) -> GreensDiag:
    """Electrostatic image tensor, valid for ω·z/c ≪ 1."""
    _check_z(z)
    gxx = C**2 * rp / (32 * math.pi * omega**2 * z**3)
    return GreensDiag.planar(gxx, 2 * gxx)


def mirror_green_real(z: float, omega: float) -> GreensDiag:
    """Perfect-mirror tensor at real frequency (image dipole solution)."""
    _check_z(z)
    a = 2 * omega * z / C
    phase = cmath.exp(1j * a) / (8 * math.pi * z)
    gxx = -phase * (1 + 1j / a - 1 / a**2)
    gzz = phase * (2 / a**2 - 2j / a)
    return GreensDiag.planar(gxx, gzz)


def mirror_green_imag(z: float, xi: float) -> GreensDiag:
    """Perfect-mirror tensor at imaginary frequency iξ; all components real and negative."""
    _check_z(z)
    b = 2 * xi * z / C
    decay = math.exp(-b) / (8 * math.pi * z)
    gxx = -decay * (1 + 1 / b + 1 / b**2)
    gzz = -decay * (2 / b + 2 / b**2)
    return GreensDiag.planar(complex(gxx), complex(gzz))


def _integrate_complex(
    func: Callable[[float], complex], lower: float, upper: float, quad: QuadratureConfig, label: str, points: list[float]
) -> complex:
    re = integrate(lambda x: func(x).real, lower, upper, quad, points=points, label=f"{label} (re)")
    im = integrate(lambda x: func(x).imag, lower, upper, quad, points=points, label=f"{label} (im)")
    return complex(re, im)


def _kappa_max(z: float, quad: QuadratureConfig) -> float:
    """Decay-variable cut where exp(-2κz) has fallen by 10^-freq_cutoff_factor."""
    return quad.freq_cutoff_factor * math.log(10) / (2 * z)


def scattering_green_real(
    surface: SurfaceModel, z: float, omega: float, quad: QuadratureConfig, *, closed_form: bool = True
) -> GreensDiag:
    """Scattering tensor at real frequency by Sommerfeld quadrature.

    PerfectMirror dispatches to the image solution unless ``closed_form`` is False.

    Raises:
        DomainError: z <= 0 or omega <= 0.
        ModelError: PlasmonDirect surfaces (no retarded coefficients).
        QuadratureError: An integral did not converge.

    """
    _check_z(z)
    if omega <= 0.0:
        raise DomainError(f"frequency must be positive, got omega={omega}")
    if isinstance(surface, PlasmonDirect):
        raise ModelError("retarded Green's tensor undefined for surface model 'plasmon_direct'")
    if closed_form and isinstance(surface, PerfectMirror):
        return mirror_green_real(z, omega)

    k = omega / C
    k_sq = k * k

    def coefficients_propagating(kz: float) -> tuple[complex, complex]:
        return fresnel(surface, omega, math.sqrt(max(k_sq - kz * kz, 0.0)))

    def xx_propagating(kz: float) -> complex:
        r_s, r_p = coefficients_propagating(kz)
        return 1j * (r_s - kz * kz / k_sq * r_p) * cmath.exp(2j * kz * z)

    def zz_propagating(kz: float) -> complex:
        _, r_p = coefficients_propagating(kz)
        return 1j * (k_sq - kz * kz) * r_p * cmath.exp(2j * kz * z)

    def xx_evanescent(kappa: float) -> complex:
        r_s, r_p = fresnel(surface, omega, math.sqrt(k_sq + kappa * kappa))
        return (r_s + kappa * kappa / k_sq * r_p) * math.exp(-2 * kappa * z)

    def zz_evanescent(kappa: float) -> complex:
        _, r_p = fresnel(surface, omega, math.sqrt(k_sq + kappa * kappa))
        return (k_sq + kappa * kappa) * r_p * math.exp(-2 * kappa * z)

    # In-medium light line: Fresnel coefficients have a square-root kink at κ = k·sqrt(ε - 1).
    kinks = [k * math.sqrt(surface.eps - 1)] if isinstance(surface, ConstantEps) and surface.eps > 1 else []
    kappa_max = _kappa_max(z, quad)

    gxx = (
        _integrate_complex(xx_propagating, 0.0, k, quad, "G_xx propagating", [])
        + _integrate_complex(xx_evanescent, 0.0, kappa_max, quad, "G_xx evanescent", kinks)
    ) / (8 * math.pi)
    gzz = (
        _integrate_complex(zz_propagating, 0.0, k, quad, "G_zz propagating", [])
        + _integrate_complex(zz_evanescent, 0.0, kappa_max, quad, "G_zz evanescent", kinks)
    ) / (4 * math.pi * k_sq)
    return GreensDiag.planar(gxx, gzz)


def scattering_green_imag(
    surface: SurfaceModel, z: float, xi: float, quad: QuadratureConfig, *, closed_form: bool = True
) -> GreensDiag:
    """Scattering tensor at imaginary frequency iξ; components are real.

    Integrated in u = κ - ξ/c with the common factor exp(-2ξz/c) pulled out of the integral.

    Raises:
        DomainError: z <= 0 or xi <= 0.
        ModelError: PlasmonDirect surfaces.
        QuadratureError: An integral did not converge.

    """
    _check_z(z)
    if xi <= 0.0:
        raise DomainError(f"imaginary frequency must be positive, got xi={xi}")
    if isinstance(surface, PlasmonDirect):
        raise ModelError("retarded Green's tensor undefined for surface model 'plasmon_direct'")
    if closed_form and isinstance(surface, PerfectMirror):
        return mirror_green_imag(z, xi)

    q = xi / C
    omega = 1j * xi

    def coefficients(u: float) -> tuple[float, float]:
        r_s, r_p = fresnel(surface, omega, math.sqrt(u * (u + 2 * q)))
        return r_s.real, r_p.real

    def xx_integrand(u: float) -> float:
        kappa = q + u
        r_s, r_p = coefficients(u)
        return (r_s - (kappa / q) ** 2 * r_p) * math.exp(-2 * u * z)

    def zz_integrand(u: float) -> float:
        kappa = q + u
        _, r_p = coefficients(u)
        return (kappa * kappa - q * q) * r_p * math.exp(-2 * u * z)

    u_max = _kappa_max(z, quad)
    damping = math.exp(-2 * q * z)
    gxx = damping * integrate(xx_integrand, 0.0, u_max, quad, label="G_xx(iξ)") / (8 * math.pi)
    gzz = -damping * integrate(zz_integrand, 0.0, u_max, quad, label="G_zz(iξ)") / (4 * math.pi * q * q)
    return GreensDiag.planar(complex(gxx), complex(gzz))
