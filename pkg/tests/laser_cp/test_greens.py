"""Tests for greens module."""

import math

import numpy as np
import pytest

from laser_cp.physics.errors import DomainError, ModelError
from laser_cp.physics.greens import (
    GreensDiag,
    mirror_green_imag,
    mirror_green_real,
    scattering_green_imag,
    scattering_green_nonretarded,
    scattering_green_real,
)
from laser_cp.physics.material import ConstantEps, DrudeLorentz, PerfectMirror, PlasmonDirect
from laser_cp.physics.quadrature import QuadratureConfig

OMEGA = 2.37e15
QUAD = QuadratureConfig()


class TestGreensDiag:
    """Tests for GreensDiag."""

    def test_planar_symmetry(self):
        """gyy mirrors gxx."""
        g = GreensDiag.planar(1 + 2j, 3 + 0j)
        assert g.gyy == g.gxx
        assert g.trace() == 5 + 4j

    @pytest.mark.parametrize(("theta", "expected"), [(math.pi / 2, 1.0), (0.0, 3.0), (math.pi / 4, 2.0)])
    def test_oriented(self, theta: float, expected: float):
        """sin^2*gxx + cos^2*gzz."""
        assert GreensDiag.planar(1.0, 3.0).oriented(theta).real == pytest.approx(expected, rel=1e-12)


class TestNonretarded:
    """Tests for scattering_green_nonretarded function."""

    def test_zz_is_twice_xx(self):
        """Electrostatic image: G_zz = 2 G_xx."""
        g = scattering_green_nonretarded(0.4, 10e-9, OMEGA)
        assert g.gzz == pytest.approx(2 * g.gxx, rel=1e-15)

    @pytest.mark.parametrize("z", [1e-9, 2e-9])
    def test_mirror_real_frequency_limit(self, z: float):
        """Closed-form mirror tensor reduces to the image result for omega*z/c << 1."""
        exact = mirror_green_real(z, OMEGA)
        approx = scattering_green_nonretarded(1.0, z, OMEGA)
        assert exact.gxx.real == pytest.approx(approx.gxx.real, rel=1e-3)
        assert exact.gzz.real == pytest.approx(approx.gzz.real, rel=1e-3)

    def test_mirror_imaginary_frequency_limit(self):
        """At i*xi the electrostatic tensor is negative and matches the mirror closed form."""
        exact = mirror_green_imag(1e-9, OMEGA)
        approx = scattering_green_nonretarded(1.0, 1e-9, 1j * OMEGA)
        assert approx.gxx.real < 0
        assert exact.gxx.real == pytest.approx(approx.gxx.real, rel=1e-3)
        assert exact.gzz.real == pytest.approx(approx.gzz.real, rel=1e-3)

    def test_distance_must_be_positive(self):
        """z <= 0 is outside the domain."""
        with pytest.raises(DomainError):
            scattering_green_nonretarded(1.0, 0.0, OMEGA)


class TestMirrorImag:
    """Tests for mirror_green_imag function."""

    @pytest.mark.parametrize("z", [10e-9, 100e-9, 1e-6])
    def test_components_negative(self, z: float):
        """Image solution at imaginary frequency is real and attractive."""
        g = mirror_green_imag(z, OMEGA)
        assert g.gxx.real < 0
        assert g.gzz.real < 0
        assert g.gxx.imag == 0.0


class TestScatteringGreenReal:
    """Tests for scattering_green_real function."""

    @pytest.mark.parametrize("z", [30e-9, 300e-9])
    def test_mirror_quadrature_matches_closed_form(self, z: float):
        """Sommerfeld quadrature with r_s = -1, r_p = 1 reproduces the image solution."""
        quadrature = scattering_green_real(PerfectMirror(), z, OMEGA, QUAD, closed_form=False)
        closed = mirror_green_real(z, OMEGA)
        assert quadrature.gxx == pytest.approx(closed.gxx, rel=1e-5)
        assert quadrature.gzz == pytest.approx(closed.gzz, rel=1e-5)

    @pytest.mark.parametrize("z", [30e-9, 100e-9])
    def test_large_eps_approaches_mirror(self, z: float):
        """eps = 1e8 reproduces the mirror's real parts within 0.1%."""
        dielectric = scattering_green_real(ConstantEps(eps=1e8), z, OMEGA, QUAD)
        closed = mirror_green_real(z, OMEGA)
        assert dielectric.gxx.real == pytest.approx(closed.gxx.real, rel=1e-3)
        assert dielectric.gzz.real == pytest.approx(closed.gzz.real, rel=1e-3)

    def test_large_eps_at_micron_distance(self):
        """At 1 µm eps = 1e8 still matches the mirror relative to the larger component."""
        dielectric = scattering_green_real(ConstantEps(eps=1e8), 1e-6, OMEGA, QUAD)
        closed = mirror_green_real(1e-6, OMEGA)
        scale = max(abs(closed.gxx.real), abs(closed.gzz.real))
        assert abs(dielectric.gxx.real - closed.gxx.real) < 1e-3 * scale
        assert abs(dielectric.gzz.real - closed.gzz.real) < 1e-3 * scale

    def test_vacuum_gives_zero(self):
        """A half-space with eps = 1 scatters nothing."""
        g = scattering_green_real(ConstantEps(eps=1.0), 50e-9, OMEGA, QUAD)
        assert abs(g.gxx) == pytest.approx(0.0, abs=1e-20)
        assert abs(g.gzz) == pytest.approx(0.0, abs=1e-20)

    def test_nonretarded_limit_for_dielectric(self):
        """Near the surface the quadrature approaches c^2*r_p/(32*pi*omega^2*z^3)."""
        surface = ConstantEps(eps=2.286)
        z = 1e-9
        g = scattering_green_real(surface, z, OMEGA, QUAD)
        approx = scattering_green_nonretarded((2.286 - 1) / (2.286 + 1), z, OMEGA)
        assert g.gxx.real == pytest.approx(approx.gxx.real, rel=1e-2)
        assert g.gzz.real == pytest.approx(approx.gzz.real, rel=1e-2)

    def test_plasmon_rejected(self):
        """Direct plasmon surfaces have no retarded tensor."""
        with pytest.raises(ModelError):
            scattering_green_real(PlasmonDirect(q=60.0), 50e-9, OMEGA, QUAD)

    @pytest.mark.parametrize(("z", "omega"), [(0.0, OMEGA), (-1e-9, OMEGA), (1e-8, 0.0)])
    def test_domain(self, z: float, omega: float):
        """Non-positive distance or frequency is rejected."""
        with pytest.raises(DomainError):
            scattering_green_real(ConstantEps(eps=2.0), z, omega, QUAD)


class TestScatteringGreenImag:
    """Tests for scattering_green_imag function."""

    @pytest.mark.parametrize("z", [10e-9, 100e-9, 1e-6])
    def test_mirror_quadrature_matches_closed_form(self, z: float):
        """Quadrature of the mirror coefficients reproduces the image solution at i*xi."""
        quadrature = scattering_green_imag(PerfectMirror(), z, OMEGA, QUAD, closed_form=False)
        closed = mirror_green_imag(z, OMEGA)
        assert quadrature.gxx.real == pytest.approx(closed.gxx.real, rel=1e-6)
        assert quadrature.gzz.real == pytest.approx(closed.gzz.real, rel=1e-6)

    @pytest.mark.parametrize("z", [10e-9, 100e-9, 1e-6])
    def test_large_eps_approaches_mirror(self, z: float):
        """eps = 1e8 reproduces the mirror within 0.1% per component."""
        dielectric = scattering_green_imag(ConstantEps(eps=1e8), z, OMEGA, QUAD)
        closed = mirror_green_imag(z, OMEGA)
        assert dielectric.gxx.real == pytest.approx(closed.gxx.real, rel=1e-3)
        assert dielectric.gzz.real == pytest.approx(closed.gzz.real, rel=1e-3)

    def test_dielectric_weaker_than_mirror(self):
        """A finite-eps surface responds less than a perfect conductor."""
        dielectric = scattering_green_imag(ConstantEps(eps=2.286), 50e-9, OMEGA, QUAD)
        closed = mirror_green_imag(50e-9, OMEGA)
        assert closed.trace().real < dielectric.trace().real < 0

    @pytest.mark.parametrize("surface", [ConstantEps(eps=2.286), DrudeLorentz(omega0=1e15, omega_p=2e16, gamma=1e14)])
    def test_components_decay_with_xi(self, surface: ConstantEps | DrudeLorentz):
        """At fixed z both components shrink in magnitude as xi grows."""
        tensors = [scattering_green_imag(surface, 50e-9, float(xi), QUAD) for xi in np.geomspace(1e13, 1e17, 12)]
        gxx = [abs(g.gxx.real) for g in tensors]
        gzz = [abs(g.gzz.real) for g in tensors]
        assert all(a > b for a, b in zip(gxx, gxx[1:], strict=False))
        assert all(a > b for a, b in zip(gzz, gzz[1:], strict=False))

    def test_xi_must_be_positive(self):
        """xi <= 0 is rejected."""
        with pytest.raises(DomainError):
            scattering_green_imag(ConstantEps(eps=2.0), 1e-8, 0.0, QUAD)
