"""Potential landscapes: curve sampling, ΔU comparison, extremum location and power sweeps."""

import logging
import math
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from enum import StrEnum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeFloat, PositiveFloat, model_validator

from laser_cp.physics.errors import CurvePointError, LaserCpError, ModelError
from laser_cp.physics.material import ConstantEps, PerfectMirror, SurfaceModel
from laser_cp.physics.potentials import (
    EvaluationMode,
    EvaluationOptions,
    PotentialComponents,
    nonretarded_c3,
    total_potential,
    u_cp,
    u_lcp,
)
from laser_cp.physics.quadrature import QuadratureConfig
from laser_cp.physics.types import (
    AtomSpecies,
    EvanescentField,
    ExtremumKind,
    ExtremumRecord,
    FloatArray,
    LaserSpec,
    PotentialCurve,
    UniformField,
)

logger = logging.getLogger(__name__)

# Extrema shallower than this are quadrature noise.
ENERGY_FLOOR = 1e-34
# Golden-section refinement stops once the bracket is narrower than this (m).
Z_TOLERANCE = 1e-10

_INV_PHI = (math.sqrt(5) - 1) / 2


class GridKind(StrEnum):
    """Spacing of the z-grid."""

    LINEAR = "linear"
    LOGARITHMIC = "logarithmic"


class SweepPlan(BaseModel):
    """Distance window, grid and laser powers to scan."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    z_min: PositiveFloat = 50e-9
    z_max: PositiveFloat = 2e-6
    z_points: int = Field(default=512, ge=16)
    grid: GridKind = GridKind.LOGARITHMIC
    powers: tuple[NonNegativeFloat, ...] = ()
    mode: EvaluationMode = EvaluationMode.NONRETARDED

    @model_validator(mode="after")
    def _check_window(self) -> SweepPlan:
        if self.z_min >= self.z_max:
            raise ValueError("z_min must be smaller than z_max")
        return self

    def z_grid(self) -> FloatArray:
        """Return the sample distances."""
        if self.grid is GridKind.LINEAR:
            return np.linspace(self.z_min, self.z_max, self.z_points)
        return np.geomspace(self.z_min, self.z_max, self.z_points)


class SweepFailure(BaseModel):
    """A power whose sweep could not be completed."""

    power: float
    message: str


class SweepResult(BaseModel):
    """Extremum records of a power sweep, sorted by (power, z), plus per-power failures."""

    records: list[ExtremumRecord]
    failures: list[SweepFailure]


def _map_ordered[T](func: Callable[[float], T], values: FloatArray | list[float], workers: int) -> list[T]:
    """Evaluate in parallel, returning results in input order."""
    if workers <= 1:
        return [func(float(v)) for v in values]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda v: func(float(v)), values))


def _plan_options(options: EvaluationOptions | None, plan: SweepPlan) -> EvaluationOptions:
    """Options for a sweep; the evaluation mode is owned by the plan."""
    if options is None:
        return EvaluationOptions(mode=plan.mode)
    if options.mode is not plan.mode:
        raise ValueError(f"evaluation mode '{options.mode}' conflicts with sweep mode '{plan.mode}'")
    return options


def _evaluator(
    atom: AtomSpecies, surface: SurfaceModel, laser: LaserSpec, quad: QuadratureConfig, options: EvaluationOptions
) -> Callable[[float], PotentialComponents]:
    """Point evaluator with the nonretarded C3 computed once."""
    c3 = nonretarded_c3(atom, surface, quad, options) if options.mode is EvaluationMode.NONRETARDED else None

    def evaluate(z: float) -> PotentialComponents:
        try:
            return total_potential(atom, surface, laser, z, quad, options, c3=c3)
        except LaserCpError as exc:
            raise CurvePointError("total_potential", z, exc) from exc

    return evaluate


def potential_curve(
    atom: AtomSpecies,
    surface: SurfaceModel,
    laser: LaserSpec,
    plan: SweepPlan,
    quad: QuadratureConfig,
    options: EvaluationOptions | None = None,
    *,
    workers: int = 1,
) -> PotentialCurve:
    """Sample every component on the plan's grid; output is independent of the worker count."""
    opts = _plan_options(options, plan)
    z_grid = plan.z_grid()
    points = _map_ordered(_evaluator(atom, surface, laser, quad, opts), z_grid, workers)
    return PotentialCurve.from_components(
        z_grid,
        np.array([p.u_cp for p in points]),
        np.array([p.u_l for p in points]),
        np.array([p.u_lcp for p in points]),
    )


def delta_u(
    atom: AtomSpecies, surface: SurfaceModel, laser: LaserSpec, plan: SweepPlan, quad: QuadratureConfig, *, workers: int = 1
) -> tuple[FloatArray, FloatArray]:
    """Full-mode difference U_CP - U_LCP for a uniform laser over a mirror or dielectric."""
    if not isinstance(surface, PerfectMirror | ConstantEps):
        raise ModelError(f"ΔU comparison needs a perfect mirror or constant-ε surface, got '{surface.kind}'")
    if not isinstance(laser.field, UniformField):
        raise ModelError("ΔU comparison needs a uniform laser field")

    def difference(z: float) -> float:
        try:
            return u_cp(atom, surface, z, quad) - u_lcp(atom, surface, laser, z, quad)
        except LaserCpError as exc:
            raise CurvePointError("delta_u", z, exc) from exc

    z_grid = plan.z_grid()
    return z_grid, np.array(_map_ordered(difference, z_grid, workers))


def golden_section_minimize(func: Callable[[float], float], lower: float, upper: float, tol: float = Z_TOLERANCE) -> float:
    """Locate a minimum of a unimodal function on [lower, upper] to within tol."""
    x1 = upper - _INV_PHI * (upper - lower)
    x2 = lower + _INV_PHI * (upper - lower)
    f1, f2 = func(x1), func(x2)
    while upper - lower > tol:
        if f1 < f2:
            upper, x2, f2 = x2, x1, f1
            x1 = upper - _INV_PHI * (upper - lower)
            f1 = func(x1)
        else:
            lower, x1, f1 = x1, x2, f2
            x2 = lower + _INV_PHI * (upper - lower)
            f2 = func(x2)
    return 0.5 * (lower + upper)


def find_extrema(
    curve: PotentialCurve, evaluator: Callable[[float], float] | None = None, *, power: float = 0.0
) -> list[ExtremumRecord]:
    """Locate interior minima and maxima of u_tot.

    Sign changes of the first difference bracket each extremum; plateaus count once, at their midpoint.
    With an evaluator the position is refined by golden-section search inside the bracket.
    """
    u = curve.u_tot
    z = curve.z_grid
    if len(u) < 3:
        return []
    signs = np.sign(np.diff(u))
    nonzero = [i for i, s in enumerate(signs) if s != 0]

    records: list[ExtremumRecord] = []
    for left, right in zip(nonzero, nonzero[1:], strict=False):
        if signs[left] == signs[right]:
            continue
        kind = ExtremumKind.MAXIMUM if signs[left] > 0 else ExtremumKind.MINIMUM
        # samples left+1 .. right share the extremal value (a single sample unless there is a plateau)
        first, last = left + 1, right
        if evaluator is None:
            z_pos = 0.5 * (z[first] + z[last])
            value = float(u[(first + last) // 2])
        else:
            sign = 1.0 if kind is ExtremumKind.MINIMUM else -1.0
            z_pos = golden_section_minimize(lambda zz: sign * evaluator(zz), float(z[left]), float(z[right + 1]))
            value = evaluator(z_pos)
        if abs(value) < ENERGY_FLOOR:
            continue
        records.append(ExtremumRecord(power=power, kind=kind, z_position=float(z_pos), value=float(value)))
    return sorted(records, key=lambda r: r.z_position)


def power_sweep(
    atom: AtomSpecies,
    surface: SurfaceModel,
    laser_template: LaserSpec,
    plan: SweepPlan,
    quad: QuadratureConfig,
    options: EvaluationOptions | None = None,
    *,
    workers: int = 1,
) -> SweepResult:
    """Extrema of the total potential for each power in the plan; a failing power is recorded and skipped."""
    if not plan.powers:
        raise ValueError("power sweep needs at least one power")
    if not isinstance(laser_template.field, EvanescentField):
        raise ModelError("power sweep needs an evanescent laser field")
    opts = _plan_options(options, plan)

    def sweep_one(power: float) -> list[ExtremumRecord] | SweepFailure:
        laser = laser_template.with_power(power)
        try:
            curve = potential_curve(atom, surface, laser, plan, quad, opts)
            evaluate = _evaluator(atom, surface, laser, quad, opts)
            return find_extrema(curve, lambda zz: evaluate(zz).u_tot, power=power)
        except LaserCpError as exc:
            logger.warning("Power sweep failed at P=%.6e W: %s", power, exc)
            return SweepFailure(power=power, message=str(exc))

    outcomes = _map_ordered(sweep_one, list(plan.powers), workers)
    records = [r for o in outcomes if isinstance(o, list) for r in o]
    failures = [o for o in outcomes if isinstance(o, SweepFailure)]
    records.sort(key=lambda r: (r.power, r.z_position))
    logger.info("Power sweep done: %d powers, %d extrema, %d failures", len(plan.powers), len(records), len(failures))
    return SweepResult(records=records, failures=failures)
