"""Scenario files: TOML parsing, serialization and the built-in presets."""

import math
import tomllib
from enum import StrEnum
from pathlib import Path

import tomli_w
from pydantic import BaseModel, ConfigDict, PositiveFloat, ValidationError

from laser_cp.physics.analysis import GridKind, SweepPlan
from laser_cp.physics.material import PerfectMirror, PlasmonDirect, SurfaceModel
from laser_cp.physics.potentials import EvaluationMode, EvaluationOptions, PolarizabilityModel
from laser_cp.physics.quadrature import QuadratureConfig
from laser_cp.physics.types import AtomSpecies, EvanescentField, LaserSpec, UniformField


class ScenarioError(Exception):
    """Scenario is invalid: unknown keys, bad values or an unknown preset."""


class ScenarioDecodeError(ScenarioError):
    """Scenario file could not be read or is not valid TOML."""


class UnitScale(StrEnum):
    """Energy unit of the optional scaled CSV column."""

    JOULE = "J"
    HBAR_DELTA = "hbar_delta"


class OutputBlock(BaseModel):
    """Where and how results are written."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    path: str | None = None
    unit_scale: UnitScale = UnitScale.JOULE


class EvaluationBlock(BaseModel):
    """Formula choices that are not part of the sweep plan."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    additive_only: bool = False
    c3: PositiveFloat | None = None
    polarizability_model: PolarizabilityModel = PolarizabilityModel.TWO_LEVEL


class ScenarioConfig(BaseModel):
    """A complete, self-describing computation."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    atom: AtomSpecies
    surface: SurfaceModel
    laser: LaserSpec
    sweep: SweepPlan = SweepPlan()
    output: OutputBlock = OutputBlock()
    evaluation: EvaluationBlock = EvaluationBlock()
    quadrature: QuadratureConfig = QuadratureConfig()

    def options(self) -> EvaluationOptions:
        """Evaluation options for the potentials layer."""
        return EvaluationOptions(
            mode=self.sweep.mode,
            additive_only=self.evaluation.additive_only,
            c3=self.evaluation.c3,
            polarizability_model=self.evaluation.polarizability_model,
        )


def parse_scenario(text: str) -> ScenarioConfig:
    """Parse TOML text into a validated scenario.

    Raises:
        ScenarioDecodeError: Invalid TOML; the message carries line and column.
        ScenarioError: Invalid values or unknown keys.

    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ScenarioDecodeError(f"invalid TOML: {exc}") from exc
    try:
        return ScenarioConfig.model_validate(data)
    except ValidationError as exc:
        raise ScenarioError(f"invalid scenario: {exc}") from exc


def load_scenario(path: Path) -> ScenarioConfig:
    """Read and parse a scenario file."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioDecodeError(f"cannot read scenario file {path}: {exc}") from exc
    return parse_scenario(text)


def dump_scenario(config: ScenarioConfig) -> str:
    """Serialize to TOML; parse_scenario(dump_scenario(c)) == c."""
    return tomli_w.dumps(config.model_dump(mode="json", exclude_none=True))


# --- presets ---

RB_ATOM = AtomSpecies(omega10=2.37e15, dipole=2.53e-29)
RB_DETUNING = 2 * math.pi * 1e8
PLASMON_Q = 60.0
GLASS_INDEX = 1.512


def _evanescent(power: float) -> EvanescentField:
    return EvanescentField(c0=4.51e-23, power=power, z0=430e-9, waist_x=170e-6, waist_y=227e-6)


def _fig2() -> ScenarioConfig:
    """Uniform 5 W/cm² over a perfect mirror, full retarded formulas."""
    return ScenarioConfig(
        atom=RB_ATOM,
        surface=PerfectMirror(),
        laser=LaserSpec(detuning=RB_DETUNING, field=UniformField(intensity=5e4), theta=math.pi / 2),
        sweep=SweepPlan(mode=EvaluationMode.FULL),
    )


def _fig3() -> ScenarioConfig:
    """Evanescent barrier at 39 µW with Re r_p = +Q, nonretarded formulas."""
    return ScenarioConfig(
        atom=RB_ATOM,
        surface=PlasmonDirect(q=PLASMON_Q, sign=1),
        laser=LaserSpec(detuning=RB_DETUNING, field=_evanescent(39e-6), theta=math.pi / 2),
        sweep=SweepPlan(powers=(39e-6,), mode=EvaluationMode.NONRETARDED),
    )


def _fig4() -> ScenarioConfig:
    """Power scan with Re r_p = -Q; window opens at 10 nm so the near-surface well is on the grid."""
    return ScenarioConfig(
        atom=RB_ATOM,
        surface=PlasmonDirect(q=PLASMON_Q, sign=-1),
        laser=LaserSpec(detuning=RB_DETUNING, field=_evanescent(39e-6), theta=math.pi / 2),
        sweep=SweepPlan(
            z_min=10e-9,
            z_max=2e-6,
            grid=GridKind.LOGARITHMIC,
            powers=(10e-6, 20e-6, 27e-6, 39e-6, 100e-6),
            mode=EvaluationMode.NONRETARDED,
        ),
    )


class PresetName(StrEnum):
    """Built-in scenarios."""

    FIG2 = "fig2"
    FIG3 = "fig3"
    FIG4 = "fig4"


PRESETS = {PresetName.FIG2: _fig2, PresetName.FIG3: _fig3, PresetName.FIG4: _fig4}


def preset(name: str) -> ScenarioConfig:
    """Return a built-in scenario by name."""
    try:
        return PRESETS[PresetName(name)]()
    except ValueError:
        raise ScenarioError(f"unknown preset '{name}', choose from {', '.join(PRESETS)}") from None
