"""Core business logic."""

import logging
from collections.abc import Callable
from pathlib import Path

from mm_clikit import CliError

from laser_cp.config import Config
from laser_cp.core.checks import run_checks
from laser_cp.core.results import CheckResult, CurveResult, DeltaResult, ExtremaResult, SweepFailureItem
from laser_cp.csv_io import write_curve, write_delta, write_extrema
from laser_cp.physics.analysis import delta_u, potential_curve, power_sweep
from laser_cp.physics.constants import HBAR
from laser_cp.physics.errors import LaserCpError
from laser_cp.physics.potentials import EvaluationMode
from laser_cp.scenario import ScenarioConfig, ScenarioDecodeError, ScenarioError, UnitScale, load_scenario, preset

logger = logging.getLogger(__name__)


class Service:
    """Main application service."""

    def __init__(self, cfg: Config) -> None:
        """Initialize with configuration."""
        self._cfg = cfg

    def resolve_scenario(
        self,
        config_path: Path | None,
        preset_name: str | None,
        *,
        mode: EvaluationMode | None = None,
        additive_only: bool = False,
    ) -> ScenarioConfig:
        """Load a scenario from a file or a preset and apply command-line overrides.

        Raises:
            CliError: Neither or both sources given, unreadable/undecodable file, or invalid scenario.

        """
        if (config_path is None) == (preset_name is None):
            raise CliError("Give either a scenario file or --preset, not both or neither.", "CONFIG_INVALID")
        try:
            scenario = load_scenario(config_path) if config_path is not None else preset(str(preset_name))
        except ScenarioDecodeError as exc:
            raise CliError(str(exc), "CONFIG_PARSE_ERROR") from exc
        except ScenarioError as exc:
            raise CliError(str(exc), "CONFIG_INVALID") from exc

        if mode is not None:
            scenario = scenario.model_copy(update={"sweep": scenario.sweep.model_copy(update={"mode": mode})})
        if additive_only:
            scenario = scenario.model_copy(
                update={"evaluation": scenario.evaluation.model_copy(update={"additive_only": True})}
            )
        logger.debug("Scenario resolved source=%s mode=%s", config_path or preset_name, scenario.sweep.mode)
        return scenario

    def curve(self, scenario: ScenarioConfig, out: Path | None = None) -> CurveResult:
        """Sample the potential landscape and write it as CSV.

        Raises:
            CliError: On a numerical failure at any grid point, or a zero detuning with ħ|Δ| scaling.

        """
        path = self._output_path(scenario, out, "curve.csv")
        energy_scale = self._energy_scale(scenario)
        try:
            curve = potential_curve(
                scenario.atom,
                scenario.surface,
                scenario.laser,
                scenario.sweep,
                scenario.quadrature,
                scenario.options(),
                workers=self._cfg.workers,
            )
        except LaserCpError as exc:
            raise CliError(str(exc), "NUMERIC_FAILURE") from exc
        rows = self._write(path, lambda p: write_curve(p, curve, energy_scale))
        logger.info("Curve written path=%s rows=%d mode=%s", path, rows, scenario.sweep.mode)
        return CurveResult(
            path=str(path),
            rows=rows,
            mode=str(scenario.sweep.mode),
            additive_only=scenario.evaluation.additive_only,
            z_min=scenario.sweep.z_min,
            z_max=scenario.sweep.z_max,
        )

    def extrema(self, scenario: ScenarioConfig, out: Path | None = None) -> ExtremaResult:
        """Sweep the laser powers of the scenario and write extremum rows as CSV.

        Raises:
            CliError: If the sweep block lists no powers, or a numerical failure outside the per-power sweep.

        """
        if not scenario.sweep.powers:
            raise CliError("The sweep block lists no powers.", "CONFIG_INVALID")
        path = self._output_path(scenario, out, "extrema.csv")
        try:
            result = power_sweep(
                scenario.atom,
                scenario.surface,
                scenario.laser,
                scenario.sweep,
                scenario.quadrature,
                scenario.options(),
                workers=self._cfg.workers,
            )
        except LaserCpError as exc:
            raise CliError(str(exc), "NUMERIC_FAILURE") from exc
        self._write(path, lambda p: write_extrema(p, result.records))
        logger.info("Extrema written path=%s records=%d failures=%d", path, len(result.records), len(result.failures))
        return ExtremaResult(
            path=str(path),
            records=result.records,
            failures=[SweepFailureItem(power=f.power, message=f.message) for f in result.failures],
        )

    def delta(self, scenario: ScenarioConfig, out: Path | None = None) -> DeltaResult:
        """Write ΔU = U_CP - U_LCP (full formulas) for a uniform laser over a mirror or dielectric.

        Raises:
            CliError: Unsupported surface/field combination or a numerical failure.

        """
        path = self._output_path(scenario, out, "delta.csv")
        try:
            z_grid, delta = delta_u(
                scenario.atom,
                scenario.surface,
                scenario.laser,
                scenario.sweep,
                scenario.quadrature,
                workers=self._cfg.workers,
            )
        except LaserCpError as exc:
            raise CliError(str(exc), "NUMERIC_FAILURE") from exc
        rows = self._write(path, lambda p: write_delta(p, z_grid, delta))
        logger.info("Delta curve written path=%s rows=%d", path, rows)
        return DeltaResult(path=str(path), rows=rows)

    def check(self, scenario: ScenarioConfig) -> CheckResult:
        """Run the oracle suite; failing checks are reported, not raised."""
        result = CheckResult(items=run_checks(scenario))
        logger.info("Checks finished passed=%s", result.passed)
        return result

    @staticmethod
    def _write[T](path: Path, writer: Callable[[Path], T]) -> T:
        try:
            return writer(path)
        except OSError as exc:
            raise CliError(f"Cannot write {path}: {exc.strerror or exc}", "OUTPUT_WRITE_ERROR") from exc

    @staticmethod
    def _output_path(scenario: ScenarioConfig, out: Path | None, default_name: str) -> Path:
        if out is not None:
            return out
        if scenario.output.path is not None:
            return Path(scenario.output.path).expanduser()
        return Path(default_name)

    @staticmethod
    def _energy_scale(scenario: ScenarioConfig) -> float | None:
        if scenario.output.unit_scale is not UnitScale.HBAR_DELTA:
            return None
        if scenario.laser.detuning == 0.0:
            raise CliError("hbar_delta scaling needs a nonzero detuning.", "CONFIG_INVALID")
        return HBAR * abs(scenario.laser.detuning)
