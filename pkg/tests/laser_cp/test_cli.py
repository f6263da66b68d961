"""End-to-end tests for the command-line interface."""

from pathlib import Path

import pytest
from typer.testing import CliRunner

from laser_cp.cli.main import app
from laser_cp.physics.potentials import c3_perfect_conductor
from laser_cp.scenario import RB_ATOM, EvaluationBlock, OutputBlock, UnitScale, dump_scenario, preset

runner = CliRunner()


@pytest.fixture
def data_dir(tmp_path: Path) -> Path:
    """Isolated data directory for the log file."""
    return tmp_path / "data"


def _invoke(data_dir: Path, *args: str, workers: int | None = None) -> tuple[int, str]:
    base = ["--data-dir", str(data_dir)]
    if workers is not None:
        base += ["--workers", str(workers)]
    result = runner.invoke(app, [*base, *args])
    return result.exit_code, result.output


def _scenario_file(tmp_path: Path, name: str, text: str) -> Path:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


class TestCurve:
    """Tests for the curve command."""

    def test_fig3_preset(self, tmp_path: Path, data_dir: Path):
        """512 data rows under the fixed header."""
        out = tmp_path / "fig3.csv"
        code, _ = _invoke(data_dir, "curve", "--preset", "fig3", "--out", str(out))
        assert code == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "z_m,u_cp_J,u_l_J,u_lcp_J,u_tot_J"
        assert len(lines) == 513

    def test_deterministic_across_runs_and_workers(self, tmp_path: Path, data_dir: Path):
        """Same scenario gives byte-identical files for 1 and 8 workers."""
        first, second, third = tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "c.csv"
        assert _invoke(data_dir, "curve", "--preset", "fig3", "--out", str(first), workers=1)[0] == 0
        assert _invoke(data_dir, "curve", "--preset", "fig3", "--out", str(second), workers=1)[0] == 0
        assert _invoke(data_dir, "curve", "--preset", "fig3", "--out", str(third), workers=8)[0] == 0
        assert first.read_bytes() == second.read_bytes() == third.read_bytes()

    def test_zero_power_columns(self, tmp_path: Path, data_dir: Path):
        """Without light the u_l and u_lcp columns are all 0.0."""
        scenario = preset("fig3")
        scenario = scenario.model_copy(update={"laser": scenario.laser.with_power(0.0)})
        config = _scenario_file(tmp_path, "dark.toml", dump_scenario(scenario))
        out = tmp_path / "dark.csv"
        assert _invoke(data_dir, "curve", str(config), "--out", str(out))[0] == 0
        rows = [line.split(",") for line in out.read_text(encoding="utf-8").splitlines()[1:]]
        assert all(row[2] == "0.0" and row[3] == "0.0" for row in rows)

    def test_additive_only(self, tmp_path: Path, data_dir: Path):
        """--additive-only writes a zero u_lcp column."""
        out = tmp_path / "additive.csv"
        assert _invoke(data_dir, "curve", "--preset", "fig3", "--additive-only", "--out", str(out))[0] == 0
        rows = [line.split(",") for line in out.read_text(encoding="utf-8").splitlines()[1:]]
        assert {row[3] for row in rows} == {"0.0"}

    def test_hbar_delta_column(self, tmp_path: Path, data_dir: Path):
        """The hbar_delta unit scale adds a trailing column."""
        scenario = preset("fig3").model_copy(update={"output": OutputBlock(unit_scale=UnitScale.HBAR_DELTA)})
        config = _scenario_file(tmp_path, "scaled.toml", dump_scenario(scenario))
        out = tmp_path / "scaled.csv"
        assert _invoke(data_dir, "curve", str(config), "--out", str(out))[0] == 0
        assert out.read_text(encoding="utf-8").splitlines()[0].endswith(",u_tot_hbar_delta")

    def test_output_path_from_scenario(self, tmp_path: Path, data_dir: Path):
        """Without --out the [output] path is used."""
        out = tmp_path / "from-config.csv"
        scenario = preset("fig3").model_copy(update={"output": OutputBlock(path=str(out))})
        config = _scenario_file(tmp_path, "with-path.toml", dump_scenario(scenario))
        assert _invoke(data_dir, "curve", str(config))[0] == 0
        assert out.is_file()

    def test_malformed_config(self, tmp_path: Path, data_dir: Path):
        """A TOML syntax error exits nonzero."""
        config = _scenario_file(tmp_path, "broken.toml", "[atom\nomega10 = 1\n")
        assert _invoke(data_dir, "curve", str(config), "--out", str(tmp_path / "x.csv"))[0] != 0

    def test_unknown_key(self, tmp_path: Path, data_dir: Path):
        """An unknown key exits nonzero and writes nothing."""
        config = _scenario_file(tmp_path, "typo.toml", dump_scenario(preset("fig3")).replace("dipole", "dipol"))
        out = tmp_path / "x.csv"
        assert _invoke(data_dir, "curve", str(config), "--out", str(out))[0] != 0
        assert not out.exists()

    def test_source_required(self, tmp_path: Path, data_dir: Path):
        """Neither file nor preset is an error."""
        assert _invoke(data_dir, "curve", "--out", str(tmp_path / "x.csv"))[0] != 0

    def test_numeric_failure(self, tmp_path: Path, data_dir: Path):
        """A red-detuned evanescent barrier exits nonzero."""
        scenario = preset("fig3")
        red = scenario.model_copy(update={"laser": scenario.laser.model_copy(update={"detuning": -scenario.laser.detuning})})
        config = _scenario_file(tmp_path, "red.toml", dump_scenario(red))
        assert _invoke(data_dir, "curve", str(config), "--out", str(tmp_path / "x.csv"))[0] != 0

    def test_unwritable_output(self, tmp_path: Path, data_dir: Path):
        """An --out path below a regular file is reported as an error, not a traceback."""
        blocker = tmp_path / "blocker"
        blocker.write_text("", encoding="utf-8")
        result = runner.invoke(app, ["--data-dir", str(data_dir), "curve", "--preset", "fig3", "--out", str(blocker / "x.csv")])
        assert result.exit_code != 0
        assert not isinstance(result.exception, OSError)
        assert blocker.read_text(encoding="utf-8") == ""

    """Tests for the extrema command."""

    def test_zero_power_header_only(self, tmp_path: Path, data_dir: Path):
        """powers = [0] gives the header and no rows."""
        scenario = preset("fig3")
        scenario = scenario.model_copy(update={"sweep": scenario.sweep.model_copy(update={"powers": (0.0,)})})
        config = _scenario_file(tmp_path, "zero.toml", dump_scenario(scenario))
        out = tmp_path / "extrema.csv"
        assert _invoke(data_dir, "extrema", str(config), "--out", str(out))[0] == 0
        assert out.read_text(encoding="utf-8") == "power_W,kind,z_m,value_J\n"

    def test_fig4_has_minimum(self, tmp_path: Path, data_dir: Path):
        """The power scan over the negative-Q surface finds a well."""
        out = tmp_path / "fig4.csv"
        assert _invoke(data_dir, "extrema", "--preset", "fig4", "--out", str(out))[0] == 0
        rows = [line.split(",") for line in out.read_text(encoding="utf-8").splitlines()[1:]]
        assert any(row[1] == "minimum" for row in rows)
        keys = [(float(row[0]), float(row[2])) for row in rows]
        assert keys == sorted(keys)

    def test_deterministic_across_workers(self, tmp_path: Path, data_dir: Path):
        """Sweep output does not depend on the thread count."""
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert _invoke(data_dir, "extrema", "--preset", "fig4", "--out", str(first), workers=1)[0] == 0
        assert _invoke(data_dir, "extrema", "--preset", "fig4", "--out", str(second), workers=8)[0] == 0
        assert first.read_bytes() == second.read_bytes()

    def test_requires_powers(self, tmp_path: Path, data_dir: Path):
        """A scenario without powers exits nonzero."""
        assert _invoke(data_dir, "extrema", "--preset", "fig2", "--out", str(tmp_path / "x.csv"))[0] != 0

    def test_uniform_field_rejected(self, tmp_path: Path, data_dir: Path):
        """A power scan over a uniform laser exits nonzero."""
        scenario = preset("fig2")
        scenario = scenario.model_copy(update={"sweep": scenario.sweep.model_copy(update={"powers": (1e-6, 2e-6)})})
        config = _scenario_file(tmp_path, "uniform.toml", dump_scenario(scenario))
        out = tmp_path / "x.csv"
        assert _invoke(data_dir, "extrema", str(config), "--out", str(out))[0] != 0
        assert not out.exists()


class TestDelta:
    """Tests for the delta command."""

    def test_fig2(self, tmp_path: Path, data_dir: Path):
        """Mirror preset writes the two-column ΔU curve."""
        scenario = preset("fig2")
        scenario = scenario.model_copy(update={"sweep": scenario.sweep.model_copy(update={"z_points": 32})})
        config = _scenario_file(tmp_path, "fig2.toml", dump_scenario(scenario))
        out = tmp_path / "delta.csv"
        assert _invoke(data_dir, "delta", str(config), "--out", str(out))[0] == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "z_m,delta_u_J"
        assert len(lines) == 33

    def test_plasmon_rejected(self, tmp_path: Path, data_dir: Path):
        """Direct-plasmon presets cannot be compared."""
        assert _invoke(data_dir, "delta", "--preset", "fig3", "--out", str(tmp_path / "x.csv"))[0] != 0


class TestCheck:
    """Tests for the check command."""

    def test_preset_passes(self, data_dir: Path):
        """Preset parameters pass every check."""
        code, output = _invoke(data_dir, "check", "--preset", "fig3")
        assert code == 0
        assert "FAIL" not in output

    def test_corrupted_c3_fails(self, tmp_path: Path, data_dir: Path):
        """Doubling C3 fails the identity check and exits with status 1."""
        scenario = preset("fig3").model_copy(update={"evaluation": EvaluationBlock(c3=2 * c3_perfect_conductor(RB_ATOM))})
        config = _scenario_file(tmp_path, "corrupt.toml", dump_scenario(scenario))
        code, output = _invoke(data_dir, "check", str(config))
        assert code == 1
        assert "FAIL" in output
