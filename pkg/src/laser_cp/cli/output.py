"""Structured output for CLI and JSON modes."""

from mm_clikit import DualModeOutput
from rich.table import Table

from laser_cp.core.results import CheckResult, CurveResult, DeltaResult, ExtremaResult


class Output(DualModeOutput):
    """Handles all CLI output in JSON or human-readable format."""

    def print_curve_written(self, result: CurveResult) -> None:
        """Print curve file confirmation."""
        suffix = ", additive only" if result.additive_only else ""
        self.output(
            json_data=result.model_dump(),
            display_data=f"Curve written to {result.path}: {result.rows} rows, {result.mode}{suffix}.",
        )

    def print_delta_written(self, result: DeltaResult) -> None:
        """Print ΔU file confirmation."""
        self.output(json_data=result.model_dump(), display_data=f"ΔU curve written to {result.path}: {result.rows} rows.")

    def print_extrema(self, result: ExtremaResult) -> None:
        """Print located extrema as a table or JSON."""
        json_data = result.model_dump(mode="json")
        if not result.records and not result.failures:
            self.output(json_data=json_data, display_data=f"No extrema found. Header written to {result.path}.")
            return

        table = Table("Power (µW)", "Kind", "z (nm)", "U_tot (J)", title=f"Extrema written to {result.path}")
        for record in result.records:
            table.add_row(f"{record.power * 1e6:g}", str(record.kind), f"{record.z_position * 1e9:.2f}", f"{record.value:.4e}")
        for failure in result.failures:
            table.add_row(f"{failure.power * 1e6:g}", "failed", "", failure.message)
        self.output(json_data=json_data, display_data=table)

    def print_check_report(self, result: CheckResult) -> None:
        """Print PASS/FAIL per check with the largest residual."""
        json_data: dict[str, object] = {"passed": result.passed, "checks": [item.model_dump() for item in result.items]}
        table = Table("Check", "Verdict", "Max residual", "Tolerance", "Detail")
        for item in result.items:
            verdict = "[green]PASS[/green]" if item.passed else "[red]FAIL[/red]"
            table.add_row(item.name, verdict, f"{item.max_residual:.3e}", f"{item.tolerance:.1e}", item.detail)
        self.output(json_data=json_data, display_data=table)
