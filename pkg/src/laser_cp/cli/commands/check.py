"""Run the numerical oracle suite."""

import typer

from laser_cp.cli.context import use_context
from laser_cp.cli.options import ConfigArg, PresetOpt


def check(
    ctx: typer.Context,
    config: ConfigArg = None,
    *,
    preset: PresetOpt = None,
) -> None:
    """Check the product identity, the nonretarded limit, the mirror oracle and quadrature stability."""
    app = use_context(ctx)
    scenario = app.core.service.resolve_scenario(config, preset)
    result = app.core.service.check(scenario)
    app.out.print_check_report(result)
    if not result.passed:
        raise typer.Exit(1)
