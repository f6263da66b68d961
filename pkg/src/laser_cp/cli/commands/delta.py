"""Write the retarded ΔU = U_CP - U_LCP curve."""

import typer

from laser_cp.cli.context import use_context
from laser_cp.cli.options import ConfigArg, OutOpt, PresetOpt


def delta(
    ctx: typer.Context,
    config: ConfigArg = None,
    *,
    preset: PresetOpt = None,
    out: OutOpt = None,
) -> None:
    """Write U_CP - U_LCP for a uniform laser over a mirror or dielectric."""
    app = use_context(ctx)
    scenario = app.core.service.resolve_scenario(config, preset)
    result = app.core.service.delta(scenario, out)
    app.out.print_delta_written(result)
