"""Write the potential landscape of a scenario as CSV."""

import typer

from laser_cp.cli.context import use_context
from laser_cp.cli.options import AdditiveOnlyOpt, ConfigArg, ModeOpt, OutOpt, PresetOpt


def curve(
    ctx: typer.Context,
    config: ConfigArg = None,
    *,
    preset: PresetOpt = None,
    out: OutOpt = None,
    mode: ModeOpt = None,
    additive_only: AdditiveOnlyOpt = False,
) -> None:
    """Write u_cp, u_l, u_lcp and u_tot on the sweep grid."""
    app = use_context(ctx)
    scenario = app.core.service.resolve_scenario(config, preset, mode=mode, additive_only=additive_only)
    result = app.core.service.curve(scenario, out)
    app.out.print_curve_written(result)
