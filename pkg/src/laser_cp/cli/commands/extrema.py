"""Locate barriers and wells for each laser power of a scenario."""

import typer

from laser_cp.cli.context import use_context
from laser_cp.cli.options import AdditiveOnlyOpt, ConfigArg, ModeOpt, OutOpt, PresetOpt


def extrema(
    ctx: typer.Context,
    config: ConfigArg = None,
    *,
    preset: PresetOpt = None,
    out: OutOpt = None,
    mode: ModeOpt = None,
    additive_only: AdditiveOnlyOpt = False,
) -> None:
    """Write minima and maxima of u_tot per power, sorted by (power, z)."""
    app = use_context(ctx)
    scenario = app.core.service.resolve_scenario(config, preset, mode=mode, additive_only=additive_only)
    result = app.core.service.extrema(scenario, out)
    app.out.print_extrema(result)
