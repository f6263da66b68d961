"""Scenario-selection arguments shared by the computing commands."""

from pathlib import Path
from typing import Annotated

import typer

from laser_cp.physics.potentials import EvaluationMode
from laser_cp.scenario import PresetName

ConfigArg = Annotated[Path | None, typer.Argument(help="Scenario TOML file.", dir_okay=False)]
PresetOpt = Annotated[PresetName | None, typer.Option("--preset", help="Built-in scenario instead of a file.")]
OutOpt = Annotated[Path | None, typer.Option("--out", "-o", help="CSV path. Default: [output] path, else ./<command>.csv.")]
ModeOpt = Annotated[EvaluationMode | None, typer.Option("--mode", help="Override the sweep mode.")]
AdditiveOnlyOpt = Annotated[bool, typer.Option("--additive-only", help="Suppress u_lcp (U_CP + U_L only).")]
