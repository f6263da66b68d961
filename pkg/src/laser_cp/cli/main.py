"""CLI app definition and initialization."""

import logging
import sys
from pathlib import Path
from types import TracebackType
from typing import Annotated

import typer
from mm_clikit import CoreContext, TyperPlus, setup_logging

from laser_cp.cli.commands.check import check
from laser_cp.cli.commands.curve import curve
from laser_cp.cli.commands.delta import delta
from laser_cp.cli.commands.extrema import extrema
from laser_cp.cli.output import Output
from laser_cp.config import Config
from laser_cp.core.core import Core


def _install_excepthook(logger: logging.Logger) -> None:
    """Route uncaught exceptions through the logging framework."""
    previous = sys.excepthook

    def _hook(exc_type: type[BaseException], exc: BaseException, tb: TracebackType | None) -> None:
        if issubclass(exc_type, KeyboardInterrupt):
            previous(exc_type, exc, tb)
            return
        logger.critical("Unhandled exception", exc_info=(exc_type, exc, tb))
        previous(exc_type, exc, tb)

    sys.excepthook = _hook


app = TyperPlus(package_name="laser-cp")


@app.callback()
def main(
    ctx: typer.Context,
    *,
    data_dir: Annotated[Path | None, typer.Option("--data-dir", help="Directory for the log and config.toml.")] = None,
    workers: Annotated[int | None, typer.Option("--workers", "-w", min=1, help="Evaluation threads.")] = None,
) -> None:
    """Laser-induced Casimir-Polder potentials near a planar surface."""
    config = Config.build(data_dir, workers)
    setup_logging("laser_cp", file_path=config.log_path)
    _install_excepthook(logging.getLogger("laser_cp"))
    ctx.obj = CoreContext[Core, Output](core=Core(config), out=Output())


app.command()(curve)
app.command()(extrema)
app.command()(delta)
app.command()(check)
