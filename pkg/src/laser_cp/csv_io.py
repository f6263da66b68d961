"""CSV emission with reproducible float formatting."""

import csv
from collections.abc import Iterable, Sequence
from pathlib import Path

from laser_cp.physics.types import ExtremumRecord, FloatArray, PotentialCurve

CURVE_HEADER = ("z_m", "u_cp_J", "u_l_J", "u_lcp_J", "u_tot_J")
EXTREMA_HEADER = ("power_W", "kind", "z_m", "value_J")
DELTA_HEADER = ("z_m", "delta_u_J")
SCALED_COLUMN = "u_tot_hbar_delta"


def format_float(value: float) -> str:
    """Format with 17 significant digits; zeros (including -0.0) as '0.0'."""
    if value == 0.0:
        return "0.0"
    return f"{value:.17g}"


def _write(path: Path, header: Sequence[str], rows: Iterable[Sequence[str]]) -> int:
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)
            count += 1
    return count


def write_curve(path: Path, curve: PotentialCurve, energy_scale: float | None = None) -> int:
    """Write one row per grid point; with ``energy_scale`` a trailing column holds u_tot/energy_scale."""
    header = (*CURVE_HEADER, SCALED_COLUMN) if energy_scale else CURVE_HEADER

    def rows() -> Iterable[list[str]]:
        for i in range(len(curve.z_grid)):
            row = [format_float(float(col[i])) for col in (curve.z_grid, curve.u_cp, curve.u_l, curve.u_lcp, curve.u_tot)]
            if energy_scale:
                row.append(format_float(float(curve.u_tot[i]) / energy_scale))
            yield row

    return _write(path, header, rows())


def write_extrema(path: Path, records: Sequence[ExtremumRecord]) -> int:
    """Write extremum rows in the given order."""
    rows = ([format_float(r.power), str(r.kind), format_float(r.z_position), format_float(r.value)] for r in records)
    return _write(path, EXTREMA_HEADER, rows)


def write_delta(path: Path, z_grid: FloatArray, delta: FloatArray) -> int:
    """Write the ΔU curve."""
    rows = ([format_float(float(z)), format_float(float(d))] for z, d in zip(z_grid, delta, strict=True))
    return _write(path, DELTA_HEADER, rows)
