"""The 1/sigma^2 sweep: per-point solves, records, CSV emission.

Each grid point gets one record holding the three resolution-limit values,
the positive roots of the full quartic R(x) and of the reduced polynomial
R'(x), and the discriminant.  Per-point failures become status strings, never
aborted sweeps: the noisy end of a grid may legitimately be infeasible.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path

from .array_model import Scenario
from .config import ExperimentConfig, build_scenario, default_delta_max, inv_sigma2_grid
from .errors import ArlError
from .linearize import linear_coeffs
from .solver import (
    arl_closed_form,
    arl_low_noise,
    smith_numeric,
    solve_biquadratic,
    solve_quartic,
)

CSV_COLUMNS = (
    "inv_sigma2", "sigma2", "arl_closed", "arl_low_noise", "arl_numeric",
    "root_R_1", "root_R_2", "root_R_3", "root_R_4",
    "root_Rp_1", "root_Rp_2", "discriminant", "status",
)

CSV_HEADER = ",".join(CSV_COLUMNS)


@dataclass(frozen=True)
class SweepRecord:
    """One sweep point; absent values stay None and serialize to empty fields."""

    inv_sigma2: float
    sigma2: float
    arl_closed: float | None
    arl_low_noise: float | None
    arl_numeric: float | None
    roots_r: tuple[float, ...]
    roots_rp: tuple[float, ...]
    discriminant: float | None
    status: str


def _format(value: float | None) -> str:
    return "" if value is None else f"{value:.17e}"


def record_to_row(record: SweepRecord) -> str:
    roots_r = list(record.roots_r)[:4] + [None] * (4 - min(len(record.roots_r), 4))
    roots_rp = list(record.roots_rp)[:2] + [None] * (2 - min(len(record.roots_rp), 2))
    cells = [
        _format(record.inv_sigma2),
        _format(record.sigma2),
        _format(record.arl_closed),
        _format(record.arl_low_noise),
        _format(record.arl_numeric),
        *(_format(r) for r in roots_r),
        *(_format(r) for r in roots_rp),
        _format(record.discriminant),
        record.status,
    ]
    return ",".join(cells)


def sweep_point(scenario: Scenario, inv_sigma2: float, delta_max: float,
                tol: float) -> SweepRecord:
    """Solve one grid point; any domain error lands in the status field."""
    sigma2 = 1.0 / inv_sigma2
    point = scenario.with_sigma2(sigma2)
    status = "ok"
    arl_c = arl_l = arl_n = disc = None
    roots_r: tuple[float, ...] = ()
    roots_rp: tuple[float, ...] = ()
    try:
        coeffs = linear_coeffs(point)
        biquad = solve_biquadratic(coeffs)
        disc = biquad.discriminant
        roots_rp = biquad.positive_delta_roots()
        roots_r = solve_quartic(*coeffs.quartic()).positive_real_roots
        arl_c = arl_closed_form(coeffs)
        arl_l = arl_low_noise(coeffs)
        arl_n = smith_numeric(point, delta_max=delta_max, tol=tol)
    except ArlError as exc:
        status = exc.status
    return SweepRecord(
        inv_sigma2=inv_sigma2, sigma2=sigma2,
        arl_closed=arl_c, arl_low_noise=arl_l, arl_numeric=arl_n,
        roots_r=roots_r, roots_rp=roots_rp, discriminant=disc, status=status,
    )


def run_sweep(config: ExperimentConfig) -> list[SweepRecord]:
    """Run the full grid in ascending 1/sigma^2 order.

    The scenario (signals included) is built once from the config seed, so
    the output is a deterministic function of (config, seed) and independent
    of evaluation order.
    """
    scenario = build_scenario(config)
    delta_max = default_delta_max(config)
    tol = config.solver.tol
    return [sweep_point(scenario, float(inv), delta_max, tol)
            for inv in inv_sigma2_grid(config)]


def records_to_csv(records: list[SweepRecord]) -> str:
    """CSV text: fixed header, one row per record, LF endings, 17-digit floats."""
    if not records:
        raise ValueError("no sweep records to serialize")
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for record in records:
        buf.write(record_to_row(record) + "\n")
    return buf.getvalue()


def write_csv(records: list[SweepRecord], path: str | Path) -> None:
    """Write the sweep CSV (UTF-8, LF endings).  I/O errors propagate."""
    Path(path).write_bytes(records_to_csv(records).encode("utf-8"))
