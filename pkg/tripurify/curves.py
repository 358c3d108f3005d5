"""Concise-map curve export.

Writes two files:
  - <path>: CSV table ``f_in,f_out,p000,yield``, ascending f_in
  - <path>.meta.json: grid, fixed points, identity crossing, yield maximum

Nothing time-dependent is written, so reruns are byte-identical.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional

import numpy as np
from scipy.optimize import bisect

from tripurify.analysis import ROOT_TOL, ZERO_TOL, fixed_points_concise, fw_concise_map, map_gain
from tripurify.errors import InvariantError
from tripurify.models import ConciseMapPoint, SweepMeta

logger = logging.getLogger(__name__)

HEADER = "f_in,f_out,p000,yield"


def _fmt(x: float) -> str:
    return "%.12g" % x


def sweep_points(
    f_min: float, f_max: float, steps: int, workers: int = 1
) -> list[ConciseMapPoint]:
    """Evaluate the map on ``steps`` evenly spaced points, f_min and f_max included."""
    if not 0.0 <= f_min < f_max <= 1.0:
        raise InvariantError("0 <= f_min < f_max <= 1", f"got [{f_min!r}, {f_max!r}]")
    if steps < 2:
        raise InvariantError("steps >= 2", f"steps = {steps!r}")
    grid = [float(f) for f in np.linspace(f_min, f_max, steps)]
    if workers > 1:
        # map() keeps input order
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fw_concise_map, grid))
    return [fw_concise_map(f) for f in grid]


def identity_crossing(points: list[ConciseMapPoint], tol: float = ROOT_TOL) -> Optional[float]:
    """First place where f_out - f_in turns from negative to positive.

    That upward crossing is the purification threshold; the attracting
    fixed points are downward crossings and are skipped.
    """
    last_negative: Optional[ConciseMapPoint] = None
    zero_at: Optional[ConciseMapPoint] = None
    for p in points:
        gain = p.f_out - p.f_in
        if gain < -ZERO_TOL:
            last_negative, zero_at = p, None
        elif gain <= ZERO_TOL:
            if last_negative is not None and zero_at is None:
                zero_at = p
        elif last_negative is not None:
            if zero_at is not None:
                return zero_at.f_in
            return float(bisect(map_gain, last_negative.f_in, p.f_in, xtol=tol / 4))
    return None


def export_curves(
    f_min: float,
    f_max: float,
    steps: int,
    path: Path,
    workers: int = 1,
) -> SweepMeta:
    """Write the curve table and its sidecar.

    Raises:
        InvariantError: On an empty or out-of-range grid.
        OSError: If ``path`` cannot be written.
    """
    points = sweep_points(f_min, f_max, steps, workers)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(HEADER + "\n")
        for p in points:
            fh.write(",".join(_fmt(x) for x in (p.f_in, p.f_out, p.p000, p.yield_)) + "\n")

    best = max(points, key=lambda p: p.yield_)
    meta = SweepMeta(
        csv_path=path.name,
        f_min=f_min,
        f_max=f_max,
        steps=steps,
        header=HEADER,
        fixed_points=fixed_points_concise(),
        identity_crossing=identity_crossing(points),
        yield_argmax_f=best.f_in,
        yield_max=best.yield_,
    )
    meta_path = path.with_name(path.name + ".meta.json")
    with open(meta_path, "w", encoding="utf-8") as fh:
        json.dump(meta.model_dump(), fh, indent=2)
        fh.write("\n")

    logger.info("Wrote %d rows to %s", len(points), path)
    return meta
