"""Box-counting and self-similarity dimension."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .cvtable import as_cells

SIERPINSKI_DIMENSION = math.log(3) / math.log(2)


@dataclass(frozen=True)
class BoxCountSeries:
    entries: tuple  # (box_side, occupied_boxes), box side strictly decreasing
    fitted_dimension: float
    fit_residual: float

    def counts(self) -> dict:
        return dict(self.entries)


def _is_pow2(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def occupied_boxes(cells: np.ndarray, side: int) -> int:
    """Aligned ``side x side`` boxes containing at least one true cell."""
    n = cells.shape[0] // side
    return int(cells.reshape(n, side, n, side).any(axis=(1, 3)).sum())


def fit_loglog(sides: Sequence[int], counts: Sequence[int]) -> tuple:
    """Least-squares slope of log(count) on log(1/side), and the RMS residual."""
    x = -np.log(np.asarray(sides, dtype=float))
    y = np.log(np.asarray(counts, dtype=float))
    A = np.column_stack([x, np.ones_like(x)])
    (slope, intercept), *_ = np.linalg.lstsq(A, y, rcond=None)
    resid = y - (slope * x + intercept)
    return float(slope), float(math.sqrt(np.mean(resid**2)))


def box_count(pattern, sides: Optional[Sequence[int]] = None) -> BoxCountSeries:
    """Box-counting series over power-of-two box sides.

    ``pattern`` must be square with a power-of-two side. ``sides`` defaults to
    every power of two from 1 up to half the pattern side.
    """
    cells = as_cells(pattern)
    h, w = cells.shape
    if h != w or not _is_pow2(h):
        raise ValueError(f"pattern must be square with a power-of-two side, got {h}x{w}")
    if not cells.any():
        raise ValueError("pattern has no true cells")
    if sides is None:
        sides = [1 << k for k in range(h.bit_length() - 1)]
    sides = sorted({int(s) for s in sides}, reverse=True)
    for s in sides:
        if not _is_pow2(s) or s > h:
            raise ValueError(f"box side {s} is not a power of two dividing {h}")
    if len(sides) < 2:
        raise ValueError("need at least two scales to fit a dimension")
    counts = [occupied_boxes(cells, s) for s in sides]
    slope, residual = fit_loglog(sides, counts)
    return BoxCountSeries(tuple(zip(sides, counts)), slope, residual)


def similarity_dimension(pieces: int, scale_factor: float) -> float:
    """``log N / log(1/S)`` for ``N`` copies scaled by ``S``."""
    if pieces < 1:
        raise ValueError("need at least one piece")
    if not 0 < scale_factor < 1:
        raise ValueError("scale factor must lie in (0, 1)")
    return math.log(pieces) / math.log(1 / scale_factor)


def series_csv(series: BoxCountSeries) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["side", "occupied"])
    writer.writerows(series.entries)
    writer.writerow(["slope", repr(series.fitted_dimension)])
    writer.writerow(["residual", repr(series.fit_residual)])
    return buf.getvalue()
