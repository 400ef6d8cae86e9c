"""CV-tables over integer sequences and the boolean patterns read off them."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

DEFAULT_MAX_SIDE = 4096

ZERO = "zero"
MIN_VALUE = "min"
EQUALS = "equals"
PREDICATES = (ZERO, MIN_VALUE, EQUALS)


@dataclass(frozen=True)
class SourceSequence:
    elements: tuple
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(e) for e in self.elements))
        if not self.elements:
            raise ValueError("source sequence must be non-empty")
        if min(self.elements) < 0:
            raise ValueError("source elements must be non-negative")

    def __len__(self):
        return len(self.elements)

    def fits(self, width: int) -> bool:
        return max(self.elements) < (1 << width)


def value_range(lo: int, hi: int) -> SourceSequence:
    """Inclusive range ``lo..hi``."""
    if hi < lo:
        raise ValueError(f"empty range {lo}..{hi}")
    return SourceSequence(range(lo, hi + 1), f"naturals {lo}..{hi}")


def naturals(n: int) -> SourceSequence:
    """``0 .. 2**n - 1``."""
    return value_range(0, (1 << n) - 1)


def odds(count: int) -> SourceSequence:
    if count < 1:
        raise ValueError("need at least one odd number")
    return SourceSequence(range(1, 2 * count, 2), f"first {count} odds")


@dataclass(frozen=True)
class CvTable:
    source: SourceSequence
    entries: np.ndarray
    width: int


@dataclass(frozen=True)
class PatternGrid:
    cells: np.ndarray
    predicate_label: str = ""

    def __post_init__(self):
        cells = np.asarray(self.cells, dtype=bool)
        if cells.ndim != 2:
            raise ValueError("pattern grid must be two-dimensional")
        object.__setattr__(self, "cells", cells)

    @property
    def rows(self) -> int:
        return self.cells.shape[0]

    @property
    def cols(self) -> int:
        return self.cells.shape[1]

    def count(self) -> int:
        return int(self.cells.sum())

    def __eq__(self, other):
        if not isinstance(other, PatternGrid):
            return NotImplemented
        return np.array_equal(self.cells, other.cells)


def build_table(
    source: SourceSequence,
    width: int,
    *,
    threads: int = 1,
    max_side: int = DEFAULT_MAX_SIDE,
) -> CvTable:
    """Dense table of ``cvt(s_i, s_j) = 2 (s_i & s_j)``.

    Rows are computed in independent chunks when ``threads > 1``; the result
    does not depend on the worker count.
    """
    if width < 1 or width > 62:
        raise ValueError("width must be in 1..62")
    if not source.fits(width):
        raise ValueError(f"element {max(source.elements)} overflows {width} bits")
    n = len(source)
    if n > max_side:
        raise ValueError(f"table side {n} exceeds the limit {max_side}")
    s = np.array(source.elements, dtype=np.int64)
    entries = np.empty((n, n), dtype=np.int64)

    def fill(lo, hi):
        entries[lo:hi] = (s[lo:hi, None] & s[None, :]) << 1

    threads = max(1, int(threads))
    if threads == 1 or n < 2:
        fill(0, n)
    else:
        bounds = np.linspace(0, n, min(threads, n) + 1, dtype=int)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(fill, bounds[:-1], bounds[1:]))
    return CvTable(source, entries, width)


def extract_pattern(table: CvTable, predicate: str = ZERO, value: Optional[int] = None) -> PatternGrid:
    """Mark table cells that satisfy ``predicate``.

    ``"zero"`` marks zero entries, ``"min"`` the cells attaining the global
    minimum, ``"equals"`` the cells equal to ``value``.
    """
    e = table.entries
    if e.size == 0:
        raise ValueError("empty table")
    if predicate == ZERO:
        return PatternGrid(e == 0, ZERO)
    if predicate == MIN_VALUE:
        return PatternGrid(e == e.min(), MIN_VALUE)
    if predicate == EQUALS:
        if value is None:
            raise ValueError("equals predicate needs a value")
        return PatternGrid(e == value, f"{EQUALS}({value})")
    raise ValueError(f"unknown predicate {predicate!r}; expected one of {PREDICATES}")


def scale_sequence(source: SourceSequence, k: int, width: Optional[int] = None) -> SourceSequence:
    """Multiply every element by ``2**k``; reject if a result overflows ``width``."""
    if k < 0:
        raise ValueError("scale exponent must be non-negative")
    scaled = SourceSequence((e << k for e in source.elements), f"{source.label} x 2^{k}")
    if width is not None and not scaled.fits(width):
        raise ValueError(f"scaled element {max(scaled.elements)} overflows {width} bits")
    return scaled


def zero_pattern(n: int) -> PatternGrid:
    """ZERO pattern of the CV-table over ``0 .. 2**n - 1``."""
    return extract_pattern(build_table(naturals(n), max(n, 1)), ZERO)


def write_csv(table: CvTable, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerows(table.entries.tolist())


def table_csv(table: CvTable) -> str:
    buf = io.StringIO()
    write_csv(table, buf)
    return buf.getvalue()


def parse_sequence(text: str) -> SourceSequence:
    """Comma- or space-separated non-negative integers."""
    parts = [p for p in text.replace(",", " ").split() if p]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"not an integer sequence: {text!r}") from None
    return SourceSequence(values, "literal")


def parse_range(text: str) -> SourceSequence:
    """``"lo..hi"`` inclusive."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"range must look like lo..hi, got {text!r}")
    try:
        return value_range(int(lo), int(hi))
    except ValueError as exc:
        raise ValueError(f"bad range {text!r}: {exc}") from None


def as_cells(pattern) -> np.ndarray:
    """Boolean array view of a ``PatternGrid``, ``Bitmap`` or array-like."""
    cells = getattr(pattern, "cells", None)
    if cells is None:
        cells = getattr(pattern, "pixels", pattern)
    return np.asarray(cells, dtype=bool)


def iter_true(pattern: PatternGrid) -> Iterable[tuple]:
    for i, j in np.argwhere(pattern.cells):
        yield int(i), int(j)
