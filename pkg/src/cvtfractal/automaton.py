"""One-way, two-neighbourhood binary cellular automata.

Each cell's next state depends on its left neighbour and itself. The 16
rules are numbered Wolfram-style: the output for inputs ``(left, self)`` is
bit ``2*left + self`` of the rule number. Rule 6 is ``left XOR self``; from a
single seed cell it draws Pascal's triangle mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cvtable import PatternGrid


@dataclass(frozen=True)
class CaRule2:
    rule_number: int

    def __post_init__(self):
        if not 0 <= self.rule_number <= 15:
            raise ValueError(f"two-neighbourhood rules are numbered 0..15, got {self.rule_number}")

    def __call__(self, left: int, self_: int) -> int:
        return (self.rule_number >> (2 * left + self_)) & 1

    @property
    def table(self) -> dict:
        """Output per input pair, listed (1,1), (1,0), (0,1), (0,0)."""
        return {(l, s): self(l, s) for l, s in ((1, 1), (1, 0), (0, 1), (0, 0))}


RULE_6 = CaRule2(6)


@dataclass(frozen=True)
class SpaceTime:
    rows: np.ndarray  # (steps + 1, width), uint8
    rule: CaRule2

    @property
    def steps(self) -> int:
        return self.rows.shape[0] - 1

    def pattern(self) -> PatternGrid:
        return PatternGrid(self.rows.astype(bool), f"rule {self.rule.rule_number}")


def _as_config(config) -> np.ndarray:
    arr = np.asarray(config, dtype=np.uint8)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("configuration must be a non-empty 1-D vector")
    if arr.max() > 1:
        raise ValueError("configuration must be binary")
    return arr


def step(config, rule: CaRule2) -> np.ndarray:
    """One synchronous update with a null (zero) left boundary."""
    cur = _as_config(config)
    left = np.zeros_like(cur)
    left[1:] = cur[:-1]
    return ((rule.rule_number >> (2 * left + cur)) & 1).astype(np.uint8)


def single_seed(width: int, position: int = 0) -> np.ndarray:
    if not 0 <= position < width:
        raise ValueError("seed position outside the array")
    seed = np.zeros(width, dtype=np.uint8)
    seed[position] = 1
    return seed


def evolve(seed, rule: CaRule2, steps: int) -> SpaceTime:
    if steps < 0:
        raise ValueError("steps must be >= 0")
    cur = _as_config(seed)
    rows = np.empty((steps + 1, cur.size), dtype=np.uint8)
    rows[0] = cur
    for t in range(steps):
        cur = step(cur, rule)
        rows[t + 1] = cur
    return SpaceTime(rows, rule)


def evolve_single(rule: CaRule2, steps: int, width: int = None) -> SpaceTime:
    """Single 1 in the leftmost cell; width defaults to ``steps + 1``."""
    return evolve(single_seed(steps + 1 if width is None else width), rule, steps)


def binomial_parity_oracle(t: int, i: int) -> bool:
    """True iff C(t, i) is odd (Lucas: ``i & (t - i) == 0``)."""
    if i < 0 or i > t:
        return False
    return i & (t - i) == 0


def antidiagonal_grid(spacetime: SpaceTime, size: int) -> PatternGrid:
    """Read the space-time diagram along anti-diagonals: cell (i, j) is row
    ``i + j``, column ``i``. For rule 6 from a single left seed this is the
    CV-table zero pattern, since C(i + j, i) is odd iff ``i & j == 0``.
    """
    rows = spacetime.rows
    if rows.shape[0] < 2 * size - 1 or rows.shape[1] < size:
        raise ValueError(f"need at least {2 * size - 1} rows and {size} columns")
    i, j = np.indices((size, size))
    return PatternGrid(rows[i + j, i].astype(bool), "antidiagonal")
