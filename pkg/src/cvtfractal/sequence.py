"""Decimal digit sequences of rationals and square roots, and their periods."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .cvtable import SourceSequence, PatternGrid, build_table, extract_pattern, ZERO

DIGIT_WIDTH = 4


@dataclass(frozen=True)
class DigitSequence:
    digits: tuple
    provenance: str = "literal"

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        if any(not 0 <= d <= 9 for d in self.digits):
            raise ValueError("digits must lie in 0..9")

    def __len__(self):
        return len(self.digits)

    def text(self) -> str:
        return "".join(map(str, self.digits))


@dataclass(frozen=True)
class PeriodReport:
    periodic: bool
    preperiod: Optional[int]
    period: Optional[int]
    search_bound: int

    def summary(self) -> str:
        if not self.periodic:
            return f"no period <= bound found in {self.search_bound} digits"
        return f"periodic: preperiod {self.preperiod}, period {self.period} ({self.search_bound} digits)"


def long_division(p: int, q: int) -> Iterator[int]:
    """Fractional digits of ``p/q`` for ``0 <= p < q``, forever."""
    r = p
    while True:
        r *= 10
        yield r // q
        r %= q


def rational_digits(p: int, q: int, count: int) -> DigitSequence:
    if q == 0:
        raise ValueError("denominator must be non-zero")
    if q < 0 or not 0 <= p < q:
        raise ValueError("need 0 <= p < q")
    if count < 1:
        raise ValueError("count must be >= 1")
    gen = long_division(p, q)
    return DigitSequence([next(gen) for _ in range(count)], f"rational {p}/{q}")


def sqrt_digit_pairs(n: int) -> Iterator[int]:
    """Decimal digits of sqrt(n) by schoolbook digit-pair extraction.

    Yields the integer part's digits first, then fractional digits forever.
    """
    pairs = []
    while n:
        n, pair = divmod(n, 100)
        pairs.append(pair)
    pairs.reverse()
    root = 0
    rem = 0
    k = 0
    while True:
        rem = rem * 100 + (pairs[k] if k < len(pairs) else 0)
        k += 1
        # largest d with (20*root + d) * d <= rem
        d = 9
        while (20 * root + d) * d > rem:
            d -= 1
        rem -= (20 * root + d) * d
        root = root * 10 + d
        yield d


def sqrt_digits(n: int, count: int) -> DigitSequence:
    """Integer-part digits of sqrt(n) followed by ``count`` fractional digits."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if count < 1:
        raise ValueError("count must be >= 1")
    if _is_square(n):
        raise ValueError(f"{n} is a perfect square")
    gen = sqrt_digit_pairs(n)
    int_digits = (len(str(n)) + 1) // 2
    digits = [next(gen) for _ in range(int_digits + count)]
    return DigitSequence(digits, f"sqrt {n}")


def _is_square(n: int) -> bool:
    gen = sqrt_digit_pairs(n)
    root = 0
    for _ in range((len(str(n)) + 1) // 2):
        root = root * 10 + next(gen)
    return root * root == n


def detect_period(s: DigitSequence, max_period: int) -> PeriodReport:
    """Lexicographically smallest ``(preperiod, period)`` with ``period <= max_period``.

    The repeating tail must be at least ``2 * max_period`` digits long, so a
    late start cannot make a short tail trivially periodic.
    """
    if max_period < 1:
        raise ValueError("max_period must be >= 1")
    d = np.asarray(s.digits, dtype=np.int8)
    n = d.size
    if n < 2 * max_period:
        raise ValueError(f"need at least {2 * max_period} digits, got {n}")
    latest_start = n - 2 * max_period
    best = None
    for p in range(1, max_period + 1):
        mismatch = np.flatnonzero(d[:-p] != d[p:])
        start = int(mismatch[-1]) + 1 if mismatch.size else 0
        if start <= latest_start and (best is None or (start, p) < best):
            best = (start, p)
    if best is None:
        return PeriodReport(False, None, None, n)
    return PeriodReport(True, best[0], best[1], n)


def sequence_table_pattern(s: DigitSequence) -> PatternGrid:
    """ZERO pattern of the CV-table over the digits as 4-bit words."""
    if not s.digits:
        raise ValueError("empty digit sequence")
    table = build_table(SourceSequence(s.digits, s.provenance), DIGIT_WIDTH)
    return extract_pattern(table, ZERO)


def parse_source(text: str, count: int) -> DigitSequence:
    """``p/q``, ``sqrt:n`` or a literal digit string."""
    text = text.strip()
    if text.startswith("sqrt:"):
        return sqrt_digits(int(text[5:]), count)
    if "/" in text:
        p, q = text.split("/", 1)
        return rational_digits(int(p), int(q), count)
    if text.isdigit():
        return DigitSequence([int(c) for c in text], "literal")
    raise ValueError(f"cannot parse digit source {text!r}")
