"""Carry value kernels on fixed-width words and exhaustive law checks.

``cvt`` keeps the columnwise carries of an addition in place, shifted one
column left, so its value is ``2 * (a & b)`` on ``n + 1`` bits. ``mcvt`` drops
the shift and is plain ``a & b`` on ``n`` bits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

EXHAUSTIVE_BOUND = 8
DEFAULT_TRIALS = 10**6
MAX_WIDTH = 65  # 64-bit inputs plus the carry column


@dataclass(frozen=True)
class BitWord:
    """Unsigned integer tagged with an explicit bit width."""

    value: int
    width: int

    def __post_init__(self):
        if not 1 <= self.width <= MAX_WIDTH:
            raise ValueError(f"width must be in 1..{MAX_WIDTH}, got {self.width}")
        if not 0 <= self.value < (1 << self.width):
            raise ValueError(f"value {self.value} does not fit in {self.width} bits")

    def __int__(self):
        return self.value

    def bits(self) -> str:
        return format(self.value, f"0{self.width}b")

    def widened(self, width: int) -> "BitWord":
        """Zero-extend on the left."""
        if width < self.width:
            raise ValueError("cannot narrow a word")
        return BitWord(self.value, width)


def all_ones(width: int) -> BitWord:
    return BitWord((1 << width) - 1, width)


def _same_width(a: BitWord, b: BitWord) -> int:
    if a.width != b.width:
        raise ValueError(f"width mismatch: {a.width} vs {b.width}")
    return a.width


def cvt(a: BitWord, b: BitWord) -> BitWord:
    """Carry value of ``a + b``: columnwise AND padded with a trailing 0."""
    n = _same_width(a, b)
    return BitWord((a.value & b.value) << 1, n + 1)


def xor_sum(a: BitWord, b: BitWord) -> BitWord:
    """Carry-free sum bits; ``cvt(a, b) + xor_sum(a, b) == a + b``."""
    n = _same_width(a, b)
    return BitWord(a.value ^ b.value, n)


def mcvt(a: BitWord, b: BitWord) -> BitWord:
    n = _same_width(a, b)
    return BitWord(a.value & b.value, n)


def _check_fold_input(xs: Sequence[BitWord]) -> None:
    if len(xs) < 2:
        raise ValueError("k-ary fold needs at least two operands")
    widths = {x.width for x in xs}
    if len(widths) != 1:
        raise ValueError(f"operands must share a width, got {sorted(widths)}")


def cvt_kary(xs: Sequence[BitWord]) -> BitWord:
    """Left fold of ``cvt``; each new operand is zero-extended to the running width."""
    _check_fold_input(xs)
    acc = cvt(xs[0], xs[1])
    for x in xs[2:]:
        acc = cvt(acc, x.widened(acc.width))
    return acc


def mcvt_kary(xs: Sequence[BitWord]) -> BitWord:
    _check_fold_input(xs)
    acc = xs[0]
    for x in xs[1:]:
        acc = mcvt(acc, x)
    return acc


# Vectorised kernels used by the law checks. They keep the input dtype, so
# object arrays of Python ints give exact results for wide words.

def cvt_array(a, b):
    return (a & b) << 1


def mcvt_array(a, b):
    return a & b


@dataclass
class LawReport:
    """Outcome of a law check. ``counterexample`` is set iff the law fails."""

    law_name: str
    holds: bool
    counterexample: Optional[tuple] = None
    domain_checked: str = ""
    note: str = ""
    details: list = field(default_factory=list)

    def __post_init__(self):
        if self.holds != (self.counterexample is None):
            raise ValueError("holds must be true exactly when no counterexample is given")

    def summary(self) -> str:
        status = "holds" if self.holds else f"fails, counterexample {self.counterexample}"
        line = f"{self.law_name}: {status} [{self.domain_checked}]"
        if self.note:
            line += f"\n  note: {self.note}"
        return line


def _domain(width: int, sampled: bool, trials: int, arity: int) -> str:
    if sampled:
        return f"width {width}, {trials} sampled {arity}-tuples"
    return f"width {width}, all {(1 << width) ** arity} {arity}-tuples"


def _check_bound(width: int, sampled: bool, bound: int) -> None:
    if width < 1:
        raise ValueError("width must be >= 1")
    if width > 64:
        raise ValueError("width above 64 bits is not supported")
    if width > bound and not sampled:
        raise ValueError(
            f"width {width} exceeds the exhaustive bound {bound}; use sampled mode"
        )


def _samples(width: int, count: int, trials: int, seed: int) -> list:
    rng = np.random.default_rng(seed)
    cols = [rng.integers(0, (1 << width) - 1, size=trials, dtype=np.uint64, endpoint=True)
            for _ in range(count)]
    # nested cvt grows two bits past the input width
    if width <= 60:
        return [c.astype(np.int64) for c in cols]
    return [c.astype(object) for c in cols]


def _first_violation(width, arity, violated, sampled, trials, seed) -> Optional[tuple]:
    """Lexicographically smallest tuple for which ``violated`` is true."""
    if sampled:
        cols = _samples(width, arity, trials, seed)
        mask = np.asarray(violated(*cols), dtype=bool)
        bad = list(zip(*(c[mask].tolist() for c in cols)))
        return tuple(int(v) for v in min(bad)) if bad else None

    values = np.arange(1 << width, dtype=np.int64)
    if arity == 2:
        mask = violated(values[:, None], values[None, :])
        if mask.any():
            return tuple(int(v) for v in np.argwhere(mask)[0])
        return None
    for a in range(1 << width):
        mask = violated(np.int64(a), values[:, None], values[None, :])
        if mask.any():
            b, c = np.argwhere(mask)[0]
            return (a, int(b), int(c))
    return None


def check_monoid_laws(
    width: int,
    *,
    sampled: bool = False,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    exhaustive_bound: int = EXHAUSTIVE_BOUND,
    kernel=mcvt_array,
) -> LawReport:
    """Check that ``kernel`` is a commutative monoid on ``width``-bit words.

    Closure, commutativity, identity (all ones) and associativity are checked
    in that order; the combined report carries the first failing law's
    counterexample and one sub-report per law in ``details``.
    """
    _check_bound(width, sampled, exhaustive_bound)
    limit = 1 << width
    ones = limit - 1

    def closure(a, b):
        r = kernel(a, b)
        return (r < 0) | (r >= limit)

    def commutative(a, b):
        return kernel(a, b) != kernel(b, a)

    def identity(a, _b):
        return (kernel(a, ones) != a) | (kernel(ones, a) != a)

    def associative(a, b, c):
        return kernel(kernel(a, b), c) != kernel(a, kernel(b, c))

    details = []
    for name, law in (("closure", closure), ("commutativity", commutative),
                      ("identity", identity)):
        cx = _first_violation(width, 2, law, sampled, trials, seed)
        details.append(LawReport(name, cx is None, cx, _domain(width, sampled, trials, 2)))
    cx = _first_violation(width, 3, associative, sampled, trials, seed)
    details.append(LawReport("associativity", cx is None, cx, _domain(width, sampled, trials, 3)))

    failing = next((d for d in details if not d.holds), None)
    return LawReport(
        "commutative monoid",
        failing is None,
        None if failing is None else failing.counterexample,
        _domain(width, sampled, trials, 3),
        note="" if failing is None else f"{failing.law_name} fails",
        details=details,
    )


ACTION_DISCREPANCY = (
    "the law needs two padded zero columns to merge into one; under integer "
    "semantics cvt(p, q) = 2(p AND q) the action law does not hold"
)


def check_action_law(
    width: int,
    variant: str = "mcvt",
    *,
    sampled: bool = False,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    exhaustive_bound: int = EXHAUSTIVE_BOUND,
) -> LawReport:
    """Check ``T(T(a, x), T(b, x)) == T(T(a, b), x)`` for all ``a, b, x``.

    ``variant`` selects ``T``: ``"mcvt"`` (holds) or ``"cvt"`` under integer
    semantics, which fails with counterexample (1, 1, 1).
    """
    variant = variant.lower()
    if variant not in ("cvt", "mcvt"):
        raise ValueError(f"unknown variant {variant!r}")
    _check_bound(width, sampled, exhaustive_bound)
    kernel = cvt_array if variant == "cvt" else mcvt_array

    def violated(a, b, x):
        return kernel(kernel(a, x), kernel(b, x)) != kernel(kernel(a, b), x)

    cx = _first_violation(width, 3, violated, sampled, trials, seed)
    return LawReport(
        f"{variant} action law",
        cx is None,
        cx,
        _domain(width, sampled, trials, 3),
        note=ACTION_DISCREPANCY if variant == "cvt" and cx is not None else "",
    )
