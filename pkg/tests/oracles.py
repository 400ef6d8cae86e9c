"""Independent reference computations used by the tests.

None of these call into the package; they recompute results the slow,
obvious way.
"""

import math


def column_carries(a: int, b: int, width: int) -> str:
    """Carry string of a + b, column by column, shifted one place left."""
    sa, sb = format(a, f"0{width}b"), format(b, f"0{width}b")
    carries = "".join("1" if x == "1" and y == "1" else "0" for x, y in zip(sa, sb))
    return carries + "0"


def column_xor(a: int, b: int, width: int) -> str:
    sa, sb = format(a, f"0{width}b"), format(b, f"0{width}b")
    return "".join("1" if x != y else "0" for x, y in zip(sa, sb))


def zero_pattern(n: int) -> list:
    side = 1 << n
    return [[(i & j) == 0 for j in range(side)] for i in range(side)]


def pascal_parity(t: int, i: int) -> bool:
    return 0 <= i <= t and math.comb(t, i) % 2 == 1


def box_counts(cells, side: int) -> int:
    n = len(cells)
    total = 0
    for r0 in range(0, n, side):
        for c0 in range(0, n, side):
            if any(cells[r][c] for r in range(r0, r0 + side) for c in range(c0, c0 + side)):
                total += 1
    return total


def decimal_digits(p: int, q: int, count: int) -> list:
    return [(p * 10**k // q) % 10 for k in range(1, count + 1)]


def sqrt_digit_list(n: int, frac: int) -> list:
    return [int(c) for c in str(math.isqrt(n * 10 ** (2 * frac)))]


def multiplicative_order(base: int, q: int) -> int:
    """Order of base mod q, with q coprime to base; 1 for q == 1."""
    if q == 1:
        return 1
    k, x = 1, base % q
    while x != 1:
        x = x * base % q
        k += 1
    return k
