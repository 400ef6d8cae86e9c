from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cvtfractal.sequence import (
    DigitSequence, detect_period, parse_source, rational_digits,
    sequence_table_pattern, sqrt_digits,
)
from oracles import decimal_digits, multiplicative_order, sqrt_digit_list

SQRT2_PRINTED = "1.414213562373095048801688"


def test_one_seventh():
    assert rational_digits(1, 7, 12).digits == (1, 4, 2, 8, 5, 7) * 2


def test_simple_rationals():
    assert rational_digits(1, 3, 4).digits == (3, 3, 3, 3)
    assert rational_digits(1, 4, 4).digits == (2, 5, 0, 0)


def test_rational_errors():
    with pytest.raises(ValueError):
        rational_digits(1, 0, 5)
    with pytest.raises(ValueError):
        rational_digits(7, 3, 5)
    with pytest.raises(ValueError):
        rational_digits(1, 3, 0)


@given(st.integers(1, 500).flatmap(lambda q: st.tuples(st.integers(0, q - 1), st.just(q))))
def test_long_division_matches_integer_oracle(pq):
    p, q = pq
    assert list(rational_digits(p, q, 40).digits) == decimal_digits(p, q, 40)


def test_sqrt2_printed_prefix():
    digits = sqrt_digits(2, 24)
    assert digits.text() == SQRT2_PRINTED.replace(".", "")
    assert digits.digits == (1, 4, 1, 4, 2, 1, 3, 5, 6, 2, 3, 7, 3, 0, 9, 5, 0, 4, 8, 8, 0, 1, 6, 8, 8)


def test_sqrt3():
    assert sqrt_digits(3, 5).digits == (1, 7, 3, 2, 0, 5)


@pytest.mark.parametrize("n", [4, 9, 100, 144, 10**6])
def test_perfect_square_rejected(n):
    with pytest.raises(ValueError):
        sqrt_digits(n, 5)


@settings(max_examples=60)
@given(st.integers(2, 10**7).filter(lambda n: int(n**0.5) ** 2 != n and (int(n**0.5) + 1) ** 2 != n),
       st.integers(1, 60))
def test_sqrt_matches_isqrt(n, count):
    assert list(sqrt_digits(n, count).digits) == sqrt_digit_list(n, count)


def test_period_of_one_seventh():
    r = detect_period(rational_digits(1, 7, 60), 20)
    assert (r.periodic, r.preperiod, r.period) == (True, 0, 6)


def test_period_with_preperiod():
    r = detect_period(rational_digits(1, 4, 30), 10)
    assert (r.periodic, r.preperiod, r.period) == (True, 2, 1)
    r = detect_period(rational_digits(1, 6, 30), 10)
    assert (r.preperiod, r.period) == (1, 1)


def test_sqrt2_not_periodic():
    r = detect_period(sqrt_digits(2, 1000), 300)
    assert not r.periodic and r.period is None
    assert r.search_bound == 1001


def test_sequence_too_short():
    with pytest.raises(ValueError):
        detect_period(rational_digits(1, 7, 10), 20)


def _reduced_order(p, q):
    g = gcd(p, q)
    q //= g
    for f in (2, 5):
        while q % f == 0:
            q //= f
    return multiplicative_order(10, q)


@pytest.mark.parametrize("q", range(1, 51))
def test_period_divides_order(q):
    for p in range(q):
        order = _reduced_order(p, q)
        r = detect_period(rational_digits(p, q, 200), 50)
        assert r.periodic
        assert order % r.period == 0
        # preperiod is the larger power of 2 or 5 in the reduced denominator
        qq = q // gcd(p, q)
        twos = fives = 0
        while qq % 2 == 0:
            qq //= 2
            twos += 1
        while qq % 5 == 0:
            qq //= 5
            fives += 1
        assert r.preperiod == max(twos, fives)


def test_table_pattern_of_one_seventh():
    grid = sequence_table_pattern(rational_digits(1, 7, 12))
    c = grid.cells
    assert c.shape == (12, 12)
    assert np.array_equal(c[:6], c[6:]) and np.array_equal(c[:, :6], c[:, 6:])


def test_constant_digits_no_zeros():
    assert not sequence_table_pattern(DigitSequence([3, 3, 3])).cells.any()


def test_zero_digit_gives_full_row_and_column():
    c = sequence_table_pattern(DigitSequence([5, 0, 7, 2])).cells
    assert c[1].all() and c[:, 1].all()


@given(st.integers(2, 97).flatmap(lambda q: st.tuples(st.integers(1, q - 1), st.just(q))))
def test_periodic_digits_give_periodic_pattern(pq):
    p, q = pq
    digits = rational_digits(p, q, 240)
    r = detect_period(digits, 100)
    c = sequence_table_pattern(digits).cells
    a, per = r.preperiod, r.period
    assert np.array_equal(c[a:-per, a:], c[a + per:, a:])
    assert np.array_equal(c[a:, a:-per], c[a:, a + per:])


def test_parse_source():
    assert parse_source("1/7", 6).digits == (1, 4, 2, 8, 5, 7)
    assert parse_source("sqrt:2", 3).text() == "1414"
    assert parse_source("2718", 99).digits == (2, 7, 1, 8)
    with pytest.raises(ValueError):
        parse_source("pi", 5)
    with pytest.raises(ValueError):
        DigitSequence([10])
