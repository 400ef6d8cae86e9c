import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from cvtfractal.cvtable import zero_pattern
from cvtfractal.dimension import (
    SIERPINSKI_DIMENSION, box_count, series_csv, similarity_dimension,
)
from oracles import box_counts


def test_full_grid_is_two_dimensional():
    s = box_count(np.ones((64, 64), bool))
    assert s.counts() == {side: (64 // side) ** 2 for side in (32, 16, 8, 4, 2, 1)}
    assert s.fitted_dimension == pytest.approx(2, abs=1e-12)


def test_single_cell_is_zero_dimensional():
    cells = np.zeros((32, 32), bool)
    cells[5, 7] = True
    s = box_count(cells)
    assert set(s.counts().values()) == {1}
    assert s.fitted_dimension == pytest.approx(0, abs=1e-12)


def test_sierpinski_exact_counts():
    s = box_count(zero_pattern(10), [1 << k for k in range(10)])
    assert s.counts() == {1 << k: 3 ** (10 - k) for k in range(10)}
    assert abs(s.fitted_dimension - math.log(3) / math.log(2)) < 1e-9
    assert s.fit_residual < 1e-9


@pytest.mark.parametrize("n", [3, 4, 5])
def test_counts_match_brute_force(n):
    cells = zero_pattern(n).cells.tolist()
    s = box_count(zero_pattern(n))
    for side, count in s.entries:
        assert count == box_counts(cells, side)


@settings(max_examples=40)
@given(arrays(bool, (32, 32)))
def test_monotone_and_bounded(cells):
    if not cells.any():
        return
    s = box_count(cells)
    sides = [side for side, _ in s.entries]
    assert sides == sorted(sides, reverse=True)
    counts = [c for _, c in s.entries]
    for big, small in zip(counts, counts[1:]):
        assert big <= small <= 4 * big
    assert -1e-9 <= s.fitted_dimension <= 2 + 1e-9


def test_rejections():
    with pytest.raises(ValueError):
        box_count(np.ones((4, 8), bool))
    with pytest.raises(ValueError):
        box_count(np.ones((12, 12), bool))
    with pytest.raises(ValueError):
        box_count(np.ones((8, 8), bool), [4])
    with pytest.raises(ValueError):
        box_count(np.ones((8, 8), bool), [3, 1])
    with pytest.raises(ValueError):
        box_count(np.zeros((8, 8), bool))


def test_similarity_dimension():
    assert similarity_dimension(3, 0.5) == pytest.approx(1.5849625007211562)
    assert round(similarity_dimension(3, 0.5), 3) == 1.585
    assert similarity_dimension(4, 0.5) == pytest.approx(2)
    assert similarity_dimension(1, 0.5) == 0
    assert SIERPINSKI_DIMENSION == similarity_dimension(3, 0.5)
    for bad in (0, 1, 1.5, -0.5):
        with pytest.raises(ValueError):
            similarity_dimension(3, bad)


def test_csv():
    text = series_csv(box_count(zero_pattern(2)))
    assert text.splitlines()[:3] == ["side,occupied", "2,3", "1,9"]
    assert text.splitlines()[3].startswith("slope,1.58")
