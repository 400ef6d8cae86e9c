import math

import pytest
from hypothesis import given, strategies as st

from cvtfractal.dimension import box_count
from cvtfractal.lsystem import (
    CVT_LAYOUT, CVT_PRESET, AxisLayout, LSystemSpec, TurtleState, axis_render,
    axis_segments, axis_tokens, expand, format_spec, parse_spec, rasterize,
    rewrite, tokenize, turtle_path, turtle_render,
)

SIERPINSKI = math.log(3) / math.log(2)

symbols = st.lists(st.sampled_from(["F1", "F2", "-"]), max_size=12)


def test_axiom():
    assert rewrite(CVT_PRESET, 0) == "F2 - F1"


def test_first_generation():
    # F2 -> F2 - F1 - F1 - F2, then the axiom's '-', then F1 -> F1 - F2 - F2 - F1
    assert rewrite(CVT_PRESET, 1) == "F2 - F1 - F1 - F2 - F1 - F2 - F2 - F1"


@pytest.mark.parametrize("k", range(0, 9))
def test_symbol_counts(k):
    tokens = rewrite(CVT_PRESET, k).split()
    assert sum(t in ("F1", "F2") for t in tokens) == 2 * 4**k
    assert tokens.count("-") == 2 * 4**k - 1


@given(symbols, symbols)
def test_homomorphism(a, b):
    assert expand(CVT_PRESET, a + b, 1) == expand(CVT_PRESET, a, 1) + expand(CVT_PRESET, b, 1)


@given(st.integers(0, 4), st.integers(0, 3))
def test_generations_compose(j, k):
    assert expand(CVT_PRESET, expand(CVT_PRESET, CVT_PRESET.axiom, j), k) == \
        expand(CVT_PRESET, CVT_PRESET.axiom, j + k)


def test_spec_validation():
    with pytest.raises(ValueError):
        LSystemSpec(axiom="A", rules={"A": "A B"}, constants={"A"})
    with pytest.raises(ValueError):
        LSystemSpec(axiom="A X", rules={"A": "A"}, constants=set())
    with pytest.raises(ValueError):
        expand(CVT_PRESET, "F3", 1)
    with pytest.raises(ValueError):
        rewrite(CVT_PRESET, -1)


def test_turtle_state_normalizes():
    assert TurtleState(heading=-90).heading == 270
    assert TurtleState(heading=720).heading == 0


def test_single_segment():
    bm = turtle_render("F1", CVT_PRESET, canvas=(8, 8))
    assert bm.black_count() == 8
    rows = [r for r in range(8) if bm.pixels[r].any()]
    assert len(rows) == 1 and bm.pixels[rows[0]].all()


def test_one_turn_makes_l_shape():
    segs = turtle_path("F1 - F1", CVT_PRESET)
    (a0, a1), (b0, b1) = segs
    da = (a1[0] - a0[0], a1[1] - a0[1])
    db = (b1[0] - b0[0], b1[1] - b0[1])
    assert da[0] * db[0] + da[1] * db[1] == 0  # perpendicular
    assert db == (0, -1)  # clockwise from east
    bm = turtle_render("F1 - F1", CVT_PRESET, canvas=(8, 8))
    assert bm.black_count() == 15
    assert bm.pixels[0].all() and bm.pixels[:, 7].all()


def test_ccw_option():
    segs = turtle_path("F1 - F1", CVT_PRESET, minus_clockwise=False)
    assert segs[1][1] == (1.0, 1.0)


def test_plain_turtle_collapses_on_cvt_grammar():
    # every F - F - F - F block closes a unit square
    pts = {p for seg in turtle_path(rewrite(CVT_PRESET, 4), CVT_PRESET) for p in seg}
    assert len(pts) <= 4


def test_empty_drawing_rejected():
    with pytest.raises(ValueError):
        turtle_render("- -", CVT_PRESET)
    with pytest.raises(ValueError):
        rasterize([])


@pytest.mark.parametrize("k", range(0, 7))
def test_axis_tokens_follow_rewrite(k):
    assert " ".join(t for t, _ in axis_tokens(CVT_PRESET, CVT_LAYOUT, k)) == rewrite(CVT_PRESET, k)


@pytest.mark.parametrize("k", range(0, 8))
def test_axis_reading_has_three_fold_growth(k):
    segs = axis_segments(CVT_PRESET, CVT_LAYOUT, k)
    assert len(segs) == 2 * 4**k
    distinct = {frozenset(s) for s in segs}
    assert len(distinct) == 2 * 3**k
    for (x0, y0), (x1, y1) in segs:
        assert abs(x1 - x0) + abs(y1 - y0) == 1


def test_axis_reading_axes():
    drawing = [t for t in axis_tokens(CVT_PRESET, CVT_LAYOUT, 3) if t[1] is not None]
    segs = axis_segments(CVT_PRESET, CVT_LAYOUT, 3)
    for (sym, _), ((x0, y0), (x1, y1)) in zip(drawing, segs):
        if sym == "F1":
            assert y0 == y1
        else:
            assert x0 == x1


def test_axis_golden_generation_1():
    bm = axis_render(CVT_PRESET, 1, canvas=3)
    assert bm.pixels.astype(int).tolist() == [[1, 1, 1], [1, 1, 0], [1, 0, 0]]


def test_axis_layout_validation():
    bad = AxisLayout(axes={"F1": "x", "F2": "y"}, axiom_signs=(1,))
    with pytest.raises(ValueError):
        axis_segments(CVT_PRESET, bad, 1)


def test_rendered_dimension():
    s = box_count(axis_render(CVT_PRESET, 6, canvas=128))
    assert abs(s.fitted_dimension - SIERPINSKI) < 0.1


def test_spec_text_roundtrip():
    text = format_spec(CVT_PRESET)
    assert text.splitlines()[0] == "axiom F2 - F1"
    spec = parse_spec("# cvt\n" + text)
    assert spec.rules == CVT_PRESET.rules
    assert spec.axiom == CVT_PRESET.axiom
    assert spec.turn_angle == 90
    assert spec.variables == {"F1", "F2"} and spec.constants == {"-"}
    with pytest.raises(ValueError):
        parse_spec("angle 90\nF = F F\n")
    with pytest.raises(ValueError):
        parse_spec("axiom F\nangle right\n")


def test_tokenize():
    assert tokenize("F1  -\tF2") == ("F1", "-", "F2")
    assert tokenize(["F1"]) == ("F1",)
