"""Deterministic L-system rewriting with two geometric interpretations.

Symbols are whitespace-separated tokens, so multi-character variables such as
``F1`` work. ``turtle_path`` is the usual relative turtle: variables draw a
unit step forward, ``-`` turns clockwise and ``+`` counter-clockwise by the
system's turn angle. With the CVT grammar every ``-`` then closes a square, so the
turtle picture collapses; ``axis_segments`` instead reads each rule as a
drawn production on fixed axes (F1 horizontal, F2 vertical) where the two
middle segments of a rule form an out-and-back spike toward the positive
side. That reading traces the CV-table fractal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from .raster import Bitmap

DEFAULT_CANVAS = 1024


def tokenize(s: str | Sequence[str]) -> tuple:
    if isinstance(s, str):
        return tuple(s.split())
    return tuple(s)


@dataclass(frozen=True)
class LSystemSpec:
    axiom: tuple
    rules: Mapping[str, tuple]
    turn_angle: float = 90.0
    variables: frozenset = None
    constants: frozenset = None

    def __post_init__(self):
        set_ = lambda k, v: object.__setattr__(self, k, v)
        set_("axiom", tokenize(self.axiom))
        set_("rules", {k: tokenize(v) for k, v in dict(self.rules).items()})
        variables = frozenset(self.rules) if self.variables is None else frozenset(self.variables)
        seen = set(self.axiom).union(*self.rules.values())
        constants = (frozenset(seen - variables) if self.constants is None
                     else frozenset(self.constants))
        set_("variables", variables)
        set_("constants", constants)
        if variables & constants:
            raise ValueError(f"symbols are both variable and constant: {sorted(variables & constants)}")
        if not set(self.rules) <= variables:
            raise ValueError("rule keys must be variables")
        unknown = seen - variables - constants
        if unknown:
            raise ValueError(f"undeclared symbols: {sorted(unknown)}")
        if not self.axiom:
            raise ValueError("axiom must be non-empty")

    @property
    def alphabet(self) -> frozenset:
        return self.variables | self.constants


CVT_PRESET = LSystemSpec(
    axiom="F2 - F1",
    rules={"F1": "F1 - F2 - F2 - F1", "F2": "F2 - F1 - F1 - F2"},
    turn_angle=90.0,
)

PRESETS = {"cvt": CVT_PRESET}


def expand(spec: LSystemSpec, tokens: Sequence[str], generations: int) -> tuple:
    """Apply the rules ``generations`` times, in parallel over all symbols."""
    if generations < 0:
        raise ValueError("generations must be >= 0")
    tokens = tokenize(tokens)
    unknown = set(tokens) - spec.alphabet
    if unknown:
        raise ValueError(f"symbols not in the alphabet: {sorted(unknown)}")
    rules = spec.rules
    for _ in range(generations):
        out = []
        for t in tokens:
            out.extend(rules.get(t, (t,)))
        tokens = tuple(out)
    return tokens


def rewrite(spec: LSystemSpec, generations: int) -> str:
    return " ".join(expand(spec, spec.axiom, generations))


@dataclass(frozen=True)
class TurtleState:
    x: float = 0.0
    y: float = 0.0
    heading: float = 0.0  # degrees, 0 = east, counter-clockwise positive
    step_length: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "heading", self.heading % 360.0)

    def forward(self) -> "TurtleState":
        rad = math.radians(self.heading)
        # round to kill float noise on right angles
        dx = round(self.step_length * math.cos(rad), 12)
        dy = round(self.step_length * math.sin(rad), 12)
        return TurtleState(self.x + dx, self.y + dy, self.heading, self.step_length)

    def turn(self, degrees: float) -> "TurtleState":
        return TurtleState(self.x, self.y, self.heading + degrees, self.step_length)


def turtle_path(
    tokens: str | Sequence[str],
    spec: LSystemSpec,
    *,
    heading: float = 0.0,
    minus_clockwise: bool = True,
) -> list:
    """Segments ``((x0, y0), (x1, y1))`` traced by a relative turtle, y up."""
    tokens = tokenize(tokens)
    unknown = set(tokens) - spec.alphabet - {"+", "-"}
    if unknown:
        raise ValueError(f"symbols not in the alphabet: {sorted(unknown)}")
    minus = -spec.turn_angle if minus_clockwise else spec.turn_angle
    state = TurtleState(heading=heading)
    segments = []
    for t in tokens:
        if t in spec.variables:
            nxt = state.forward()
            segments.append(((state.x, state.y), (nxt.x, nxt.y)))
            state = nxt
        elif t == "-":
            state = state.turn(minus)
        elif t == "+":
            state = state.turn(-minus)
    return segments


@dataclass(frozen=True)
class AxisLayout:
    """Absolute-axis reading of a grammar.

    ``axes`` maps each drawing symbol to ``"x"`` or ``"y"``. ``axiom_signs``
    gives the direction (+1/-1) of each drawing symbol of the axiom, and
    ``child_signs[v]`` the direction of each drawing symbol in ``v``'s
    replacement: 0 inherits the parent's direction, +1/-1 are absolute.
    Coordinates are image coordinates: +x right, +y down.
    """

    axes: Mapping[str, str]
    axiom_signs: tuple
    child_signs: Mapping[str, tuple] = field(default_factory=dict)


CVT_LAYOUT = AxisLayout(
    axes={"F1": "x", "F2": "y"},
    axiom_signs=(-1, +1),
    child_signs={"F1": (0, +1, -1, 0), "F2": (0, +1, -1, 0)},
)


def _drawing(tokens, layout):
    return [t for t in tokens if t in layout.axes]


def axis_tokens(spec: LSystemSpec, layout: AxisLayout, generations: int) -> list:
    """Expanded ``(symbol, sign)`` pairs; sign is None for non-drawing symbols."""
    if generations < 0:
        raise ValueError("generations must be >= 0")
    if len(layout.axiom_signs) != len(_drawing(spec.axiom, layout)):
        raise ValueError("axiom_signs must match the drawing symbols of the axiom")
    for var, signs in layout.child_signs.items():
        if len(signs) != len(_drawing(spec.rules.get(var, ()), layout)):
            raise ValueError(f"child_signs for {var} must match its drawing symbols")

    def attach(tokens, signs):
        it = iter(signs)
        return [(t, next(it) if t in layout.axes else None) for t in tokens]

    current = attach(spec.axiom, layout.axiom_signs)
    for _ in range(generations):
        out = []
        for sym, sign in current:
            if sym not in spec.rules:
                out.append((sym, sign))
                continue
            children = spec.rules[sym]
            child = layout.child_signs.get(sym, (0,) * len(_drawing(children, layout)))
            resolved = [sign if c == 0 else c for c in child]
            out.extend(attach(children, resolved))
        current = out
    return current


def axis_segments(spec: LSystemSpec, layout: AxisLayout, generations: int) -> list:
    """Unit segments of the absolute-axis reading, starting at the origin."""
    x = y = 0
    segments = []
    for sym, sign in axis_tokens(spec, layout, generations):
        if sign is None:
            continue
        if layout.axes[sym] == "x":
            nx, ny = x + sign, y
        else:
            nx, ny = x, y + sign
        segments.append(((x, y), (nx, ny)))
        x, y = nx, ny
    return segments


def rasterize(segments: Sequence, canvas=(DEFAULT_CANVAS, DEFAULT_CANVAS), *, y_up: bool = False) -> Bitmap:
    """Fit ``segments`` into the canvas (uniform scale) and draw 1-pixel lines."""
    if not segments:
        raise ValueError("nothing to draw")
    w, h = (canvas, canvas) if isinstance(canvas, int) else canvas
    if w < 1 or h < 1:
        raise ValueError("canvas dimensions must be positive")
    pts = np.asarray(segments, dtype=float).reshape(-1, 2)
    lo = pts.min(axis=0)
    span = pts.max(axis=0) - lo
    scales = [(size - 1) / s for size, s in zip((w, h), span) if s > 0]
    scale = min(scales) if scales else 0.0
    px = np.zeros((h, w), dtype=bool)
    for (x0, y0), (x1, y1) in segments:
        a = np.array([x0, y0], dtype=float) - lo
        b = np.array([x1, y1], dtype=float) - lo
        a, b = np.rint(a * scale), np.rint(b * scale)
        n = int(max(abs(b - a))) + 1
        xs = np.rint(np.linspace(a[0], b[0], n)).astype(int)
        ys = np.rint(np.linspace(a[1], b[1], n)).astype(int)
        if y_up:
            ys = (h - 1) - ys
        px[ys, xs] = True
    return Bitmap(px)


def turtle_render(
    s: str | Sequence[str],
    spec: LSystemSpec,
    canvas=(DEFAULT_CANVAS, DEFAULT_CANVAS),
    **turtle_options,
) -> Bitmap:
    """Render a symbol string with the relative turtle (y axis points up)."""
    segments = turtle_path(s, spec, **turtle_options)
    if not segments:
        raise ValueError("the string draws nothing")
    return rasterize(segments, canvas, y_up=True)


def axis_render(
    spec: LSystemSpec,
    generations: int,
    layout: Optional[AxisLayout] = None,
    canvas=(DEFAULT_CANVAS, DEFAULT_CANVAS),
) -> Bitmap:
    """Render generation ``generations`` with an absolute-axis layout."""
    layout = CVT_LAYOUT if layout is None else layout
    return rasterize(axis_segments(spec, layout, generations), canvas)


def parse_spec(text: str) -> LSystemSpec:
    """Parse the line format::

        axiom F2 - F1
        angle 90
        F1 = F1 - F2 - F2 - F1

    Blank lines and ``#`` comments are ignored.
    """
    axiom = None
    angle = 90.0
    rules = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            lhs, rhs = (p.strip() for p in line.split("=", 1))
            if len(lhs.split()) != 1:
                raise ValueError(f"line {lineno}: rule needs a single symbol on the left")
            rules[lhs] = rhs
            continue
        key, _, rest = line.partition(" ")
        if key == "axiom":
            axiom = rest.strip()
        elif key == "angle":
            try:
                angle = float(rest)
            except ValueError:
                raise ValueError(f"line {lineno}: bad angle {rest!r}") from None
        else:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}")
    if not axiom:
        raise ValueError("spec has no axiom line")
    return LSystemSpec(axiom=axiom, rules=rules, turn_angle=angle)


def format_spec(spec: LSystemSpec) -> str:
    lines = [f"axiom {' '.join(spec.axiom)}", f"angle {spec.turn_angle:g}"]
    lines += [f"{k} = {' '.join(v)}" for k, v in sorted(spec.rules.items())]
    return "\n".join(lines) + "\n"
