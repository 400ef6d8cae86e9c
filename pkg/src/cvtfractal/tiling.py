"""2x2 substitution tilings.

Each tile is painted black or white and replaced, one level down, by a 2x2
block ``[[nw, ne], [sw, se]]`` of tiles. The nw quadrant holds the low row
and column indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .cvtable import PatternGrid

DEFAULT_MAX_SIDE = 4096


@dataclass(frozen=True)
class Tile:
    name: str
    black: bool
    children: tuple  # (nw, ne, sw, se)


@dataclass(frozen=True)
class TileSet:
    tiles: Mapping[str, Tile]
    start: str

    def __post_init__(self):
        if self.start not in self.tiles:
            raise ValueError(f"start tile {self.start!r} is not defined")
        for tile in self.tiles.values():
            if len(tile.children) != 4:
                raise ValueError(f"tile {tile.name!r} needs exactly four children")
            missing = [c for c in tile.children if c not in self.tiles]
            if missing:
                raise ValueError(f"tile {tile.name!r} refers to undefined tiles {missing}")


def _tileset(spec: dict, start: str) -> TileSet:
    return TileSet({n: Tile(n, black, tuple(kids)) for n, (black, kids) in spec.items()}, start)


# Two tiles suffice: a black tile keeps three black quadrants and empties the
# high/high one.
CVT_TILESET = _tileset({
    "Z": (True, ("Z", "Z", "Z", "N")),
    "N": (False, ("N", "N", "N", "N")),
}, "Z")

# Same pattern with the black tile split by the quadrant it occupies.
CVT_FOUR_TILESET = _tileset({
    "corner": (True, ("corner", "top", "left", "empty")),
    "top": (True, ("corner", "top", "left", "empty")),
    "left": (True, ("corner", "top", "left", "empty")),
    "empty": (False, ("empty", "empty", "empty", "empty")),
}, "corner")

PRESETS = {"cvt": CVT_TILESET, "cvt4": CVT_FOUR_TILESET}


def substitute(tileset: TileSet, depth: int, max_side: int = DEFAULT_MAX_SIDE) -> PatternGrid:
    """Expand the start tile ``depth`` times into a ``2**depth`` square grid."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if (1 << depth) > max_side:
        raise ValueError(f"grid side 2^{depth} exceeds the limit {max_side}")
    names = sorted(tileset.tiles)
    index = {n: k for k, n in enumerate(names)}
    kids = np.array([[index[c] for c in tileset.tiles[n].children] for n in names]).reshape(-1, 2, 2)
    paint = np.array([tileset.tiles[n].black for n in names])

    grid = np.array([[index[tileset.start]]])
    for _ in range(depth):
        n = grid.shape[0]
        # (n, n, 2, 2) -> (n, 2, n, 2) -> (2n, 2n)
        grid = kids[grid].transpose(0, 2, 1, 3).reshape(2 * n, 2 * n)
    return PatternGrid(paint[grid], f"tiling depth {depth}")


def parse_tileset(text: str) -> TileSet:
    """Parse ``tile <name> <black|white>``, ``rule <name> = nw ne sw se`` and
    ``start <name>`` lines. ``#`` starts a comment.
    """
    paints = {}
    rules = {}
    start = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        head = words[0]
        if head == "tile" and len(words) == 3 and words[2] in ("black", "white"):
            paints[words[1]] = words[2] == "black"
        elif head == "rule" and len(words) == 7 and words[2] == "=":
            rules[words[1]] = tuple(words[3:])
        elif head == "start" and len(words) == 2:
            start = words[1]
        else:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}")
    if start is None:
        raise ValueError("tile set has no start line")
    missing = set(paints) ^ set(rules)
    if missing:
        raise ValueError(f"tiles need both a paint and a rule: {sorted(missing)}")
    return TileSet({n: Tile(n, paints[n], rules[n]) for n in paints}, start)


def format_tileset(tileset: TileSet) -> str:
    lines = [f"tile {n} {'black' if t.black else 'white'}" for n, t in tileset.tiles.items()]
    lines += [f"rule {n} = {' '.join(t.children)}" for n, t in tileset.tiles.items()]
    lines.append(f"start {tileset.start}")
    return "\n".join(lines) + "\n"
