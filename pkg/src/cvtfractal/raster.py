"""Pattern grids to portable bitmaps (PBM), with explicit orientation changes.

Row 0 of a grid is the top row of the image. True cells are black (1).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .cvtable import as_cells

DEFAULT_MAX_PIXELS = 1 << 26


@dataclass(frozen=True)
class Bitmap:
    pixels: np.ndarray

    def __post_init__(self):
        px = np.asarray(self.pixels, dtype=bool)
        if px.ndim != 2 or 0 in px.shape:
            raise ValueError("bitmap must be a non-empty 2-D grid")
        object.__setattr__(self, "pixels", px)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def black_count(self) -> int:
        return int(self.pixels.sum())

    def __eq__(self, other):
        if not isinstance(other, Bitmap):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)


def grid_to_bitmap(pattern, cell_size: int = 1, max_pixels: int = DEFAULT_MAX_PIXELS) -> Bitmap:
    """Blow each grid cell up to a ``cell_size`` square block."""
    if cell_size < 1:
        raise ValueError("cell_size must be >= 1")
    cells = as_cells(pattern)
    h, w = cells.shape
    if h * w * cell_size * cell_size > max_pixels:
        raise ValueError(f"{w * cell_size}x{h * cell_size} bitmap exceeds {max_pixels} pixels")
    if cell_size > 1:
        cells = np.repeat(np.repeat(cells, cell_size, axis=0), cell_size, axis=1)
    return Bitmap(cells)


def flip_vertical(b: Bitmap) -> Bitmap:
    return Bitmap(b.pixels[::-1, :].copy())


def flip_horizontal(b: Bitmap) -> Bitmap:
    return Bitmap(b.pixels[:, ::-1].copy())


def rotate_180(b: Bitmap) -> Bitmap:
    return Bitmap(b.pixels[::-1, ::-1].copy())


def to_pbm(b: Bitmap, variant: str = "P1") -> bytes:
    """Encode as plain (P1) or raw (P4) PBM."""
    h, w = b.pixels.shape
    if variant == "P1":
        rows = (" ".join("1" if p else "0" for p in row) for row in b.pixels)
        return (f"P1\n{w} {h}\n" + "".join(r + "\n" for r in rows)).encode("ascii")
    if variant == "P4":
        packed = np.packbits(b.pixels, axis=1)
        return f"P4\n{w} {h}\n".encode("ascii") + packed.tobytes()
    raise ValueError(f"unknown PBM variant {variant!r}")


def write_pbm(b: Bitmap, path, variant: str = "P1") -> None:
    with open(path, "wb") as fh:
        fh.write(to_pbm(b, variant))


def _header_tokens(data: bytes, count: int):
    """Read ``count`` whitespace-separated header tokens, skipping comments."""
    tokens = []
    pos = 0
    while len(tokens) < count:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if pos >= len(data):
            raise ValueError("truncated PBM header")
        if data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        tokens.append(data[start:pos].decode("ascii"))
    return tokens, pos


def from_pbm(data: bytes) -> Bitmap:
    (magic, w, h), pos = _header_tokens(data, 3)
    try:
        w, h = int(w), int(h)
    except ValueError:
        raise ValueError("bad PBM dimensions") from None
    if w < 1 or h < 1:
        raise ValueError("PBM dimensions must be positive")
    if magic == "P1":
        body = data[pos:]
        # drop comments, then keep only the 0/1 digits
        lines = [ln.split(b"#", 1)[0] for ln in body.splitlines()]
        digits = [c for c in b"".join(lines) if c in b"01"]
        if len(digits) < w * h:
            raise ValueError("truncated P1 body")
        px = np.array(digits[: w * h], dtype=np.uint8).reshape(h, w) == ord("1")
        return Bitmap(px)
    if magic == "P4":
        pos += 1  # single whitespace after the height
        stride = (w + 7) // 8
        raw = np.frombuffer(data, dtype=np.uint8, count=stride * h, offset=pos)
        px = np.unpackbits(raw.reshape(h, stride), axis=1)[:, :w].astype(bool)
        return Bitmap(px)
    raise ValueError(f"not a PBM file (magic {magic!r})")


def read_pbm(path: str | os.PathLike) -> Bitmap:
    with open(path, "rb") as fh:
        return from_pbm(fh.read())
