"""The squiral block substitution and its supertiles.

Grids are stored bit-packed, one row per line of bytes (``numpy.packbits``
with the most significant bit first), padding bits always zero.  Addressing
is 1-based with row 1 at the top, as in matrix notation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import config
from .errors import ResourceLimitError

__all__ = [
    "BinaryGrid",
    "SubstitutionRule",
    "squiral_rule",
    "inflate",
    "supertile",
    "complement",
]


class BinaryGrid:
    """Immutable bit-packed 2D array over {0, 1}."""

    __slots__ = ("rows", "cols", "_packed")

    def __init__(self, packed: np.ndarray, rows: int, cols: int):
        if rows < 1 or cols < 1:
            raise ValueError(f"grid dimensions must be positive, got {rows}x{cols}")
        packed = np.ascontiguousarray(packed, dtype=np.uint8)
        if packed.shape != (rows, (cols + 7) // 8):
            raise ValueError(
                f"packed shape {packed.shape} does not match a {rows}x{cols} grid"
            )
        tail = cols % 8
        if tail and np.any(packed[:, -1] & np.uint8(0xFF >> tail)):
            raise ValueError("padding bits must be zero")
        packed.setflags(write=False)
        self.rows = rows
        self.cols = cols
        self._packed = packed

    @classmethod
    def from_array(cls, cells) -> "BinaryGrid":
        """Build a grid from a 2D array-like of 0/1 values (row 1 first)."""
        arr = np.asarray(cells)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2D array, got shape {arr.shape}")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError("cells must be 0 or 1")
        rows, cols = arr.shape
        return cls(np.packbits(arr.astype(np.uint8), axis=1), rows, cols)

    @classmethod
    def from_text(cls, text: str) -> "BinaryGrid":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        return cls.from_array([[int(ch) for ch in ln] for ln in lines])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def packed(self) -> np.ndarray:
        """Read-only view of the packed rows, shape ``(rows, ceil(cols/8))``."""
        return self._packed

    @property
    def nbytes(self) -> int:
        return self._packed.nbytes

    def to_array(self) -> np.ndarray:
        """Unpacked ``uint8`` array of shape ``(rows, cols)``."""
        return np.unpackbits(self._packed, axis=1, count=self.cols)

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        if not (1 <= r <= self.rows and 1 <= c <= self.cols):
            raise IndexError(f"cell ({r}, {c}) outside {self.rows}x{self.cols} grid")
        byte = self._packed[r - 1, (c - 1) // 8]
        return int(byte >> (7 - (c - 1) % 8)) & 1

    def subgrid(self, r: int, c: int, h: int, w: int) -> "BinaryGrid":
        """The h x w block whose upper-left cell is (r, c)."""
        if h < 1 or w < 1:
            raise ValueError("block dimensions must be positive")
        if r < 1 or c < 1 or r + h - 1 > self.rows or c + w - 1 > self.cols:
            raise IndexError(
                f"{h}x{w} block at ({r}, {c}) exceeds {self.rows}x{self.cols} grid"
            )
        band = np.unpackbits(self._packed[r - 1 : r - 1 + h], axis=1, count=self.cols)
        return BinaryGrid.from_array(band[:, c - 1 : c - 1 + w])

    def to_text(self) -> str:
        return "\n".join("".join(map(str, row)) for row in self.to_array().tolist())

    def __eq__(self, other):
        if not isinstance(other, BinaryGrid):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._packed, other._packed)

    def __hash__(self):
        return hash((self.rows, self.cols, self._packed.tobytes()))

    def __repr__(self):
        if self.rows * self.cols <= 81:
            body = "/".join("".join(map(str, r)) for r in self.to_array().tolist())
            return f"BinaryGrid({self.rows}x{self.cols}: {body})"
        return f"BinaryGrid({self.rows}x{self.cols})"


@dataclass(frozen=True)
class SubstitutionRule:
    image0: BinaryGrid
    image1: BinaryGrid

    def __post_init__(self):
        for img in (self.image0, self.image1):
            if img.shape != (3, 3):
                raise ValueError("rule images must be 3x3")

    def images(self) -> np.ndarray:
        """Stacked unpacked images, shape ``(2, 3, 3)``, indexed by symbol."""
        return np.stack([self.image0.to_array(), self.image1.to_array()])


_SQUIRAL_IMAGE0 = ((1, 0, 1), (0, 0, 0), (1, 0, 1))


@lru_cache(maxsize=None)
def squiral_rule() -> SubstitutionRule:
    img0 = np.array(_SQUIRAL_IMAGE0, dtype=np.uint8)
    return SubstitutionRule(BinaryGrid.from_array(img0), BinaryGrid.from_array(1 - img0))


# each source byte -> 3 bytes with every bit repeated three times
_TRIPLE = np.packbits(
    np.repeat(np.unpackbits(np.arange(256, dtype=np.uint8)[:, None], axis=1), 3, axis=1),
    axis=1,
)


def _periodic_mask(bits, ncols: int) -> np.ndarray:
    """Pack a 3-periodic row of length 3*ncols (padding zero)."""
    return np.packbits(np.tile(np.asarray(bits, dtype=np.uint8), ncols))


def inflate(
    g: BinaryGrid,
    rule: SubstitutionRule | None = None,
    *,
    max_side: int | None = None,
) -> BinaryGrid:
    """Replace every cell of ``g`` by the 3x3 image of its symbol."""
    rule = squiral_rule() if rule is None else rule
    if max_side is None:
        max_side = 3 ** config.limits.max_level
    rows, cols = 3 * g.rows, 3 * g.cols
    if max(rows, cols) > max_side:
        raise ResourceLimitError(
            f"inflating {g.rows}x{g.cols} gives {rows}x{cols}, above the {max_side} side limit"
        )
    out_bytes = (cols + 7) // 8
    tripled = _TRIPLE[g.packed].reshape(g.rows, -1)[:, :out_bytes]
    images = rule.images()
    out = np.empty((g.rows, 3, out_bytes), dtype=np.uint8)
    for a in range(3):
        ones = _periodic_mask(images[1, a], g.cols)
        zeros = _periodic_mask(images[0, a], g.cols)
        out[:, a, :] = (tripled & ones) | (~tripled & zeros)
    return BinaryGrid(out.reshape(rows, out_bytes), rows, cols)


def complement(g: BinaryGrid) -> BinaryGrid:
    """Cellwise complement, same dimensions."""
    flipped = ~g.packed
    tail = g.cols % 8
    if tail:
        flipped[:, -1] &= np.uint8((0xFF << (8 - tail)) & 0xFF)
    return BinaryGrid(flipped, g.rows, g.cols)


@lru_cache(maxsize=16)
def _supertile_cached(n: int) -> BinaryGrid:
    if n == 0:
        return BinaryGrid.from_array([[0]])
    return inflate(_supertile_cached(n - 1), max_side=3**n)


def supertile(n: int, *, max_level: int | None = None) -> BinaryGrid:
    """``T_n``: the 0 seed inflated ``n`` times, a 3^n x 3^n grid."""
    if max_level is None:
        max_level = config.limits.max_level
    if n < 0:
        raise ValueError(f"supertile level must be non-negative, got {n}")
    if n > max_level:
        raise ResourceLimitError(f"supertile level {n} exceeds the maximum level {max_level}")
    return _supertile_cached(n)
