"""Finite patterns, window extraction and exact pattern sets.

A pattern key is the pattern's dimensions together with its cells packed
row-major into bytes with no per-row padding.  Two keys are equal exactly when
the cell blocks are equal; there is no hashing shortcut on the identity.

Window scanning works on horizontal bit slices: for every row and start column
the ``w`` cells to the right are folded into ``ceil(w/64)`` unsigned 64-bit
words, so a window is the stack of ``h`` consecutive slices.  Windows are
grouped by a 64-bit fingerprint of their slices and every window is then
compared against its group representative, so a fingerprint collision can
never merge two different patterns.  Only the distinct windows are re-encoded
as canonical keys.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import config
from .errors import ResourceLimitError, WindowBoundsError
from .substitution import BinaryGrid

__all__ = [
    "PatternKey",
    "PatternSet",
    "window",
    "enumerate_windows",
    "enumerate_phase_windows",
    "set_equals",
    "encode_cells",
    "decode_payloads",
]

_WORD = 64


@dataclass(frozen=True, order=True)
class PatternKey:
    rows: int
    cols: int
    payload: bytes

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("pattern dimensions must be positive")
        if len(self.payload) != (self.rows * self.cols + 7) // 8:
            raise ValueError("payload length does not match dimensions")

    @classmethod
    def from_array(cls, cells) -> "PatternKey":
        arr = np.asarray(cells, dtype=np.uint8)
        return cls(arr.shape[0], arr.shape[1], encode_cells(arr[None])[0])

    def to_array(self) -> np.ndarray:
        return decode_payloads([self.payload], self.rows, self.cols)[0]

    def to_grid(self) -> BinaryGrid:
        return BinaryGrid.from_array(self.to_array())

    def __repr__(self):
        if self.rows * self.cols <= 64:
            body = "/".join("".join(map(str, r)) for r in self.to_array().tolist())
            return f"PatternKey({self.rows}x{self.cols}: {body})"
        return f"PatternKey({self.rows}x{self.cols}, {self.payload.hex()[:16]}...)"


def encode_cells(stack: np.ndarray) -> list[bytes]:
    """Canonical payloads for a ``(k, h, w)`` stack of 0/1 cells."""
    stack = np.asarray(stack, dtype=np.uint8)
    k = stack.shape[0]
    packed = np.packbits(stack.reshape(k, -1), axis=1)
    return [row.tobytes() for row in packed]


def decode_payloads(payloads: Iterable[bytes], h: int, w: int) -> np.ndarray:
    """Inverse of :func:`encode_cells`; returns a ``(k, h, w)`` uint8 stack."""
    payloads = list(payloads)
    nbytes = (h * w + 7) // 8
    if not payloads:
        return np.zeros((0, h, w), dtype=np.uint8)
    raw = np.frombuffer(b"".join(payloads), dtype=np.uint8).reshape(len(payloads), nbytes)
    return np.unpackbits(raw, axis=1, count=h * w).reshape(len(payloads), h, w)


class PatternSet:
    """Distinct patterns of one fixed size.

    Membership is by exact payload; adding a duplicate is a no-op.  Once
    built by the enumeration routines the set is treated as read-only.
    """

    __slots__ = ("rows", "cols", "_members")

    def __init__(self, rows: int, cols: int, payloads: Iterable[bytes] = ()):
        if rows < 1 or cols < 1:
            raise ValueError("pattern dimensions must be positive")
        self.rows = rows
        self.cols = cols
        self._members: set[bytes] = set()
        nbytes = (rows * cols + 7) // 8
        for p in payloads:
            if len(p) != nbytes:
                raise ValueError("payload length does not match dimensions")
            self._members.add(p)

    @classmethod
    def from_keys(cls, rows: int, cols: int, keys: Iterable[PatternKey]) -> "PatternSet":
        s = cls(rows, cols)
        for key in keys:
            s.add(key)
        return s

    @classmethod
    def from_stack(cls, stack: np.ndarray) -> "PatternSet":
        _, h, w = stack.shape
        return cls(h, w, encode_cells(stack))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def cardinality(self) -> int:
        return len(self._members)

    @property
    def payloads(self) -> frozenset[bytes]:
        return frozenset(self._members)

    def add(self, key: PatternKey) -> None:
        if (key.rows, key.cols) != self.shape:
            raise ValueError(f"{key.rows}x{key.cols} key added to a {self.rows}x{self.cols} set")
        self._members.add(key.payload)

    def to_stack(self) -> np.ndarray:
        """All members as a ``(k, rows, cols)`` array, in sorted payload order."""
        return decode_payloads(sorted(self._members), self.rows, self.cols)

    def __len__(self):
        return len(self._members)

    def __iter__(self) -> Iterator[PatternKey]:
        for p in sorted(self._members):
            yield PatternKey(self.rows, self.cols, p)

    def __contains__(self, key):
        if not isinstance(key, PatternKey):
            return False
        return (key.rows, key.cols) == self.shape and key.payload in self._members

    def _check(self, other: "PatternSet"):
        if self.shape != other.shape:
            raise ValueError(f"cannot combine {self.shape} and {other.shape} pattern sets")

    def __or__(self, other: "PatternSet") -> "PatternSet":
        self._check(other)
        return PatternSet(self.rows, self.cols, self._members | other._members)

    def __and__(self, other: "PatternSet") -> "PatternSet":
        self._check(other)
        return PatternSet(self.rows, self.cols, self._members & other._members)

    def __sub__(self, other: "PatternSet") -> "PatternSet":
        self._check(other)
        return PatternSet(self.rows, self.cols, self._members - other._members)

    def issubset(self, other: "PatternSet") -> bool:
        return self.shape == other.shape and self._members <= other._members

    def isdisjoint(self, other: "PatternSet") -> bool:
        self._check(other)
        return self._members.isdisjoint(other._members)

    def __eq__(self, other):
        if not isinstance(other, PatternSet):
            return NotImplemented
        return set_equals(self, other)

    __hash__ = None

    def __repr__(self):
        return f"PatternSet({self.rows}x{self.cols}, {len(self)} patterns)"


def set_equals(a: PatternSet, b: PatternSet) -> bool:
    """Same dimensions and exactly the same members."""
    return a.shape == b.shape and a._members == b._members


def _check_dims(h: int, w: int) -> None:
    if h < 1 or w < 1:
        raise ValueError(f"window dimensions must be positive, got {h}x{w}")


def window(g: BinaryGrid, r: int, c: int, h: int, w: int) -> PatternKey:
    """The h x w pattern of ``g`` with upper-left corner at row r, column c."""
    _check_dims(h, w)
    if r < 1 or c < 1 or r + h - 1 > g.rows or c + w - 1 > g.cols:
        raise WindowBoundsError(
            f"{h}x{w} window at ({r}, {c}) exceeds {g.rows}x{g.cols} grid"
        )
    band = np.unpackbits(g.packed[r - 1 : r - 1 + h], axis=1, count=g.cols)
    return PatternKey.from_array(band[:, c - 1 : c - 1 + w])


def _row_slices(cells: np.ndarray, w: int, col0: int, step: int, ncols: int) -> np.ndarray:
    """Fold ``w`` cells right of each start column into 64-bit words.

    Start columns are ``col0, col0+step, ...`` (0-based, ``ncols`` of them).
    Returns shape ``(rows, ncols, nwords)``; word ``q`` holds slice columns
    ``64q .. 64q+63``, first column most significant.
    """
    nwords = (w + _WORD - 1) // _WORD
    out = np.zeros((nwords, cells.shape[0], ncols), dtype=np.uint64)
    for q in range(nwords):
        acc = out[q]
        for k in range(q * _WORD, min(w, (q + 1) * _WORD)):
            first = col0 + k
            acc <<= np.uint64(1)
            acc |= cells[:, first : first + step * (ncols - 1) + 1 : step]
    return np.ascontiguousarray(out.transpose(1, 2, 0))


def _words_to_cells(words: np.ndarray, w: int) -> np.ndarray:
    """Inverse of the slice encoding: ``(k, h, nwords)`` words -> ``(k, h, w)`` cells."""
    k, h, nwords = words.shape
    out = np.empty((k, h, w), dtype=np.uint8)
    for q in range(nwords):
        lo, hi = q * _WORD, min(w, (q + 1) * _WORD)
        shifts = np.arange(hi - lo - 1, -1, -1, dtype=np.uint64)
        out[:, :, lo:hi] = (words[:, :, q, None] >> shifts) & np.uint64(1)
    return out


def _unique_rows(block: np.ndarray) -> np.ndarray:
    """Distinct rows of a 2D uint64 array (exact, sorted)."""
    if block.shape[0] <= 1:
        return block
    return np.unique(block, axis=0)


def _multipliers(h: int, nwords: int) -> np.ndarray:
    # fixed seed: fingerprints only group candidates, identity is checked exactly
    rng = np.random.default_rng(0x5EED)
    m = rng.integers(0, 2**63, size=(h, nwords), dtype=np.uint64)
    return m * np.uint64(2) + np.uint64(1)


def _band_distinct(
    slices: np.ndarray, r0: int, step: int, nrows: int, h: int, mults: np.ndarray
) -> np.ndarray:
    """Distinct windows with row starts ``r0, r0+step, ...`` (``nrows`` of them).

    Returns shape ``(k, h, nwords)``.  Windows are grouped by a 64-bit
    fingerprint, then every window is compared word by word against its group
    representative; windows that disagree (fingerprint collisions) are
    deduplicated exactly.
    """
    ncols, nwords = slices.shape[1], slices.shape[2]

    def rows_at(k):
        first = r0 + k
        return slices[first : first + step * (nrows - 1) + 1 : step]

    fp = np.zeros((nrows, ncols), dtype=np.uint64)
    for k in range(h):
        block = rows_at(k)
        for q in range(nwords):
            fp += block[:, :, q] * mults[k, q]
    _, first, inverse = np.unique(fp.ravel(), return_index=True, return_inverse=True)
    inverse = inverse.reshape(nrows, ncols)

    rep_r = r0 + step * (first // ncols)
    rep_c = first % ncols
    reps = np.stack([slices[rep_r + k, rep_c, :] for k in range(h)], axis=1)

    same = np.ones((nrows, ncols), dtype=bool)
    for k in range(h):
        block = rows_at(k)
        for q in range(nwords):
            same &= block[:, :, q] == reps[:, k, q][inverse]
    if same.all():
        return reps

    clash_r, clash_c = np.nonzero(~same)
    clash_r = r0 + step * clash_r
    extra = np.stack([slices[clash_r + k, clash_c, :] for k in range(h)], axis=1)
    both = np.concatenate([reps, extra]).reshape(-1, h * nwords)
    return _unique_rows(both).reshape(-1, h, nwords)


def _scan(
    g: BinaryGrid,
    h: int,
    w: int,
    row0: int,
    col0: int,
    step: int,
    *,
    memory_budget: int | None,
    threads: int | None,
) -> PatternSet:
    """Distinct h x w windows with 0-based corners on a ``step``-spaced lattice."""
    nrows = len(range(row0, g.rows - h + 1, step))
    ncols = len(range(col0, g.cols - w + 1, step))
    if nrows == 0 or ncols == 0:
        return PatternSet(h, w)
    if memory_budget is None:
        memory_budget = config.limits.memory_budget
    if threads is None:
        threads = config.limits.worker_count()

    nwords = (w + _WORD - 1) // _WORD
    # fingerprint, inverse, mask and gather temporaries per window position
    per_position = 40
    fixed = g.rows * g.cols + 2 * g.rows * ncols * nwords * 8
    if fixed + per_position * ncols > memory_budget:
        raise ResourceLimitError(
            f"{h}x{w} scan of a {g.rows}x{g.cols} grid needs at least "
            f"{fixed + per_position * ncols} bytes, budget is {memory_budget}"
        )
    workers = max(threads, 1)
    band_rows = (memory_budget - fixed) // (2 * per_position * ncols * workers)
    band_rows = int(max(1, min(nrows, band_rows, 4096)))

    slices = _row_slices(g.to_array(), w, col0, step, ncols)
    mults = _multipliers(h, nwords)
    bands = [
        (row0 + step * lo, min(band_rows, nrows - lo)) for lo in range(0, nrows, band_rows)
    ]

    def run(band):
        return _band_distinct(slices, band[0], step, band[1], h, mults).reshape(-1, h * nwords)

    if workers > 1 and len(bands) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, bands))
    else:
        parts, held = [], 0
        for band in bands:
            parts.append(run(band))
            held += parts[-1].nbytes
            if fixed + held > memory_budget:
                raise ResourceLimitError(
                    f"{h}x{w} pattern set outgrew the {memory_budget} byte budget"
                )
            if len(parts) > 8:
                parts = [_unique_rows(np.concatenate(parts))]
                held = parts[0].nbytes
    found = _unique_rows(np.concatenate(parts))
    return PatternSet.from_stack(_words_to_cells(found.reshape(-1, h, nwords), w))


def enumerate_windows(
    g: BinaryGrid,
    h: int,
    w: int,
    *,
    memory_budget: int | None = None,
    threads: int | None = None,
) -> PatternSet:
    """All distinct h x w windows of ``g``; empty when the window does not fit."""
    _check_dims(h, w)
    if h > g.rows or w > g.cols:
        return PatternSet(h, w)
    return _scan(g, h, w, 0, 0, 1, memory_budget=memory_budget, threads=threads)


def enumerate_phase_windows(
    g: BinaryGrid,
    h: int,
    w: int,
    i: int,
    j: int,
    *,
    memory_budget: int | None = None,
    threads: int | None = None,
) -> PatternSet:
    """Distinct h x w windows whose corner (r, c) has r = i and c = j (mod 3).

    ``g`` is expected to carry its 3x3 block structure aligned to (1, 1), as
    every supertile does.
    """
    _check_dims(h, w)
    if i not in (1, 2, 3) or j not in (1, 2, 3):
        raise ValueError(f"phase indices must be in 1..3, got ({i}, {j})")
    if h > g.rows or w > g.cols:
        return PatternSet(h, w)
    return _scan(g, h, w, i - 1, j - 1, 3, memory_budget=memory_budget, threads=threads)
