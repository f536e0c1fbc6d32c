"""Brute-force pattern counts of the infinite tiling and the structural facts behind the recursion.

The pattern set of the infinite tiling at a given size is obtained by
enumerating supertiles of growing order until two consecutive ones carry
exactly the same set (a plateau).  Because every supertile sits in the
middle of the next one, a plateau is permanent once the pattern fits inside
the smaller supertile, so the plateau set is the set of the whole tiling.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from . import config
from .errors import UnverifiedCountError
from .pattern import PatternSet, enumerate_phase_windows, enumerate_windows, set_equals
from .sequences import ComplexityTriple
from .substitution import squiral_rule, supertile

__all__ = [
    "PHASES",
    "SaturationResult",
    "saturated_pattern_set",
    "plateau_stable",
    "inclusion_holds",
    "brute_force_triple",
    "phase_class_via_mu",
    "phase_class_by_position",
    "phase_classes",
    "verify_partition",
    "extension_sizes",
    "verify_extension",
]

PHASES = tuple(product((1, 2, 3), repeat=2))


@dataclass(frozen=True)
class SaturationResult:
    patterns: PatternSet
    level: int
    certified: bool

    @property
    def cardinality(self) -> int:
        return len(self.patterns)


def start_level(h: int, w: int) -> int:
    """Smallest L with 3**L >= max(h, w)."""
    side, L = max(h, w), 0
    while 3**L < side:
        L += 1
    return L


@lru_cache(maxsize=256)
def _saturate(h: int, w: int, max_level: int) -> SaturationResult:
    L = start_level(h, w)
    if L >= max_level:
        top = supertile(max_level, max_level=max_level)
        return SaturationResult(enumerate_windows(top, h, w), max_level, False)
    prev = enumerate_windows(supertile(L, max_level=max_level), h, w)
    while L < max_level:
        nxt = enumerate_windows(supertile(L + 1, max_level=max_level), h, w)
        if set_equals(prev, nxt):
            return SaturationResult(prev, L, True)
        prev, L = nxt, L + 1
    return SaturationResult(prev, L, False)


def saturated_pattern_set(h: int, w: int, *, max_level: int | None = None) -> SaturationResult:
    """All h x w patterns of the tiling, certified by a plateau.

    The search starts at the smallest supertile that fits the pattern and
    stops at ``max_level`` (default: the configured search level); reaching
    it without a plateau gives ``certified=False`` and the last set found.
    """
    if h < 1 or w < 1:
        raise ValueError(f"pattern dimensions must be positive, got {h}x{w}")
    if max_level is None:
        max_level = config.limits.search_level
    return _saturate(h, w, max_level)


def plateau_stable(h: int, w: int, *, extra: int = 2, max_level: int | None = None) -> bool:
    """Whether the certified set also equals the set ``extra`` levels higher."""
    sat = saturated_pattern_set(h, w, max_level=max_level)
    if not sat.certified:
        return False
    top = sat.level + extra
    return set_equals(sat.patterns, enumerate_windows(supertile(top), h, w))


def inclusion_holds(level: int, m: int) -> bool:
    """P(T_level, m x m) is a subset of P(T_level+1, m x m)."""
    small = enumerate_windows(supertile(level), m, m)
    big = enumerate_windows(supertile(level + 1), m, m)
    return small.issubset(big)


def brute_force_triple(n: int, *, max_level: int | None = None) -> ComplexityTriple:
    """(A_n, B_n, C_n) by exhaustive enumeration of saturated supertiles."""
    if n < 1:
        raise ValueError(f"counts are defined for n >= 1, got {n}")
    counts = []
    for h, w in ((n, n), (n, n + 1), (n + 1, n)):
        sat = saturated_pattern_set(h, w, max_level=max_level)
        if not sat.certified:
            raise UnverifiedCountError(
                f"{h}x{w} patterns did not saturate by level {sat.level}; "
                "raise the search level to count them"
            )
        counts.append(len(sat.patterns))
    return ComplexityTriple(n, *counts)


def phase_class_via_mu(h: int, w: int, i: int, j: int, *, max_level: int | None = None) -> PatternSet:
    """The h x w window at (i, j) of the inflation of every h x w pattern."""
    if i not in (1, 2, 3) or j not in (1, 2, 3):
        raise ValueError(f"phase indices must be in 1..3, got ({i}, {j})")
    sat = saturated_pattern_set(h, w, max_level=max_level)
    if not sat.certified:
        raise UnverifiedCountError(f"{h}x{w} patterns did not saturate by level {sat.level}")
    cells = sat.patterns.to_stack()
    images = squiral_rule().images()
    k = cells.shape[0]
    # (k, h, w) -> (k, h, w, 3, 3) -> (k, 3h, 3w)
    big = images[cells].transpose(0, 1, 3, 2, 4).reshape(k, 3 * h, 3 * w)
    return PatternSet.from_stack(big[:, i - 1 : i - 1 + h, j - 1 : j - 1 + w])


def phase_class_by_position(
    h: int, w: int, i: int, j: int, *, max_level: int | None = None
) -> PatternSet:
    """Windows of the saturated supertile whose corner lies at phase (i, j).

    The supertile one level above the certified plateau is used: it is the
    image of a supertile holding every h x w pattern, so each pattern's
    inflation appears in it, aligned to the 3x3 block grid.
    """
    sat = saturated_pattern_set(h, w, max_level=max_level)
    if not sat.certified:
        raise UnverifiedCountError(f"{h}x{w} patterns did not saturate by level {sat.level}")
    return enumerate_phase_windows(supertile(sat.level + 1), h, w, i, j)


def phase_classes(h: int, w: int, **kw) -> dict[tuple[int, int], PatternSet]:
    return {(i, j): phase_class_via_mu(h, w, i, j, **kw) for i, j in PHASES}


def verify_partition(h: int, w: int, **kw) -> bool:
    """Nine non-empty, pairwise disjoint phase classes covering all patterns."""
    classes = phase_classes(h, w, **kw)
    full = saturated_pattern_set(h, w, **kw).patterns
    if any(len(c) == 0 for c in classes.values()):
        return False
    if any(not a.isdisjoint(b) for a, b in combinations(classes.values(), 2)):
        return False
    union = PatternSet(h, w)
    for c in classes.values():
        union = union | c
    return set_equals(union, full)


def extension_sizes(s: int, t: int, i: int, j: int) -> list[tuple[int, int]]:
    """The nine sizes (m+3s, n+3t) paired with the (3,3) class at (5+3s, 5+3t)."""
    return [
        (m + 3 * s, n + 3 * t)
        for m in (8 - i, 9 - i, 10 - i)
        for n in (8 - j, 9 - j, 10 - j)
    ]


def verify_extension(s: int, t: int, i: int, j: int, **kw) -> bool:
    if s < 0 or t < 0:
        raise ValueError("s and t must be non-negative")
    target = len(phase_class_via_mu(5 + 3 * s, 5 + 3 * t, 3, 3, **kw))
    return all(
        len(phase_class_via_mu(hh, ww, i, j, **kw)) == target
        for hh, ww in extension_sizes(s, t, i, j)
    )

