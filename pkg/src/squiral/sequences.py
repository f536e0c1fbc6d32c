"""Exact integer pattern counts: recursions and the closed formula.

Everything here is plain Python ``int`` arithmetic.  In particular the
base-3 floor logarithms behind the closed formula are found by repeated
multiplication, never through ``math.log``: a double-precision
``log(243) / log(3)`` evaluates to 4.999999999999999 and would put the
formula on the wrong branch at n = 245.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass

__all__ = [
    "TABLE1",
    "ComplexityTriple",
    "ClosedFormParams",
    "ilog3",
    "closed_form_params",
    "closed_form_A",
    "Recursion",
    "recursion_triple",
    "simplified_recursion_A",
    "sequence_table",
]

# initial terms (n = 1..10) obtained by direct enumeration
TABLE1_A = (2, 14, 70, 126, 270, 438, 630, 790, 958, 1134)
TABLE1_B = (4, 36, 96, 192, 348, 528, 708, 872, 1044, 1332)
TABLE1_C = TABLE1_B


@dataclass(frozen=True)
class ComplexityTriple:
    """Counts of n x n, n x (n+1) and (n+1) x n patterns."""

    n: int
    A: int
    B: int
    C: int

    def as_dict(self) -> dict:
        return {"n": self.n, "A": self.A, "B": self.B, "C": self.C}


TABLE1 = tuple(
    ComplexityTriple(n, a, b, c)
    for n, a, b, c in zip(range(1, 11), TABLE1_A, TABLE1_B, TABLE1_C)
)


@dataclass(frozen=True)
class ClosedFormParams:
    n: int
    alpha: int
    beta: int


def ilog3(x: int) -> int:
    """The k with 3**k <= x < 3**(k+1), using integer arithmetic only."""
    if x < 1:
        raise ValueError(f"ilog3 needs a positive integer, got {x}")
    k, p = 0, 3
    while p <= x:
        p *= 3
        k += 1
    return k


def closed_form_params(n: int) -> ClosedFormParams:
    if n < 4:
        raise ValueError(f"closed form parameters need n >= 4, got {n}")
    m = n - 2
    alpha = ilog3(m)
    # beta: 2 * 3**beta <= m < 2 * 3**(beta+1)
    beta, p = 0, 6
    while p <= m:
        p *= 3
        beta += 1
    return ClosedFormParams(n, alpha, beta)


def closed_form_A(n: int) -> int:
    """Number of distinct n x n patterns, from the closed formula."""
    if n < 1:
        raise ValueError(f"A_n is defined for n >= 1, got {n}")
    if n <= 3:
        return TABLE1_A[n - 1]
    prm = closed_form_params(n)
    a3, b3 = 3**prm.alpha, 3**prm.beta
    return (4 + 8 * prm.alpha - 8 * prm.beta) * (n - 1) ** 2 + (12 * a3 + 24 * b3) * (n - 1) - 18 * a3 * a3


class Recursion:
    """Memoised evaluation of the two recursion systems.

    ``triple`` uses the full coupled A/B/C system seeded with all ten initial
    columns; ``simplified_A`` uses the A-only system seeded with A_1..A_8.
    Both memo tables grow without bound unless ``cap`` is given, in which case
    they are cleared whenever they exceed it.  One instance is not meant to be
    shared between threads; the module-level helpers serialise access.
    """

    def __init__(self, cap: int | None = None):
        self.cap = cap
        self._abc: dict[int, tuple[int, int, int]] = {
            t.n: (t.A, t.B, t.C) for t in TABLE1
        }
        self._a: dict[int, int] = {n: a for n, a in enumerate(TABLE1_A[:8], start=1)}

    def _trim(self):
        if self.cap is not None:
            if len(self._abc) > self.cap:
                self._abc = {t.n: (t.A, t.B, t.C) for t in TABLE1}
            if len(self._a) > self.cap:
                self._a = {n: a for n, a in enumerate(TABLE1_A[:8], start=1)}

    def _abc_at(self, N: int) -> tuple[int, int, int]:
        hit = self._abc.get(N)
        if hit is not None:
            return hit
        r = N % 3
        if r == 1:
            n = (N + 2) // 3
            a, b, c = self._abc_at(n)
            out = (9 * a, 6 * a + 3 * b, 6 * a + 3 * c)
        elif r == 2:
            n = (N + 1) // 3
            a, b, c = self._abc_at(n)
            a1 = self._abc_at(n + 1)[0]
            out = (
                4 * a + 2 * b + 2 * c + a1,
                2 * a + 4 * b + c + 2 * a1,
                2 * a + b + 4 * c + 2 * a1,
            )
        else:
            n = N // 3
            a, b, c = self._abc_at(n)
            a1 = self._abc_at(n + 1)[0]
            out = (a + 2 * b + 2 * c + 4 * a1, 3 * b + 6 * a1, 3 * c + 6 * a1)
        self._abc[N] = out
        return out

    def triple(self, n: int) -> ComplexityTriple:
        if n < 1:
            raise ValueError(f"counts are defined for n >= 1, got {n}")
        self._trim()
        return ComplexityTriple(n, *self._abc_at(n))

    def _simp(self, N: int) -> int:
        hit = self._a.get(N)
        if hit is not None:
            return hit
        A = self._simp
        if N % 3 == 1:
            out = 9 * A((N + 2) // 3)
        elif N % 3 == 0:
            n = N // 3
            out = A(N - 1) + 3 * A(n + 1) - 3 * A(n)
        elif N % 9 == 2:
            n = (N + 7) // 9
            out = 5 * A(3 * n + 1) - 16 * A(3 * n) + 20 * A(3 * n - 1)
        elif N % 9 == 5:
            n = (N + 4) // 9
            out = -A(3 * n + 1) + 5 * A(3 * n) + 5 * A(3 * n - 1)
        else:
            n = (N + 1) // 9
            out = 2 * A(3 * n + 1) + 8 * A(3 * n) - A(3 * n - 1)
        self._a[N] = out
        return out

    def simplified_A(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"counts are defined for n >= 1, got {n}")
        self._trim()
        return self._simp(n)


_shared = Recursion()
_lock = threading.Lock()


def recursion_triple(n: int) -> ComplexityTriple:
    """(A_n, B_n, C_n) from the coupled recursion system."""
    with _lock:
        return _shared.triple(n)


def simplified_recursion_A(n: int) -> int:
    """A_n from the A-only recursion system."""
    with _lock:
        return _shared.simplified_A(n)


def sequence_table(max_n: int) -> list[ComplexityTriple]:
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    return [recursion_triple(n) for n in range(1, max_n + 1)]
