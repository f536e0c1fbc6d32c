"""Named property checks shared by the ``verify`` command and the test suite.

Each check returns a :class:`CheckResult`; a failing result names the first
counterexample it met.  Suites are plain lists of checks run in order.
"""
from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass

from .complexity import (
    PHASES,
    brute_force_triple,
    inclusion_holds,
    phase_class_by_position,
    phase_class_via_mu,
    phase_classes,
    plateau_stable,
    saturated_pattern_set,
    verify_extension,
    verify_partition,
)
from .pattern import enumerate_windows, set_equals
from .sequences import (
    TABLE1,
    closed_form_A,
    closed_form_params,
    recursion_triple,
    simplified_recursion_A,
)
from .substitution import supertile

log = logging.getLogger(__name__)

SUITES = ("lemmas", "table1", "crosscheck", "all")


@dataclass
class CheckResult:
    name: str
    claim: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        text = f"[{mark}] {self.name}: {self.claim}"
        return f"{text} ({self.detail})" if self.detail else text

    def as_dict(self) -> dict:
        return asdict(self)


def check_table1() -> CheckResult:
    """Brute-force triples for n = 1..10 against the published initial terms."""
    matched = 0
    for expected in TABLE1:
        got = brute_force_triple(expected.n)
        if got != expected:
            return CheckResult(
                "table1-brute", "brute-force counts equal the initial-terms table", False,
                f"n={expected.n}: expected {expected}, got {got}",
            )
        matched += 1
    return CheckResult(
        "table1-brute", "brute-force counts equal the initial-terms table", True,
        f"{matched}/10 columns match",
    )


def check_closed_form_table1() -> CheckResult:
    claim = "closed formula reproduces the A row of the table"
    for t in TABLE1:
        if closed_form_A(t.n) != t.A:
            return CheckResult("table1-closed", claim, False, f"n={t.n}: {closed_form_A(t.n)} != {t.A}")
    return CheckResult("table1-closed", claim, True, "n = 1..10")


def check_three_way(seq_max: int) -> CheckResult:
    claim = f"closed form = coupled recursion = A-only recursion for n <= {seq_max}"
    for n in range(1, seq_max + 1):
        a, b, c = closed_form_A(n), recursion_triple(n).A, simplified_recursion_A(n)
        if not a == b == c:
            return CheckResult("three-way", claim, False, f"n={n}: closed={a} coupled={b} simplified={c}")
    return CheckResult("three-way", claim, True)


def check_brute_vs_recursion(lo: int, hi: int) -> CheckResult:
    claim = f"brute force = recursion for {lo} <= n <= {hi}"
    for n in range(lo, hi + 1):
        bf, rec = brute_force_triple(n), recursion_triple(n)
        log.info("n=%d brute=%s", n, bf)
        if bf != rec:
            return CheckResult("brute-vs-recursion", claim, False, f"n={n}: brute {bf} vs recursion {rec}")
    return CheckResult("brute-vs-recursion", claim, True)


def check_b_equals_c(brute_max: int, seq_max: int) -> CheckResult:
    claim = f"B_n = C_n (brute force n <= {brute_max}, recursion n <= {seq_max})"
    for n in range(1, brute_max + 1):
        t = brute_force_triple(n)
        if t.B != t.C:
            return CheckResult("b-equals-c", claim, False, f"brute n={n}: B={t.B} C={t.C}")
    for n in range(1, seq_max + 1):
        t = recursion_triple(n)
        if t.B != t.C:
            return CheckResult("b-equals-c", claim, False, f"recursion n={n}: B={t.B} C={t.C}")
    return CheckResult("b-equals-c", claim, True)


def check_float_trap() -> CheckResult:
    claim = "exact alpha at n = 245 is 5 and the closed form matches the recursion"
    prm = closed_form_params(245)
    naive = math.floor(math.log(243) / math.log(3))
    ok = prm.alpha == 5 and prm.beta == 4 and closed_form_A(245) == recursion_triple(245).A
    return CheckResult(
        "float-trap", claim, ok,
        f"alpha={prm.alpha} beta={prm.beta} A={closed_form_A(245)}; double-precision log gives {naive}",
    )


def check_plateau_examples() -> CheckResult:
    claim = "P(T2,2x2)=P(T3,2x2) with 14 patterns; P(T3,4x4)=P(T4,4x4) with 126"
    p2, p3 = enumerate_windows(supertile(2), 2, 2), enumerate_windows(supertile(3), 2, 2)
    q3, q4 = enumerate_windows(supertile(3), 4, 4), enumerate_windows(supertile(4), 4, 4)
    ok = set_equals(p2, p3) and len(p2) == 14 and set_equals(q3, q4) and len(q3) == 126
    sat2, sat4 = saturated_pattern_set(2, 2), saturated_pattern_set(4, 4)
    ok = ok and (sat2.level, len(sat2.patterns)) == (2, 14) and (sat4.level, len(sat4.patterns)) == (3, 126)
    return CheckResult(
        "plateau", claim, ok,
        f"|P2x2|={len(p2)} at level {sat2.level}, |P4x4|={len(q3)} at level {sat4.level}",
    )


def check_plateau_stability(max_size: int) -> CheckResult:
    claim = f"certified plateaus persist two levels up, sizes <= {max_size}"
    for m in range(1, max_size + 1):
        for h, w in ((m, m), (m, m + 1), (m + 1, m)):
            if not plateau_stable(h, w):
                return CheckResult("plateau-stability", claim, False, f"{h}x{w}")
    return CheckResult("plateau-stability", claim, True)


def check_inclusion(max_size: int, top_level: int = 5) -> CheckResult:
    claim = f"P(T_n, m x m) is contained in P(T_n+1, m x m) for m <= {max_size}, n < {top_level}"
    for m in range(1, max_size + 1):
        for level in range(top_level):
            if 3**level >= m and not inclusion_holds(level, m):
                return CheckResult("inclusion", claim, False, f"m={m}, level={level}")
    return CheckResult("inclusion", claim, True)


def check_partition(max_size: int) -> CheckResult:
    claim = f"nine phase classes are non-empty, disjoint and cover all patterns, 4 <= sizes <= {max_size}"
    sizes4 = sorted({len(c) for c in phase_classes(4, 4).values()})
    if sizes4 != [14] or not verify_partition(4, 4):
        return CheckResult("partition", claim, False, f"4x4 class sizes {sizes4}")
    for h in range(4, max_size + 1):
        for w in range(4, max_size + 1):
            if not verify_partition(h, w):
                return CheckResult("partition", claim, False, f"{h}x{w}")
    return CheckResult("partition", claim, True, "every 4x4 class has 14 members, 9*14 = 126")


def check_extension() -> CheckResult:
    claim = "|P33(5x5)| = |P11(9x9)|; extension holds for all (i,j) at s=t=0 and (3,3) at s=t=1"
    a, b = len(phase_class_via_mu(5, 5, 3, 3)), len(phase_class_via_mu(9, 9, 1, 1))
    if a != b:
        return CheckResult("extension", claim, False, f"|P33(5x5)|={a} |P11(9x9)|={b}")
    for i, j in PHASES:
        if not verify_extension(0, 0, i, j):
            return CheckResult("extension", claim, False, f"s=t=0, (i,j)=({i},{j})")
    if not verify_extension(1, 1, 3, 3):
        return CheckResult("extension", claim, False, "s=t=1, (i,j)=(3,3)")
    return CheckResult("extension", claim, True, f"|P33(5x5)| = |P11(9x9)| = {a}")


def check_phase_equivalence(sizes=((4, 4), (5, 5), (4, 5))) -> CheckResult:
    claim = "inflation-cut and phase-position classes coincide at " + ", ".join(f"{h}x{w}" for h, w in sizes)
    for h, w in sizes:
        for i, j in PHASES:
            if not set_equals(phase_class_via_mu(h, w, i, j), phase_class_by_position(h, w, i, j)):
                return CheckResult("phase-equivalence", claim, False, f"{h}x{w} at ({i},{j})")
    return CheckResult("phase-equivalence", claim, True)


def run_suite(suite: str, *, max_size: int = 6, brute_max: int = 25, seq_max: int = 100_000) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    plan = []
    if suite in ("table1", "all"):
        plan += [check_table1, check_closed_form_table1]
    if suite in ("lemmas", "all"):
        plan += [
            check_plateau_examples,
            lambda: check_plateau_stability(max_size),
            lambda: check_inclusion(max_size),
            lambda: check_partition(max_size),
            check_extension,
            check_phase_equivalence,
        ]
    if suite in ("crosscheck", "all"):
        plan += [
            lambda: check_three_way(seq_max),
            lambda: check_brute_vs_recursion(1, brute_max),
            lambda: check_b_equals_c(12, seq_max),
            check_float_trap,
        ]
    results = []
    for check in plan:
        result = check()
        log.info(result.line())
        results.append(result)
    return results
