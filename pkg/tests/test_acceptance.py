"""Acceptance criteria 1-10, one test each.

Every test records its outcome through ``acceptance_report``; the terminal
summary then prints one PASS/FAIL line per criterion.
"""
import math

import pytest

from squiral import cli, config
from squiral.complexity import (
    PHASES,
    brute_force_triple,
    phase_class_by_position,
    phase_class_via_mu,
    phase_classes,
    verify_extension,
    verify_partition,
)
from squiral.pattern import PatternSet, enumerate_windows, set_equals
from squiral.sequences import (
    closed_form_A,
    closed_form_params,
    recursion_triple,
    simplified_recursion_A,
)
from squiral.substitution import supertile

TABLE_A = [2, 14, 70, 126, 270, 438, 630, 790, 958, 1134]
TABLE_BC = [4, 36, 96, 192, 348, 528, 708, 872, 1044, 1332]


def test_criterion_01_table_by_brute_force(acceptance_report):
    got = [brute_force_triple(n) for n in range(1, 11)]
    ok = [t.A for t in got] == TABLE_A and [t.B for t in got] == TABLE_BC == [t.C for t in got]
    acceptance_report(1, "brute force reproduces the initial-terms table, n = 1..10", ok)
    assert ok


def test_criterion_02_closed_form_table(acceptance_report):
    ok = [closed_form_A(n) for n in range(1, 11)] == TABLE_A
    acceptance_report(2, "closed form reproduces A_1..A_10", ok)
    assert ok


def test_criterion_03_three_way_agreement(acceptance_report):
    bad = [
        n for n in range(1, 100_001)
        if not closed_form_A(n) == recursion_triple(n).A == simplified_recursion_A(n)
    ]
    acceptance_report(3, "closed form = recursion = simplified recursion, n <= 100000", not bad)
    assert not bad, bad[:5]


def test_criterion_04_brute_force_beyond_table(acceptance_report):
    bad = [n for n in range(11, 26) if brute_force_triple(n) != recursion_triple(n)]
    acceptance_report(4, "brute force = recursion componentwise, n = 11..25", not bad)
    assert not bad


@pytest.mark.slow
def test_criterion_04_stretch_to_40(acceptance_report):
    bad = [n for n in range(26, 41) if brute_force_triple(n) != recursion_triple(n)]
    acceptance_report(4, "stretch: brute force = recursion, n = 26..40", not bad)
    assert not bad


def test_criterion_05_plateau_certificates(acceptance_report):
    p2 = [enumerate_windows(supertile(k), 2, 2) for k in (2, 3)]
    p4 = [enumerate_windows(supertile(k), 4, 4) for k in (3, 4)]
    ok = (
        set_equals(*p2) and len(p2[0]) == 14
        and set_equals(*p4) and len(p4[0]) == 126
    )
    acceptance_report(5, "2x2 plateau at 14 (T_2 = T_3), 4x4 plateau at 126 (T_3 = T_4)", ok)
    assert ok


def test_criterion_06_partition(acceptance_report):
    classes = list(phase_classes(4, 4).values())
    union = PatternSet(4, 4)
    for c in classes:
        union = union | c
    disjoint = all(classes[a].isdisjoint(classes[b]) for a in range(9) for b in range(a + 1, 9))
    ok = (
        [len(c) for c in classes] == [14] * 9
        and disjoint
        and len(union) == 126
        and verify_partition(5, 5)
        and verify_partition(4, 5)
        and sum(len(c) for c in phase_classes(5, 5).values()) == brute_force_triple(5).A
        and sum(len(c) for c in phase_classes(4, 5).values()) == brute_force_triple(4).B
    )
    acceptance_report(6, "nine disjoint phase classes partition the 4x4, 5x5 and 4x5 sets", ok)
    assert ok


def test_criterion_07_extension(acceptance_report):
    ok = (
        len(phase_class_via_mu(5, 5, 3, 3)) == len(phase_class_via_mu(9, 9, 1, 1))
        and all(verify_extension(0, 0, i, j) for i, j in PHASES)
        and verify_extension(1, 1, 3, 3)
    )
    acceptance_report(7, "extension holds for all phases at s = t = 0 and for (3,3) at s = t = 1", ok)
    assert ok


def test_criterion_08_b_equals_c(acceptance_report):
    brute_ok = all(t.B == t.C for t in (brute_force_triple(n) for n in range(1, 13)))
    rec_ok = all(t.B == t.C for t in (recursion_triple(n) for n in range(1, 100_001)))
    ok = brute_ok and rec_ok
    acceptance_report(8, "B = C by brute force (n <= 12) and by recursion (n <= 100000)", ok)
    assert ok


def test_criterion_09_float_trap(acceptance_report):
    naive_alpha = math.floor(math.log(245 - 2) / math.log(3))
    ok = (
        naive_alpha == 4
        and closed_form_params(245).alpha == 5
        and closed_form_A(245) == recursion_triple(245).A
    )
    acceptance_report(9, "exact alpha(245) = 5 where double-precision log gives 4", ok)
    assert ok


def test_criterion_10_phase_constructions_agree(acceptance_report):
    ok = all(
        set_equals(phase_class_via_mu(h, w, i, j), phase_class_by_position(h, w, i, j))
        for h, w in ((4, 4), (5, 5), (4, 5))
        for i, j in PHASES
    )
    acceptance_report(10, "mu-image cutting and phase-restricted windows give equal classes", ok)
    assert ok


def test_all_criteria_run_from_the_cli(capsys):
    saved = config.limits
    try:
        code = cli.main(["verify", "--suite", "all"])
    finally:
        config.limits = saved
    out = capsys.readouterr().out
    assert code == 0, out
    assert "FAIL" not in out
