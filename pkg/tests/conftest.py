import numpy as np
import pytest

from squiral.substitution import squiral_rule

_ACCEPTANCE = []


def cell_of_supertile(n, r, c):
    """Cell (r, c) of T_n (1-based) read off the base-3 digits of r-1 and c-1.

    Walks from the seed down through the n levels of block structure, so it
    never builds a grid and shares no code with ``inflate``.
    """
    images = squiral_rule().images()
    r0, c0 = r - 1, c - 1
    symbol = 0
    for level in range(n - 1, -1, -1):
        a = (r0 // 3**level) % 3
        b = (c0 // 3**level) % 3
        symbol = int(images[symbol, a, b])
    return symbol


def naive_windows(cells, h, w):
    """Set of h x w windows of a 2D 0/1 array, as tuples of row tuples."""
    cells = np.asarray(cells)
    rows, cols = cells.shape
    out = set()
    for r in range(rows - h + 1):
        for c in range(cols - w + 1):
            out.add(tuple(map(tuple, cells[r : r + h, c : c + w].tolist())))
    return out


@pytest.fixture
def acceptance_report():
    def record(number, description, passed):
        _ACCEPTANCE.append((number, description, passed))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed in sorted(_ACCEPTANCE):
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {mark}  {description}")
