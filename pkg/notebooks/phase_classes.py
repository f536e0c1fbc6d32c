"""
Phase classes
=============

Every window of a large supertile sits at one of nine offsets relative to the
3x3 block grid. Grouping windows by offset splits the pattern set.
"""

from squiral.complexity import (
    PHASES,
    brute_force_triple,
    phase_class_via_mu,
    phase_classes,
    verify_partition,
)

for h, w in [(4, 4), (5, 5), (4, 5)]:
    sizes = {ij: len(c) for ij, c in phase_classes(h, w).items()}
    print(f"{h}x{w}", sizes, sum(sizes.values()), verify_partition(h, w))

print(brute_force_triple(5))

# too small: a 2x2 window can sit at two offsets at once
print(verify_partition(2, 2))

# one offset class of a 5x5 window equals a class of 9x9 windows
print(len(phase_class_via_mu(5, 5, 3, 3)), len(phase_class_via_mu(9, 9, 1, 1)))
print([len(phase_class_via_mu(4, 4, i, j)) for i, j in PHASES])
