"""
Counting windows
================

Collect the distinct h x w windows of a supertile and watch the count stop
growing once the supertile is big enough.
"""

from squiral import enumerate_windows, saturated_pattern_set, set_equals, supertile

for n in range(1, 6):
    print(n, [len(enumerate_windows(supertile(n), m, m)) for m in range(1, 6)])

# the 2x2 set is already complete in T_2
print(set_equals(enumerate_windows(supertile(2), 2, 2), enumerate_windows(supertile(3), 2, 2)))

# the saturation search does the same thing automatically and reports the level
for h, w in [(2, 2), (4, 4), (4, 5), (7, 7), (12, 12)]:
    sat = saturated_pattern_set(h, w)
    print(f"{h}x{w}: {sat.cardinality} patterns, plateau from T_{sat.level}, certified={sat.certified}")

# a pattern key turns back into its cells
key = next(iter(saturated_pattern_set(3, 3).patterns))
print(key.to_grid().to_text())
