"""
Squiral supertiles
==================

Iterate the substitution from a single 0 and look at the first few levels.
"""

import numpy as np

from squiral import complement, inflate, squiral_rule, supertile

# the two 3x3 images: 0 -> corners, 1 -> a plus sign
rule = squiral_rule()
print(rule.image0.to_text(), end="\n\n")
print(rule.image1.to_text(), end="\n\n")

for n in range(3):
    print(f"T_{n}")
    print(supertile(n).to_text(), end="\n\n")

# the centre ninth of T_3 is T_2, the corners are its complement
t3, t2 = supertile(3), supertile(2)
print(t3.subgrid(10, 10, 9, 9) == t2, t3.subgrid(1, 1, 9, 9) == complement(t2))

# grids are stored as packed bits, 1/8 byte per cell
t9 = supertile(9)
print(t9.shape, t9.nbytes, "bytes")

# density of 1s settles quickly
for n in range(1, 8):
    print(n, round(float(np.mean(supertile(n).to_array())), 6))

# inflate works on any grid, not just supertiles
g = inflate(supertile(1).subgrid(1, 1, 2, 2))
print(g.to_text())
