"""
A_n three ways
==============

Compare the closed form, the recursion and the brute-force count, and see
why the floor-log has to be done in integers.
"""

import math

from squiral import (
    brute_force_triple,
    closed_form_A,
    closed_form_params,
    recursion_triple,
    sequence_table,
    simplified_recursion_A,
)

for t in sequence_table(12):
    print(t.n, t.A, t.B, t.C)

for n in (11, 17, 25):
    print(n, brute_force_triple(n).A, recursion_triple(n).A, closed_form_A(n))

# log(243)/log(3) lands just below 5 in doubles
print(math.log(243) / math.log(3))
print(math.floor(math.log(243) / math.log(3)), closed_form_params(245).alpha)
print(closed_form_A(245), recursion_triple(245).A)

# big n costs nothing: the recursion only visits O(log n) arguments
n = 10**50 + 7
print(closed_form_A(n) == simplified_recursion_A(n) == recursion_triple(n).A)

# growth is quadratic-ish: A_n / n^2 wanders in a band
for n in (10, 100, 1000, 10**6):
    print(n, closed_form_A(n) / n**2)
