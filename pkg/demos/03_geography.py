"""
Fiber-sum geography
===================

Characteristic numbers of fiber sums of Brieskorn pieces, and where they sit
against the Noether line c1^2 >= 2 chi - 6.
"""

from swforge.geography import (char_from_en, elliptic_self_sum_note, fiber_sum_geography,
                               noether_check, r_value)

# the torus-knot pair family with the r-values as given
print(" n  c1sq  chi  margin")
for n in range(3, 13):
    if n % 3 == 2:
        continue
    cn = fiber_sum_geography(n, r_value(2, 2 * n + 1), r_value(3, n + 1))
    print(f"{n:2d}  {cn.c1sq:4d}  {cn.chi:3d}  {noether_check(cn).margin:6d}")

# self fiber sum of Z(2,2n+1) against E(n+1): the c1^2 values do not line up
print(elliptic_self_sum_note(4))

# with r(2,2n+1) = 4n+5 both the self-sum and the pair land where expected
n = 4
print("self-sum c1sq:", fiber_sum_geography(n, 4 * n + 5, 4 * n + 5).c1sq, "E(n+1):", char_from_en(n + 1).c1sq)
print("pair c1sq:", fiber_sum_geography(n, 4 * n + 5, 3 * n + 7).c1sq)
