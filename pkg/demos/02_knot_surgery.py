"""
Knot surgery on elliptic surfaces
=================================

SW invariants are Laurent polynomials in class variables.  Knot surgery
multiplies by the Alexander polynomial with exponents doubled; the Gromov
version does not double.
"""

from swforge.alexander import alexander
from swforge.knots import parse_presentation
from swforge.sw import (basic_classes, check_symmetry, gromov_knot_surgery, knot_surgery,
                        sw_en, symplectic_obstruction, z_k_analysis)
from swforge.laurent import LaurentPoly

trefoil = alexander(parse_presentation("T(2,3)"))
k105 = alexander(parse_presentation("K(105/64)"))
five_two = alexander(parse_presentation("K(7/3)"))

# E(n) for a few n
for n in range(2, 7):
    print(f"SW E({n}) =", sw_en(n))

# K3 surgered along the trefoil
x = knot_surgery(sw_en(2), trefoil)
print("E(2)_trefoil:", x, "symmetric:", check_symmetry(x), "orbits:", basic_classes(x).count_mod_negation)

# scale 2 for SW, scale 1 for Gromov
print("Gromov:", gromov_knot_surgery(LaurentPoly.const(1), trefoil))

# the 105 knot gives 9 coefficients in 5 orbits
print("E(2)_K orbits:", basic_classes(knot_surgery(sw_en(2), k105)).count_mod_negation)

# 5_2 is not fibered: its polynomial is not monic
print("5_2:", symplectic_obstruction(five_two).value)
print("Z_K for 5_2, g = 1:", z_k_analysis(five_two, 1).to_json())
