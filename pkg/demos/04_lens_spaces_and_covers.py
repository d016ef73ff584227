"""
Lens spaces, plumbings and branched covers
==========================================
"""

from swforge.alexander import alexander
from swforge.geography import LensSpace, blowdown_chain, chain_boundary, lens_equiv
from swforge.knots import parse_presentation
from swforge.laurent import LaurentPoly, format_poly
from swforge.sw import cover_sw, pair_product_sw

# boundaries of the rational-blowdown chains
for n in range(4, 9):
    ch = blowdown_chain(n)
    lens = chain_boundary(ch)
    target = LensSpace((n - 1) ** 2, -n)
    print(list(ch.framings), lens, "~", target, lens_equiv(lens, target))

# the double branched covers of K(105/64) and K(105/76) differ
print("L(105,64) ~ L(105,76):", lens_equiv(LensSpace(105, 64), LensSpace(105, 76)))

# but the SW polynomial of the pair product is shared
d = alexander(parse_presentation("K(105/64)"))
prod = pair_product_sw(d)
print("D(t)D(-t) =", format_poly(prod))
print("value at 1:", prod.evaluate({"t": 1}))

# cover formula for a two-variable link polynomial
hopf = LaurentPoly.monomial({"t1": 0.5, "t2": 0.5}) - LaurentPoly.monomial({"t1": -0.5, "t2": -0.5})
c = cover_sw(hopf, 2)
print(format_poly(c), "at ones:", c.evaluate({"t1": 1, "t2": 1}))
