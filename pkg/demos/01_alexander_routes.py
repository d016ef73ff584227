"""
Alexander polynomials three ways
================================

Compute the same knot invariant from a braid, from a closed form and from
a skein resolution tree, and check they agree.
"""

from swforge.alexander import all_routes, alexander_two_bridge, skein_evaluate
from swforge.knots import TwoBridgeParams, parse_presentation
from swforge.laurent import format_poly

# the figure-eight knot as a 3-braid, a 2-bridge knot and a resolution tree
for text in ["B(3: 1 -2 1 -2)", "K(5/3)", "(- U (+ S(2) U))"]:
    pres = parse_presentation(text)
    for route, delta in all_routes(pres).items():
        print(f"{text:20s} {route:10s} {format_poly(delta)}")

# torus knots: closed form and Burau agree, and the degree is the genus
for p, q in [(2, 5), (3, 4), (3, 5)]:
    routes = all_routes(parse_presentation(f"T({p},{q})"))
    d = routes["torus"]
    print(f"T({p},{q})", routes["torus"] == routes["burau"], d.degree("t"), (p - 1) * (q - 1) // 2)

# the pair of 2-bridge knots with a common polynomial
a = alexander_two_bridge(TwoBridgeParams(105, 64))
b = alexander_two_bridge(TwoBridgeParams(105, 76))
print("K(105/64):", format_poly(a))
print("same polynomial:", a == b)

# a tree node whose zero-resolution is a link carries half-integer exponents
print("Hopf link:", format_poly(skein_evaluate(parse_presentation("(+ S(2) U)"))))
