import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import PRINTED_105, t_poly
from oracles import leibniz_det
from swforge.alexander import (
    AlexanderError,
    BurauMatrix,
    GenusCheck,
    alexander,
    alexander_from_braid,
    alexander_torus,
    alexander_two_bridge,
    all_routes,
    burau_reduced,
    degree_genus_check,
    is_a_polynomial,
    is_monic,
    normalized_alexander,
    skein_evaluate,
)
from swforge.knots import BraidWord, TorusKnotParams, TwoBridgeParams, parse_presentation
from swforge.laurent import LaurentPoly

TREFOIL = {-1: 1, 0: -1, 1: 1}
FIG8 = {-1: -1, 0: 3, 1: -1}
FIVE_TWO = {-1: 2, 0: -3, 1: 2}


def braid(text):
    return parse_presentation(text)


# --- Burau -----------------------------------------------------------------------

def test_burau_two_strands():
    assert burau_reduced(braid("B(2: 1)")).rows == ((t_poly({1: -1}),),)
    assert burau_reduced(braid("B(2: 1 1 1)")).rows == ((t_poly({3: -1}),),)


def test_burau_braid_relation():
    assert burau_reduced(braid("B(3: 1 2 1)")) == burau_reduced(braid("B(3: 2 1 2)"))


@st.composite
def braid_words(draw, n):
    gens = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return draw(st.lists(gens, max_size=8))


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 5).flatmap(lambda n: st.tuples(st.just(n), braid_words(n), braid_words(n))),
       st.data())
def test_burau_is_a_representation(args, data):
    n, u, v = args
    mu, mv = burau_reduced(BraidWord(n, u)), burau_reduced(BraidWord(n, v))
    assert burau_reduced(BraidWord(n, u + v)) == mu @ mv
    i = data.draw(st.integers(1, n - 1))
    assert burau_reduced(BraidWord(n, u + [i, -i] + v)) == mu @ mv
    j = data.draw(st.integers(1, n - 2))
    assert burau_reduced(BraidWord(n, u + [j, j + 1, j] + v)) == \
        burau_reduced(BraidWord(n, u + [j + 1, j, j + 1] + v))
    if n >= 4:
        k = data.draw(st.integers(1, n - 1))
        m = data.draw(st.integers(1, n - 1))
        if abs(k - m) >= 2:
            assert burau_reduced(BraidWord(n, [k, m])) == burau_reduced(BraidWord(n, [m, k]))


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 5).flatmap(lambda n: st.tuples(st.just(n), braid_words(n))))
def test_bareiss_matches_leibniz(args):
    n, word = args
    m = burau_reduced(BraidWord(n, word)) - BurauMatrix.identity(n - 1)
    as_dicts = [[{e // 2: c for e, c in entry.coeffs2("t").items()} if not entry.is_zero() else {}
                 for entry in row] for row in m.rows]
    expected = leibniz_det(as_dicts)
    got = m.det()
    assert {e // 2: c for e, c in got.coeffs2("t").items()} if not got.is_zero() else {} == expected


def test_alexander_from_braid_examples():
    assert alexander_from_braid(braid("B(2: 1 1 1)")) == t_poly(TREFOIL)
    assert alexander_from_braid(braid("B(2: 1)")) == 1
    assert alexander_from_braid(braid("B(3: 1 -2 1 -2)")) == t_poly(FIG8)
    assert alexander_from_braid(braid("B(3: 1 1 1 2 -1 2)")) == t_poly(FIVE_TWO)


def test_alexander_from_braid_rejects_links():
    with pytest.raises(AlexanderError):
        alexander_from_braid(braid("B(2: 1 1)"))


# --- closed forms ------------------------------------------------------------------

def test_torus_examples():
    assert alexander_torus(2, 3) == alexander_from_braid(braid("B(2: 1 1 1)"))
    assert alexander_torus(2, 5) == t_poly({2: 1, 1: -1, 0: 1, -1: -1, -2: 1})
    with pytest.raises(ValueError):
        alexander_torus(2, 4)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(2, 10) for q in range(p + 1, 10)
                                 if __import__("math").gcd(p, q) == 1])
def test_torus_degree_is_genus(p, q):
    d = alexander_torus(p, q)
    assert d.degree("t") == (p - 1) * (q - 1) // 2
    assert d.bar() == d and d.evaluate({"t": 1}) == 1


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5)])
def test_torus_closed_form_matches_burau(p, q):
    assert alexander_torus(p, q) == alexander_from_braid(TorusKnotParams(p, q).braid())


def test_two_bridge_examples():
    assert alexander_two_bridge(TwoBridgeParams(3, 1)) == alexander_torus(2, 3)
    assert alexander_two_bridge(TwoBridgeParams(5, 3)) == t_poly(FIG8)
    assert alexander_two_bridge(TwoBridgeParams(7, 3)) == t_poly(FIVE_TWO)
    assert alexander_two_bridge(TwoBridgeParams(105, 64)) == t_poly(PRINTED_105)
    assert alexander_two_bridge(TwoBridgeParams(105, 76)) == t_poly(PRINTED_105)


@pytest.mark.parametrize("a,b", [(5, 3), (7, 3), (9, 2), (11, 4), (13, 5), (105, 64), (105, 76), (105, 41)])
def test_two_bridge_inverse_beta(a, b):
    b_inv = pow(b, -1, a)
    assert alexander_two_bridge(TwoBridgeParams(a, b)) == alexander_two_bridge(TwoBridgeParams(a, b_inv))
    # mirror image has the same polynomial
    assert alexander_two_bridge(TwoBridgeParams(a, b)) == alexander_two_bridge(TwoBridgeParams(a, a - b))


def test_two_bridge_torus_family():
    # K(2n+1, 1) is the torus knot T(2, 2n+1)
    for n in range(1, 8):
        assert alexander_two_bridge(TwoBridgeParams(2 * n + 1, 1)) == alexander_torus(2, 2 * n + 1)


def test_64_is_self_inverse_mod_105():
    assert 64 * 64 % 105 == 1


def test_two_bridge_determinant():
    # |D(-1)| = alpha for every 2-bridge knot
    for a in range(3, 40, 2):
        for b in range(1, a):
            if __import__("math").gcd(a, b) == 1:
                d = alexander_two_bridge(TwoBridgeParams(a, b))
                assert abs(d.evaluate({"t": -1})) == a


# --- skein ------------------------------------------------------------------------

def test_skein_examples():
    z = t_poly({0.5: 1, -0.5: -1})
    assert skein_evaluate(parse_presentation("(+ S(2) U)")) == z
    assert skein_evaluate(parse_presentation("(+ U (+ S(2) U))")) == alexander_torus(2, 3)
    assert skein_evaluate(parse_presentation("U")) == 1
    assert skein_evaluate(parse_presentation("(- U (+ S(2) U))")) == t_poly(FIG8)
    assert skein_evaluate(parse_presentation("(+ U (+ (+ S(2) U) U))")) == t_poly(FIVE_TWO)


def test_skein_nested_presentation_leaves():
    tree = parse_presentation("(+ T(2,3) (+ (+ S(2) U) T(2,3)))")
    assert skein_evaluate(tree) == alexander_torus(2, 5)


def test_skein_unresolvable_leaf():
    with pytest.raises(AlexanderError):
        skein_evaluate(parse_presentation("(+ B(2: 1 1) U)"))


def test_skein_knot_root_has_integer_exponents():
    for text in ["(+ U (+ S(2) U))", "(- U (+ S(2) U))", "(+ T(2,3) (+ (+ S(2) U) T(2,3)))"]:
        tree = parse_presentation(text)
        assert skein_evaluate(tree).is_integral()
        # the link-labelled subtree is where half-integers live
        assert not skein_evaluate(tree.zero).is_integral()


def test_all_routes_agree():
    for text in ["T(2,3)", "T(3,4)", "T(2,7)", "K(5/3)", "B(3: 1 -2 1 -2)"]:
        routes = all_routes(parse_presentation(text))
        values = list(routes.values())
        assert all(v == values[0] for v in values)


def test_alexander_dispatch(delta_105):
    assert alexander(parse_presentation("K(105/64)")) == delta_105
    assert alexander(parse_presentation("U")) == 1
    with pytest.raises(TypeError):
        alexander("T(2,3)")


# --- predicates --------------------------------------------------------------------

def test_normalized_alexander(delta_105):
    assert normalized_alexander(t_poly(TREFOIL)) == t_poly({2: 1, 1: -1, 0: 1})
    assert normalized_alexander(LaurentPoly.const(1)) == 1
    a = normalized_alexander(delta_105)
    assert a.degree("t") == 8 and a.min_degree("t") == 0 and a.coeff({"t": 0}) == 1
    with pytest.raises(AlexanderError):
        normalized_alexander(LaurentPoly.zero())


def test_predicates(delta_105):
    assert is_monic(delta_105)
    assert not is_monic(t_poly(FIVE_TWO))
    assert is_a_polynomial(t_poly(TREFOIL))
    assert not is_a_polynomial(t_poly({1: 1, 0: 1, -1: 1}))
    assert not is_a_polynomial(t_poly({1: 1, 0: -1}))
    assert degree_genus_check(alexander_torus(2, 5), 2) is GenusCheck.MAXIMAL
    assert degree_genus_check(alexander_torus(2, 5), 3) is GenusCheck.SUBMAXIMAL
    assert degree_genus_check(alexander_torus(2, 5), 1) is GenusCheck.VIOLATION
    with pytest.raises(AlexanderError):
        is_monic(LaurentPoly.zero())
