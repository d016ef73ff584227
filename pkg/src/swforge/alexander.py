"""Symmetrized Alexander polynomials.

Three independent routes are provided so they can check each other:

* the reduced Burau representation of a braid (:func:`alexander_from_braid`),
* closed forms for torus and 2-bridge knots,
* bottom-up evaluation of a skein resolution tree.

Every knot polynomial returned here is normalized so that ``D(1/t) = D(t)``
and ``D(1) = 1``.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

from .knots import (
    BraidWord,
    KnotPresentation,
    SkeinNode,
    SplitLink,
    TorusKnotParams,
    TwoBridgeParams,
    Unknot,
    closure_components,
)
from .laurent import LaurentError, LaurentPoly, exact_div, normalize_symmetric

T = "t"


class AlexanderError(ValueError):
    pass


def _t(k=1, c=1) -> LaurentPoly:
    return LaurentPoly.var(T, k, c)


ONE = LaurentPoly.const(1, (T,))
ZERO = LaurentPoly.zero((T,))
# t^(1/2) - t^(-1/2), the skein factor
SKEIN_Z = LaurentPoly.from_dict(T, {Fraction(1, 2): 1, Fraction(-1, 2): -1})


# ---------------------------------------------------------------------------
# matrices over Z[t, 1/t]

class BurauMatrix:
    """Square matrix with single-variable Laurent polynomial entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[LaurentPoly]]):
        self.rows = tuple(tuple(r) for r in rows)
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> BurauMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: BurauMatrix) -> BurauMatrix:
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return BurauMatrix(out)

    def __sub__(self, other: BurauMatrix) -> BurauMatrix:
        return BurauMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __eq__(self, other) -> bool:
        return isinstance(other, BurauMatrix) and self.rows == other.rows

    def __repr__(self):
        return "BurauMatrix([" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "])"

    def det(self) -> LaurentPoly:
        """Determinant by fraction-free (Bareiss) elimination."""
        n = self.size
        if n == 0:
            return ONE
        m = [list(r) for r in self.rows]
        sign = 1
        prev = ONE
        for k in range(n - 1):
            if m[k][k].is_zero():
                for i in range(k + 1, n):
                    if not m[i][k].is_zero():
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return ZERO
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
            prev = m[k][k]
        return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def _generator(n: int, i: int, inverse: bool) -> BurauMatrix:
    """Reduced Burau image of s_i^(+-1) on n strands, an (n-1)x(n-1) matrix."""
    size = n - 1
    rows = [[ONE if r == c else ZERO for c in range(size)] for r in range(size)]
    r = i - 1
    if not inverse:
        if r - 1 >= 0:
            rows[r][r - 1] = _t()
        rows[r][r] = _t(1, -1)
        if r + 1 < size:
            rows[r][r + 1] = ONE
    else:
        if r - 1 >= 0:
            rows[r][r - 1] = ONE
        rows[r][r] = _t(-1, -1)
        if r + 1 < size:
            rows[r][r + 1] = _t(-1)
    return BurauMatrix(rows)


def burau_reduced(b: BraidWord) -> BurauMatrix:
    """Product of reduced Burau images over the letters of ``b``."""
    m = BurauMatrix.identity(b.strands - 1)
    cache: dict[int, BurauMatrix] = {}
    for x in b.letters:
        if x not in cache:
            cache[x] = _generator(b.strands, abs(x), x < 0)
        m = m @ cache[x]
    return m


def alexander_from_braid(b: BraidWord) -> LaurentPoly:
    if closure_components(b) != 1:
        raise AlexanderError(f"closure of {b} is a {closure_components(b)}-component link, not a knot")
    m = burau_reduced(b)
    d = (m - BurauMatrix.identity(m.size)).det() * (_t() - 1)
    try:
        d = exact_div(d, _t(b.strands) - 1)
    except LaurentError as exc:
        raise AssertionError(f"Burau normalization failed for {b}: {exc}") from exc
    return normalize_symmetric(d)


# ---------------------------------------------------------------------------
# closed forms

def alexander_torus(p: int, q: int) -> LaurentPoly:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized."""
    tk = TorusKnotParams(p, q)
    p, q = tk.p, tk.q
    num = (_t(p * q) - 1) * (_t() - 1)
    den = (_t(p) - 1) * (_t(q) - 1)
    return normalize_symmetric(exact_div(num, den))


def alexander_two_bridge(tb: TwoBridgeParams) -> LaurentPoly:
    """Alternating state sum over k = 0..alpha-1 of (-1)^k t^(N_k).

    ``N_k`` is the partial sum of ``(-1)^floor(i*beta/alpha)`` for
    ``i = 1..k``.  The sum needs ``beta`` odd; an even ``beta`` is replaced
    by ``beta + alpha``, which names the same knot.
    """
    a, b = tb.alpha, tb.beta
    if b % 2 == 0:
        b += a
    counts: Counter[int] = Counter()
    n = 0
    for k in range(a):
        if k:
            n += -1 if (k * b // a) % 2 else 1
        counts[n] += -1 if k % 2 else 1
    return normalize_symmetric(LaurentPoly.from_dict(T, dict(counts)))


# ---------------------------------------------------------------------------
# skein trees

Resolver = Callable[[KnotPresentation], LaurentPoly]


def skein_evaluate(tree, resolve: Resolver | None = None) -> LaurentPoly:
    """Evaluate a resolution tree bottom-up with the skein relation.

    ``Unknot`` is 1, a split link is 0, a ``+`` node is
    ``D(flip) + z D(zero)`` and a ``-`` node is ``D(flip) - z D(zero)`` with
    ``z = t^(1/2) - t^(-1/2)``.  Other presentations at the leaves go through
    ``resolve`` (default :func:`alexander`).
    """
    if resolve is None:
        resolve = alexander
    if isinstance(tree, Unknot):
        return ONE
    if isinstance(tree, SplitLink):
        return ZERO
    if isinstance(tree, SkeinNode):
        flip = skein_evaluate(tree.flip, resolve)
        zero = skein_evaluate(tree.zero, resolve)
        return flip + tree.sign * (SKEIN_Z * zero)
    try:
        return resolve(tree)
    except (AlexanderError, LaurentError) as exc:
        raise AlexanderError(f"cannot resolve leaf {tree}: {exc}") from None


def alexander(pres: KnotPresentation) -> LaurentPoly:
    """Symmetrized Alexander polynomial by the natural route for ``pres``."""
    if isinstance(pres, BraidWord):
        return alexander_from_braid(pres)
    if isinstance(pres, TorusKnotParams):
        return alexander_torus(pres.p, pres.q)
    if isinstance(pres, TwoBridgeParams):
        return alexander_two_bridge(pres)
    if isinstance(pres, (SkeinNode, Unknot, SplitLink)):
        d = skein_evaluate(pres)
        if d.is_zero():
            return d
        return normalize_symmetric(d) if not d.is_constant() else d
    raise TypeError(f"not a knot presentation: {pres!r}")


def all_routes(pres: KnotPresentation) -> dict[str, LaurentPoly]:
    """Every route that applies to ``pres``, keyed by route name."""
    routes: dict[str, LaurentPoly] = {}
    if isinstance(pres, BraidWord):
        routes["burau"] = alexander_from_braid(pres)
    elif isinstance(pres, TorusKnotParams):
        routes["torus"] = alexander_torus(pres.p, pres.q)
        routes["burau"] = alexander_from_braid(pres.braid())
    elif isinstance(pres, TwoBridgeParams):
        routes["two_bridge"] = alexander_two_bridge(pres)
    else:
        routes["skein"] = alexander(pres)
    return routes


# ---------------------------------------------------------------------------
# predicates

def normalized_alexander(d: LaurentPoly) -> LaurentPoly:
    """``t^deg * D``, an ordinary polynomial with nonzero constant term."""
    if d.is_zero():
        raise AlexanderError("zero polynomial")
    if d.is_constant():
        return d
    v = d._only_var()
    return d.shift({v: d.degree(v)})


def _single_var(d: LaurentPoly) -> str:
    if d.is_zero():
        raise AlexanderError("zero polynomial")
    if d.is_constant():
        return T
    return d._only_var()


def is_monic(d: LaurentPoly) -> bool:
    v = _single_var(d)
    return abs(d.top_coefficient(v)) == 1


def is_a_polynomial(p: LaurentPoly) -> bool:
    """Symmetric integer Laurent polynomial with value +-1 at t = 1."""
    if p.is_zero():
        raise AlexanderError("zero polynomial")
    try:
        _single_var(p)
    except LaurentError:
        return False
    if not p.is_integral() or p.bar() != p:
        return False
    return p.evaluate({v: 1 for v in p.vars}) in (1, -1)


class GenusCheck(str, Enum):
    MAXIMAL = "maximal"
    SUBMAXIMAL = "submaximal"
    VIOLATION = "violation"


def degree_genus_check(d: LaurentPoly, g: int) -> GenusCheck:
    v = _single_var(d)
    deg = d.degree(v)
    if deg == g:
        return GenusCheck.MAXIMAL
    if deg < g:
        return GenusCheck.SUBMAXIMAL
    return GenusCheck.VIOLATION
