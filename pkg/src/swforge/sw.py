"""Seiberg-Witten and Gromov invariants as Laurent polynomials.

A homology class ``beta`` is recorded only through its formal variable
``t_beta = exp(beta)``; exponents add when classes add.  Variable names used
by default:

``tF``  fiber class of an elliptic surface
``tT``  class of the torus used for knot surgery
``r``   rim torus class
``t1, t2, ...``  classes in branched covers
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from math import comb

from .alexander import is_a_polynomial, is_monic, normalized_alexander
from .laurent import LaurentPoly


class SWError(ValueError):
    pass


class SymmetryError(SWError):
    pass


@dataclass(frozen=True)
class ManifoldMeta:
    e: int
    sign: int
    b_plus: int
    simply_connected: bool = True
    spin: bool = False

    def __post_init__(self):
        if (self.e + self.sign) % 4:
            raise SWError(f"e + sign = {self.e + self.sign} is not divisible by 4")
        # chi_h = (e + sign)/4 = (b_plus + 1)/2 for simply connected manifolds
        if self.simply_connected and (self.e + self.sign) // 2 != self.b_plus + 1:
            raise SWError(
                f"inconsistent simply connected metadata: (e+sign)/4 = {(self.e + self.sign) // 4}"
                f" but (b_plus+1)/2 = {(self.b_plus + 1) / 2}"
            )

    @property
    def symmetry_exponent(self) -> int:
        """(e + sign)/4; SW(-b) = (-1)^this * SW(b)."""
        return (self.e + self.sign) // 4

    def to_json(self) -> dict:
        return {"e": self.e, "sign": self.sign, "b_plus": self.b_plus,
                "spin": self.spin, "simply_connected": self.simply_connected}

    @classmethod
    def from_json(cls, obj: dict) -> ManifoldMeta:
        return cls(int(obj["e"]), int(obj["sign"]), int(obj["b_plus"]),
                   bool(obj.get("simply_connected", True)), bool(obj.get("spin", False)))


def _symmetric_under(poly: LaurentPoly, parity: int) -> bool:
    target = poly.bar()
    return target == (-poly if parity % 2 else poly)


@dataclass(frozen=True)
class SWInvariant:
    """SW polynomial plus the metadata that fixes its symmetry law.

    Construction checks ``SW(-b) = (-1)^((e+sign)/4) SW(b)`` and raises
    :class:`SymmetryError` if it fails; :meth:`unchecked` skips the check.
    """

    meta: ManifoldMeta
    poly: LaurentPoly

    def __post_init__(self):
        if not _symmetric_under(self.poly, self.meta.symmetry_exponent):
            raise SymmetryError(f"{self.poly} violates SW(-b) = (-1)^{self.meta.symmetry_exponent} SW(b)")

    @classmethod
    def unchecked(cls, meta: ManifoldMeta, poly: LaurentPoly) -> SWInvariant:
        obj = object.__new__(cls)
        object.__setattr__(obj, "meta", meta)
        object.__setattr__(obj, "poly", poly)
        return obj

    def to_json(self) -> dict:
        out = self.poly.to_json()
        out["meta"] = self.meta.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict | str) -> SWInvariant:
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            meta = ManifoldMeta.from_json(obj["meta"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SWError(f"malformed SW metadata: {exc}") from None
        return cls(meta, LaurentPoly.from_json(obj))

    def __str__(self):
        return str(self.poly)


def check_symmetry(x: SWInvariant) -> bool:
    return _symmetric_under(x.poly, x.meta.symmetry_exponent)


def en_meta(n: int) -> ManifoldMeta:
    return ManifoldMeta(e=12 * n, sign=-8 * n, b_plus=2 * n - 1, simply_connected=True, spin=n % 2 == 0)


def sw_en(n: int, var: str = "tF") -> SWInvariant:
    """SW of the elliptic surface E(n): (t - 1/t)^(n-2) in the fiber class."""
    if n < 2:
        raise SWError(f"E(n) has b+ > 1 only for n >= 2, got {n}")
    base = LaurentPoly.var(var) - LaurentPoly.var(var, -1)
    return SWInvariant(en_meta(n), (base ** (n - 2)).with_vars([var]))


def en_coefficient(n: int, m: int) -> int:
    """Closed form for SW_E(n)((n-2m)F), m = 1..n-1."""
    return (-1) ** (m - 1) * comb(n - 2, m - 1)


# ---------------------------------------------------------------------------
# surgeries

def _check_alexander(delta: LaurentPoly) -> str | None:
    if delta.is_zero() or not is_a_polynomial(delta):
        raise SWError(f"{delta} is not a symmetrized knot Alexander polynomial")
    if delta.is_constant():
        return None
    return delta._only_var()


def _times(x: SWInvariant, factor: LaurentPoly) -> SWInvariant:
    names = set(x.poly.vars) | set(factor.vars)
    poly = x.poly.with_vars(names) * factor.with_vars(names)
    if not x.poly.is_constant():
        return SWInvariant(x.meta, poly)
    # a constant base carries no class information; keep only the torus variable
    return SWInvariant(x.meta, poly.trim())


def knot_surgery(x: SWInvariant, delta: LaurentPoly, torus_var: str = "tT") -> SWInvariant:
    """SW of X_K: multiply by D_K(t) with t = exp(2[T]), i.e. exponents doubled."""
    if x.meta.b_plus <= 1:
        raise SWError("knot surgery formula needs b+ > 1")
    v = _check_alexander(delta)
    factor = delta if v is None else delta.substitute({v: (torus_var, 2)})
    return _times(x, factor)


def rim_surgery(x: SWInvariant, delta: LaurentPoly, rim_var: str = "r") -> SWInvariant:
    """Same multiplication law as knot surgery, on the rim torus class."""
    return knot_surgery(x, delta, rim_var)


class SurfaceVerdict(str, Enum):
    DISTINGUISHED = "distinguished"
    INCONCLUSIVE = "inconclusive"


def distinguish_surfaces(d1: LaurentPoly, d2: LaurentPoly) -> SurfaceVerdict:
    """Rim-surgered surfaces with different Alexander polynomials are not
    diffeomorphic as pairs; equal polynomials decide nothing."""
    return SurfaceVerdict.INCONCLUSIVE if d1 == d2 else SurfaceVerdict.DISTINGUISHED


def gromov_knot_surgery(gr: LaurentPoly, delta: LaurentPoly, torus_var: str = "tT") -> LaurentPoly:
    """Gromov invariant of X_K for fibered K: multiply by A_K(tau), tau = exp([T]).

    No exponent doubling here, unlike :func:`knot_surgery`.
    """
    v = _check_alexander(delta)
    if not is_monic(delta):
        raise SWError(f"{delta} is not monic; the Gromov formula needs a fibered knot")
    a = normalized_alexander(delta)
    factor = a if v is None else a.substitute({v: (torus_var, 1)})
    names = set(gr.vars) | set(factor.vars)
    return gr.with_vars(names) * factor.with_vars(names)


class SymplecticVerdict(str, Enum):
    OBSTRUCTED = "obstructed"
    NO_VERDICT = "no_verdict"


def symplectic_obstruction(delta: LaurentPoly) -> SymplecticVerdict:
    """X_K has no symplectic structure when D_K is not monic."""
    return SymplecticVerdict.NO_VERDICT if is_monic(delta) else SymplecticVerdict.OBSTRUCTED


def link_surgery_sw(delta_l: LaurentPoly, meta: ManifoldMeta) -> SWInvariant:
    """Wrap a caller-supplied multivariable Alexander polynomial as an SW invariant."""
    return SWInvariant(meta, delta_l)


def cover_variables(alpha: int) -> list[str]:
    return [f"t{j}" for j in range(1, alpha + 1)]


def cover_sw(delta_l: LaurentPoly, alpha: int) -> LaurentPoly:
    """D_L(t1..t_alpha) times the product of (t_j^(1/2) - t_j^(-1/2))."""
    if alpha < 1:
        raise SWError(f"alpha must be positive, got {alpha}")
    if delta_l.is_constant():
        names = cover_variables(alpha)
    else:
        names = list(delta_l.vars)
        if len(names) != alpha:
            raise SWError(f"expected a polynomial in {alpha} variables, got {len(names)}: {tuple(names)}")
    result = delta_l.with_vars(names)
    for v in names:
        z = LaurentPoly.var(v, 0.5) - LaurentPoly.var(v, -0.5)
        result = result * z.with_vars(names)
    return result


def pair_product_sw(delta: LaurentPoly) -> LaurentPoly:
    """D(t) * D(-t)."""
    if not delta.is_integral():
        raise SWError("D(-t) is undefined with half-integer exponents")
    if delta.is_constant():
        return delta * delta
    v = delta._only_var()
    return delta * delta.substitute({v: (v, 1, True)})


# ---------------------------------------------------------------------------
# basic classes

@dataclass(frozen=True)
class BasicClassReport:
    classes: list[tuple[tuple, int]] = field(default_factory=list)
    count_mod_negation: int = 0
    vars: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "classes": [{"e2": list(e), "c": str(c)} for e, c in self.classes],
            "count": self.count_mod_negation,
        }


def basic_classes(x: SWInvariant | LaurentPoly) -> BasicClassReport:
    """Nonzero coefficients, counted up to b ~ -b."""
    poly = x.poly if isinstance(x, SWInvariant) else x
    orbits = set()
    for e, _ in poly.items():
        neg = tuple(-k for k in e)
        orbits.add(min(e, neg))
    return BasicClassReport(sorted(poly.items()), len(orbits), poly.vars)


@dataclass(frozen=True)
class ZKReport:
    maximal_degree: bool
    basic_class_count: int | None = None
    top_magnitude: int | None = None
    nonsymplectic: bool = False

    def to_json(self) -> dict:
        return {
            "maximal_degree": self.maximal_degree,
            "basic_class_count": self.basic_class_count,
            "top_magnitude": self.top_magnitude,
            "nonsymplectic": self.nonsymplectic,
        }


def z_k_analysis(delta: LaurentPoly, g: int) -> ZKReport:
    """Basic-class conclusions for Z_K, K of genus g with Alexander polynomial delta.

    When deg D = g, Z_K has one basic class k with |SW(k)| = |a_d| and is
    nonsymplectic if |a_d| > 1.  Below maximal degree nothing is concluded.
    """
    if g < 1:
        raise SWError(f"genus must be >= 1, got {g}")
    _check_alexander(delta)
    v = "t" if delta.is_constant() else delta._only_var()
    d = delta.degree(v)
    if d > g:
        raise SWError(f"degree {d} exceeds the genus bound {g}")
    if d < g:
        return ZKReport(maximal_degree=False)
    top = abs(delta.top_coefficient(v))
    return ZKReport(True, 1, top, top > 1)

