"""Characteristic numbers, Noether screening, plumbing chains and lens spaces.

Conventions
-----------
* ``c1sq = 2e + 3 sign`` and ``chi = (e + sign)/4``; equivalently
  ``e = 12 chi - c1sq``.
* A linear plumbing with framings ``-a1, ..., -ak`` (all ``ai >= 2``) bounds
  ``L(p, q)`` with ``p/q = a1 - 1/(a2 - 1/(... - 1/ak))``.
* ``L(p, q)`` and ``L(p, q')`` are orientation-preservingly diffeomorphic iff
  ``q' = q^(+-1) mod p``, and diffeomorphic at all iff ``q' = +-q^(+-1) mod p``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional


class GeographyError(ValueError):
    pass


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


# ---------------------------------------------------------------------------
# characteristic numbers

@dataclass(frozen=True)
class CharNumbers:
    e: int
    sign: int
    c1sq: int
    chi: int
    b_plus: int
    parity: Optional[Parity] = None
    simply_connected: bool = True

    def __post_init__(self):
        if self.c1sq != 2 * self.e + 3 * self.sign:
            raise GeographyError(f"c1^2 = {self.c1sq} but 2e + 3 sign = {2 * self.e + 3 * self.sign}")
        if (self.e + self.sign) % 4 or self.chi != (self.e + self.sign) // 4:
            raise GeographyError(f"chi = {self.chi} but (e + sign)/4 = {Fraction(self.e + self.sign, 4)}")
        if self.simply_connected and 2 * self.chi != self.b_plus + 1:
            raise GeographyError(f"chi = {self.chi} but (b+ + 1)/2 = {Fraction(self.b_plus + 1, 2)}")

    @classmethod
    def from_e_sign(cls, e: int, sign: int, parity: Parity | None = None,
                    simply_connected: bool = True, b_plus: int | None = None) -> CharNumbers:
        if (e + sign) % 4:
            raise GeographyError(f"e + sign = {e + sign} is not divisible by 4")
        chi = (e + sign) // 4
        if b_plus is None:
            b_plus = 2 * chi - 1
        return cls(e, sign, 2 * e + 3 * sign, chi, b_plus, parity, simply_connected)

    @classmethod
    def from_c1sq_chi(cls, c1sq: int, chi: int, parity: Parity | None = None,
                      simply_connected: bool = True, b_plus: int | None = None) -> CharNumbers:
        e = 12 * chi - c1sq
        return cls.from_e_sign(e, 4 * chi - e, parity, simply_connected, b_plus)

    def to_json(self) -> dict:
        return {
            "e": self.e, "sign": self.sign, "c1sq": self.c1sq, "chi": self.chi,
            "b_plus": self.b_plus,
            "parity": self.parity.value if self.parity else None,
            "simply_connected": self.simply_connected,
        }


def char_from_en(n: int) -> CharNumbers:
    """Characteristic numbers of the elliptic surface E(n)."""
    if n < 1:
        raise GeographyError(f"E(n) needs n >= 1, got {n}")
    return CharNumbers.from_e_sign(12 * n, -8 * n, Parity.EVEN if n % 2 == 0 else Parity.ODD)


def genus_torus(p: int, q: int) -> int:
    """Genus (p-1)(q-1)/2 of the torus knot T(p,q)."""
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise GeographyError(f"T({p},{q}) is not a torus knot")
    return (p - 1) * (q - 1) // 2


def r_value(p: int, q: int) -> int:
    """Number of blowups r with Z(p,q) = CP2 # r(-CP2), for the two known families.

    ``r(2, 2n+1) = 4n + 4`` and ``r(3, n+1) = 3n + 7``.  Other pairs need the
    resolution graph of the Brieskorn singularity and must be supplied by hand.
    """
    if p > q:
        p, q = q, p
    if p < 2 or gcd(p, q) != 1:
        raise GeographyError(f"({p},{q}) is not a coprime torus-knot pair")
    if p == 2:
        n = (q - 1) // 2
        return 4 * n + 4
    if p == 3:
        n = q - 1
        return 3 * n + 7
    raise GeographyError(
        f"r({p},{q}) is only known here for p = 2 or 3; supply it manually"
    )


def fiber_sum_geography(g: int, r1: int, r2: int) -> CharNumbers:
    """c1^2 and chi of the fiber sum F(p,q;p',q') of two genus-g pieces Z(p,q), Z(p',q')."""
    if g < 1:
        raise GeographyError(f"genus must be >= 1, got {g}")
    if r1 < 0 or r2 < 0:
        raise GeographyError("r-values must be nonnegative")
    c1sq = 10 + 8 * g - r1 - r2
    chi = 1 + g
    return CharNumbers.from_c1sq_chi(c1sq, chi, b_plus=2 * g + 1)


def torus_pair_geography(n: int) -> CharNumbers:
    """Fiber sum F(2,2n+1; 3,n+1) using the printed r-values."""
    if n % 3 == 2:
        warnings.warn(f"n = {n} is 2 mod 3: T(3,n+1) is not a knot", stacklevel=2)
    return fiber_sum_geography(n, 4 * n + 4, 3 * n + 7)


@dataclass(frozen=True)
class NoetherResult:
    satisfied: bool
    margin: int

    def to_json(self) -> dict:
        return {"satisfied": self.satisfied, "margin": self.margin}


def noether_check(cn: CharNumbers) -> NoetherResult:
    """Noether inequality c1^2 >= 2 chi - 6; ``margin`` is the slack."""
    margin = cn.c1sq - (2 * cn.chi - 6)
    return NoetherResult(margin >= 0, margin)


def elliptic_self_sum_note(n: int) -> dict:
    """Compare the self fiber sum of Z(2,2n+1) with E(n+1).

    With ``r = 4n + 4`` the fiber-sum formula gives ``c1^2 = 2`` while E(n+1)
    has ``c1^2 = 0``; the mismatch is reported rather than resolved.
    """
    fs = fiber_sum_geography(n, r_value(2, 2 * n + 1), r_value(2, 2 * n + 1))
    en = char_from_en(n + 1)
    return {
        "n": n,
        "fiber_sum_c1sq": fs.c1sq,
        "elliptic_c1sq": en.c1sq,
        "chi": fs.chi,
        "consistent": fs.c1sq == en.c1sq and fs.chi == en.chi,
    }


# ---------------------------------------------------------------------------
# plumbing chains and lens spaces

@dataclass(frozen=True)
class PlumbingChain:
    framings: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "framings", tuple(self.framings))
        if not self.framings:
            raise GeographyError("plumbing chain must be nonempty")
        if any(f > -2 for f in self.framings):
            raise GeographyError(f"all framings must be <= -2, got {list(self.framings)}")

    def __len__(self):
        return len(self.framings)


@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise GeographyError(f"lens space needs p >= 1, got {self.p}")
        q = self.q % self.p
        if gcd(self.p, q) != 1:
            raise GeographyError(f"gcd({self.p},{self.q}) != 1")
        object.__setattr__(self, "q", q)

    def __str__(self):
        return f"L({self.p},{self.q})"

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q}


def blowdown_chain(n: int) -> PlumbingChain:
    """Spheres with framings -(n+1), -2, ..., -2 (n-2 of them)."""
    if n < 4:
        raise GeographyError(f"blowdown chain needs n >= 4, got {n}")
    return PlumbingChain((-(n + 1),) + (-2,) * (n - 3))


def negative_continued_fraction(terms) -> Fraction:
    """a1 - 1/(a2 - 1/(... - 1/ak))."""
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        value = a - 1 / value
    return value


def chain_boundary(ch: PlumbingChain) -> LensSpace:
    value = negative_continued_fraction([-f for f in ch.framings])
    if value <= 1:
        raise AssertionError(f"degenerate continued fraction {value} for {ch}")
    return LensSpace(value.numerator, value.denominator)


def lens_equiv(a: LensSpace, b: LensSpace, orientation_sensitive: bool = False) -> bool:
    if a.p != b.p:
        return False
    p = a.p
    if p == 1:
        return True
    inv = pow(a.q, -1, p)
    candidates = {a.q, inv}
    if not orientation_sensitive:
        candidates |= {(-a.q) % p, (-inv) % p}
    return b.q in candidates


# ---------------------------------------------------------------------------
# intersection forms

@dataclass(frozen=True)
class FormDescriptor:
    rank: int
    signature: int
    parity: Parity

    def __post_init__(self):
        object.__setattr__(self, "parity", Parity(self.parity))
        if self.rank < 0:
            raise GeographyError(f"rank must be >= 0, got {self.rank}")
        if abs(self.signature) > self.rank:
            raise GeographyError(f"|signature| {abs(self.signature)} exceeds rank {self.rank}")
        if (self.rank - self.signature) % 2:
            raise GeographyError("signature and rank must have the same parity")
        if self.parity is Parity.EVEN and self.signature % 8:
            raise GeographyError(f"even unimodular forms have signature divisible by 8, got {self.signature}")
        if self.rank == 0 and self.parity is Parity.ODD:
            raise GeographyError("the rank 0 form is even")

    @property
    def definite(self) -> bool:
        return self.rank > 0 and abs(self.signature) == self.rank


class HomeoVerdict(str, Enum):
    HOMEOMORPHIC = "homeomorphic"
    DISTINCT = "distinct"
    INDETERMINATE = "indeterminate"


def homeo_test(a: FormDescriptor, b: FormDescriptor) -> HomeoVerdict:
    """Compare simply connected closed smooth 4-manifolds by intersection form.

    Indefinite forms are classified by (rank, signature, parity).  In the smooth
    category a definite form is diagonal, so it is fixed by the same triple;
    an even definite form of positive rank cannot occur and gives
    ``INDETERMINATE``.
    """
    for f in (a, b):
        if f.definite and f.parity is Parity.EVEN:
            return HomeoVerdict.INDETERMINATE
    same = (a.rank, a.signature, a.parity) == (b.rank, b.signature, b.parity)
    return HomeoVerdict.HOMEOMORPHIC if same else HomeoVerdict.DISTINCT


def form_of(cn: CharNumbers) -> FormDescriptor:
    """Intersection form data of a simply connected manifold with these numbers."""
    if cn.parity is None:
        raise GeographyError("parity is unknown")
    return FormDescriptor(cn.e - 2, cn.sign, cn.parity)
