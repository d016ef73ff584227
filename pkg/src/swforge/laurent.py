"""Sparse multivariable Laurent polynomials over the integers.

Exponents may be half-integers.  Internally every exponent is stored doubled,
so ``t^(1/2)`` is the integer 1 and ``t^-2`` is -4.  Coefficients are Python
ints (arbitrary precision).  Values are immutable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping, Union

Exps = tuple[int, ...]
Scalar = Union[int, Fraction]


class LaurentError(ValueError):
    """Raised on invalid Laurent polynomial operations."""


class NotDivisibleError(LaurentError):
    pass


class VarMismatchError(LaurentError):
    pass


def _canonical_vars(names: Iterable[str]) -> tuple[str, ...]:
    names = tuple(names)
    if any(not isinstance(n, str) or not n for n in names):
        raise LaurentError(f"variable names must be nonempty strings: {names!r}")
    if len(set(names)) != len(names):
        raise LaurentError(f"duplicate variable names: {names!r}")
    return tuple(sorted(names))


class LaurentPoly:
    """An integer Laurent polynomial in named variables.

    ``terms`` maps doubled-exponent tuples (ordered like ``vars``) to nonzero
    integer coefficients.  Build polynomials with :meth:`var`, :meth:`const`
    or :meth:`from_dict` rather than the raw constructor.
    """

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping[Exps, int] | None = None):
        names = tuple(vars)
        cvars = _canonical_vars(names)
        clean: dict[Exps, int] = {}
        perm = [names.index(v) for v in cvars]
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != len(names):
                raise LaurentError(f"exponent {e} does not match variables {names}")
            if not isinstance(c, int):
                raise LaurentError(f"coefficients must be integers, got {c!r}")
            if c == 0:
                continue
            key = tuple(e[i] for i in perm)
            c = clean.get(key, 0) + c
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        self._vars = cvars
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # construction

    @classmethod
    def const(cls, c: int, vars: Iterable[str] = ()) -> LaurentPoly:
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def zero(cls, vars: Iterable[str] = ()) -> LaurentPoly:
        return cls(vars, {})

    @classmethod
    def var(cls, name: str, power: Scalar = 1, coeff: int = 1) -> LaurentPoly:
        """``coeff * name^power``; ``power`` may be a half-integer."""
        return cls((name,), {(_double(power),): coeff})

    @classmethod
    def monomial(cls, exps: Mapping[str, Scalar], coeff: int = 1) -> LaurentPoly:
        names = tuple(exps)
        return cls(names, {tuple(_double(exps[n]) for n in names): coeff})

    @classmethod
    def from_dict(cls, name: str, coeffs: Mapping[Scalar, int]) -> LaurentPoly:
        """Single-variable polynomial from ``{exponent: coefficient}``."""
        return cls((name,), {(_double(k),): c for k, c in coeffs.items()})

    # basic accessors

    @property
    def vars(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise LaurentError("polynomial is not constant")
        return next(iter(self._terms.values()), 0)

    def coeff(self, exps: Mapping[str, Scalar] | Exps) -> int:
        """Coefficient of a monomial.  A tuple key is read as doubled exponents."""
        if isinstance(exps, Mapping):
            extra = set(exps) - set(self._vars)
            if any(exps[v] for v in extra):
                return 0
            key = tuple(_double(exps.get(v, 0)) for v in self._vars)
        else:
            key = tuple(exps)
        return self._terms.get(key, 0)

    def is_integral(self) -> bool:
        """True when every exponent is a whole number."""
        return all(x % 2 == 0 for e in self._terms for x in e)

    # variable sets

    def with_vars(self, names: Iterable[str]) -> LaurentPoly:
        """Embed into a larger variable set (missing variables get exponent 0)."""
        target = _canonical_vars(set(names) | set(self._vars))
        idx = [self._vars.index(v) if v in self._vars else None for v in target]
        return LaurentPoly(target, {
            tuple(e[i] if i is not None else 0 for i in idx): c
            for e, c in self._terms.items()
        })

    def trim(self) -> LaurentPoly:
        """Drop variables that appear with exponent 0 in every term."""
        keep = [i for i in range(len(self._vars)) if any(e[i] for e in self._terms)]
        if len(keep) == len(self._vars):
            return self
        return LaurentPoly([self._vars[i] for i in keep],
                           {tuple(e[i] for i in keep): c for e, c in self._terms.items()})

    def _align(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        if self._vars == other._vars:
            return self, other
        if other.is_constant():
            return self, LaurentPoly.const(other.constant_value(), self._vars)
        if self.is_constant():
            return LaurentPoly.const(self.constant_value(), other._vars), other
        raise VarMismatchError(f"variable sets differ: {self._vars} vs {other._vars}")

    @staticmethod
    def _coerce(x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        return NotImplemented

    # ring operations

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        terms = dict(a._terms)
        for e, c in b._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(a._vars, terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        terms: dict[Exps, int] = {}
        for ea, ca in a._terms.items():
            for eb, cb in b._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, 0) + ca * cb
        return LaurentPoly(a._vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if not isinstance(n, int) or n < 0:
            raise LaurentError(f"power must be a nonnegative integer, got {n!r}")
        result = LaurentPoly.const(1, self._vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self._vars == other._vars:
            return self._terms == other._terms
        # constants compare by value regardless of the variable set
        if self.is_constant() and other.is_constant():
            return self.constant_value() == other.constant_value()
        return False

    def __hash__(self) -> int:
        if self._hash is None:
            key = (self.constant_value(),) if self.is_constant() else (self._vars, tuple(self._terms.items()))
            self._hash = hash(key)
        return self._hash

    # transformations

    def bar(self) -> LaurentPoly:
        """Negate every exponent (the involution t -> 1/t)."""
        return LaurentPoly(self._vars, {tuple(-x for x in e): c for e, c in self._terms.items()})

    def shift(self, exps: Mapping[str, Scalar]) -> LaurentPoly:
        """Multiply by the monomial with the given exponents."""
        return self * LaurentPoly.monomial(exps)

    def substitute(self, mapping: Mapping[str, tuple]) -> LaurentPoly:
        """Replace variables.

        ``mapping[v] = (target, scale)`` or ``(target, scale, flip)`` sends
        ``v^k`` to ``(-1)^k * target^(k*scale)`` when ``flip`` is set, and to
        ``target^(k*scale)`` otherwise.  ``scale`` may be a half-integer; the
        resulting exponents must stay half-integral.
        """
        rules = {}
        for v, rule in mapping.items():
            if v not in self._vars:
                continue
            target, scale, *rest = rule
            flip = bool(rest[0]) if rest else False
            rules[v] = (target, Fraction(scale), flip)
        if not rules:
            return self
        out_vars = _canonical_vars(
            {v for v in self._vars if v not in rules} | {r[0] for r in rules.values()}
        )
        pos = {v: i for i, v in enumerate(out_vars)}
        terms: dict[Exps, int] = {}
        for e, c in self._terms.items():
            new = [0] * len(out_vars)
            for v, x in zip(self._vars, e):
                if v in rules:
                    target, scale, flip = rules[v]
                    if flip:
                        if x % 2:
                            raise LaurentError(f"cannot send {v} -> -{v} with half-integer exponent {x}/2")
                        if (x // 2) % 2:
                            c = -c
                    y = x * scale
                    if y.denominator != 1:
                        raise LaurentError(f"substitution of {v} leaves exponent {y / 2} outside 1/2 Z")
                    new[pos[target]] += int(y)
                else:
                    new[pos[v]] += x
            key = tuple(new)
            terms[key] = terms.get(key, 0) + c
        return LaurentPoly(out_vars, terms)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a point with nonzero rational coordinates."""
        values = []
        for i, v in enumerate(self._vars):
            used = [e[i] for e in self._terms if e[i]]
            if not used:
                values.append(None)
                continue
            if v not in point:
                raise LaurentError(f"no value given for variable {v!r}")
            x = Fraction(point[v])
            if x == 0:
                raise LaurentError(f"variable {v!r} evaluated at zero")
            root = None
            if any(k % 2 for k in used):
                root = _rational_sqrt(x)
                if root is None:
                    raise LaurentError(f"{v}={x} is not a rational square; half-integer exponents present")
            values.append((x, root))
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for k, val in zip(e, values):
                if k == 0:
                    continue
                x, root = val
                term *= x ** (k // 2)
                if k % 2:
                    term *= root
            total += term
        return total

    # single-variable helpers

    def _only_var(self, v: str | None = None) -> str | None:
        live = [x for i, x in enumerate(self._vars) if any(e[i] for e in self._terms)]
        if v is not None:
            if any(x != v for x in live):
                raise LaurentError(f"expected a polynomial in {v!r} only, got {self._vars}")
            return v
        if len(live) > 1:
            raise LaurentError(f"expected a single-variable polynomial, got {tuple(live)}")
        return live[0] if live else (self._vars[0] if len(self._vars) == 1 else None)

    def coeffs2(self, v: str | None = None) -> dict[int, int]:
        """``{doubled exponent: coefficient}`` for a one-variable polynomial."""
        v = self._only_var(v)
        if v is None:
            return {0: c for c in self._terms.values()}
        i = self._vars.index(v)
        return {e[i]: c for e, c in self._terms.items()}

    def degree(self, v: str) -> Fraction:
        return Fraction(self._top(v)[0], 2)

    def min_degree(self, v: str) -> Fraction:
        if self.is_zero():
            raise LaurentError("zero polynomial has no degree")
        if v not in self._vars:
            return Fraction(0)
        i = self._vars.index(v)
        return Fraction(min(e[i] for e in self._terms), 2)

    def top_coefficient(self, v: str) -> int:
        return self._top(v)[1]

    def _top(self, v: str) -> tuple[int, int]:
        if self.is_zero():
            raise LaurentError("zero polynomial has no degree")
        if v not in self._vars:
            if len(self._terms) > 1:
                raise LaurentError(f"top term in {v!r} is ambiguous")
            return 0, next(iter(self._terms.values()))
        i = self._vars.index(v)
        top = max(e[i] for e in self._terms)
        at_top = [c for e, c in self._terms.items() if e[i] == top]
        if len(at_top) > 1:
            raise LaurentError(f"top term in {v!r} is ambiguous")
        return top, at_top[0]

    # printing and serialization

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> dict:
        return {
            "vars": list(self._vars),
            "terms": [{"c": str(c), "e2": list(e)} for e, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, obj: dict | str) -> LaurentPoly:
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            names = list(obj["vars"])
            terms: dict[Exps, int] = {}
            for t in obj["terms"]:
                e = tuple(int(x) for x in t["e2"])
                terms[e] = terms.get(e, 0) + int(t["c"])
        except (KeyError, TypeError, ValueError) as exc:
            raise LaurentError(f"malformed polynomial JSON: {exc}") from None
        return cls(names, terms)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def _double(k: Scalar) -> int:
    k2 = Fraction(k) * 2
    if k2.denominator != 1:
        raise LaurentError(f"exponent {k} is not a half-integer")
    return int(k2)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def _format_exp(k2: int) -> str:
    if k2 % 2:
        return f"({k2}/2)"
    return str(k2 // 2)


def format_poly(p: LaurentPoly) -> str:
    """Human-readable form, highest exponents first: ``t^2 - 2 + t^-2``."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in sorted(p.items(), reverse=True):
        mono = "*".join(
            v if k == 2 else f"{v}^{_format_exp(k)}"
            for v, k in zip(p.vars, e) if k
        )
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# functional interface

def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def pow(a: LaurentPoly, n: int) -> LaurentPoly:  # noqa: A001
    return a ** n


def bar(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


def substitute(a: LaurentPoly, mapping: Mapping[str, tuple]) -> LaurentPoly:
    return a.substitute(mapping)


def evaluate(a: LaurentPoly, point: Mapping[str, Scalar]) -> Fraction:
    return a.evaluate(point)


def degree(a: LaurentPoly, v: str) -> Fraction:
    return a.degree(v)


def top_coefficient(a: LaurentPoly, v: str) -> int:
    return a.top_coefficient(v)


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Quotient ``q`` with ``a == q * b``; raises :class:`NotDivisibleError` otherwise.

    Only one variable may actually occur in ``a`` and ``b`` together.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero(a.vars or b.vars)
    a, b = a._align(b)
    names = [v for i, v in enumerate(a.vars)
             if any(e[i] for e in a._terms) or any(e[i] for e in b._terms)]
    if len(names) > 1:
        raise LaurentError(f"exact_div needs a single variable, got {tuple(names)}")
    if not names:
        num, den = a.constant_value(), b.constant_value()
        if num % den:
            raise NotDivisibleError(f"{num} is not divisible by {den}")
        return LaurentPoly.const(num // den, a.vars)
    v = names[0]
    ca, cb = a.coeffs2(v), b.coeffs2(v)
    # long division from the top, in doubled exponent units
    rem = dict(ca)
    q: dict[int, int] = {}
    btop, blow = max(cb), min(cb)
    qlow = min(ca) - blow
    lead = cb[btop]
    while rem:
        top = max(rem)
        if top - btop < qlow:
            raise NotDivisibleError(f"{a} is not divisible by {b}")
        c = rem[top]
        if c % lead:
            raise NotDivisibleError(f"{a} is not divisible by {b}")
        k = top - btop
        qc = c // lead
        q[k] = qc
        for e, cc in cb.items():
            r = rem.get(e + k, 0) - qc * cc
            if r:
                rem[e + k] = r
            else:
                rem.pop(e + k, None)
    idx = a.vars.index(v)
    return LaurentPoly(a.vars, {
        tuple(k if j == idx else 0 for j in range(len(a.vars))): c for k, c in q.items()
    })


def normalize_symmetric(a: LaurentPoly) -> LaurentPoly:
    """Unit multiple ``±t^k * a`` that is symmetric under ``t -> 1/t``.

    Polynomials that become antisymmetric (``bar(p) == -p``, as for links with
    an even number of components) are accepted too.  The sign makes the value
    at 1 positive, or the top coefficient positive when that value is 0.
    """
    if a.is_zero():
        raise LaurentError("cannot normalize the zero polynomial")
    if a.is_constant():
        c = a.constant_value()
        return LaurentPoly.const(abs(c), a.vars)
    v = a._only_var()
    c2 = a.coeffs2(v)
    lo, hi = min(c2), max(c2)
    if (lo + hi) % 2:
        raise LaurentError(f"{a} has no symmetric unit multiple")
    mid = (lo + hi) // 2
    p = a * LaurentPoly(a.vars, {tuple(-mid if x == v else 0 for x in a.vars): 1})
    b = p.bar()
    if b != p and b != -p:
        raise LaurentError(f"{a} has no symmetric unit multiple")
    val = sum(c2.values())
    if val < 0 or (val == 0 and p.top_coefficient(v) < 0):
        p = -p
    return p
