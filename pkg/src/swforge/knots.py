"""Knot and link presentations: braid words, torus knots, 2-bridge knots and
skein resolution trees, with a small text grammar.

Grammar (whitespace is insignificant between tokens)::

    presentation := braid | torus | twobridge | tree
    braid        := "B(" INT ":" INT* ")"          e.g. B(3: 1 -2 1 -2)
    torus        := "T(" INT "," INT ")"           e.g. T(2,3)
    twobridge    := "K(" INT "/" INT ")"           e.g. K(105/64)
    tree         := "(" ("+" | "-") node node ")" | "U" | "S(" INT ")"
    node         := tree | braid | torus | twobridge

In a tree node ``(s flip zero)`` the node itself is the diagram with crossing
sign ``s``; ``flip`` is the diagram with that crossing changed and ``zero`` its
oriented resolution.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Union

from .laurent import LaurentError, LaurentPoly


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class PresentationError(ValueError):
    """A presentation violates one of its invariants."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 2:
            raise PresentationError(f"a braid needs at least 2 strands, got {self.strands}")
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise PresentationError(f"generator {x} out of range for {self.strands} strands")

    def __str__(self):
        return f"B({self.strands}: {' '.join(map(str, self.letters))})"

    def permutation(self) -> tuple[int, ...]:
        """Where each starting strand position ends up (0-based)."""
        perm = list(range(self.strands))
        for x in self.letters:
            i = abs(x) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm)


@dataclass(frozen=True)
class TorusKnotParams:
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p < 2 or q < 2:
            raise PresentationError(f"torus knot parameters must be >= 2, got ({p},{q})")
        if gcd(p, q) != 1:
            raise PresentationError(f"T({p},{q}) is a link: gcd({p},{q}) = {gcd(p, q)}")
        if p > q:
            object.__setattr__(self, "p", q)
            object.__setattr__(self, "q", p)

    def __str__(self):
        return f"T({self.p},{self.q})"

    def braid(self) -> BraidWord:
        """Standard braid (s1 s2 ... s_{p-1})^q on p strands."""
        return BraidWord(self.p, tuple(range(1, self.p)) * self.q)


@dataclass(frozen=True)
class TwoBridgeParams:
    alpha: int
    beta: int

    def __post_init__(self):
        a, b = self.alpha, self.beta
        if a < 3 or a % 2 == 0:
            raise PresentationError(f"alpha must be odd and >= 3 for a 2-bridge knot, got {a}")
        if not 0 < b < a:
            raise PresentationError(f"beta must satisfy 0 < beta < alpha, got {b}")
        if gcd(a, b) != 1:
            raise PresentationError(f"gcd({a},{b}) = {gcd(a, b)} != 1")

    def __str__(self):
        return f"K({self.alpha}/{self.beta})"


@dataclass(frozen=True)
class Unknot:
    def __str__(self):
        return "U"


@dataclass(frozen=True)
class SplitLink:
    components: int

    def __post_init__(self):
        if self.components < 2:
            raise PresentationError(f"a split link has at least 2 components, got {self.components}")

    def __str__(self):
        return f"S({self.components})"


@dataclass(frozen=True)
class SkeinNode:
    sign: int
    flip: "SkeinTree"
    zero: "SkeinTree"

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise PresentationError(f"crossing sign must be +1 or -1, got {self.sign}")

    def __str__(self):
        return f"({'+' if self.sign > 0 else '-'} {self.flip} {self.zero})"


SkeinTree = Union[SkeinNode, Unknot, SplitLink, BraidWord, TorusKnotParams, TwoBridgeParams]
KnotPresentation = Union[BraidWord, TorusKnotParams, TwoBridgeParams, SkeinNode, Unknot, SplitLink]


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(-?\d+)|([A-Za-z]+)|(.))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        for m in _TOKEN.finditer(text):
            if m.group(0).strip() == "":
                continue
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2), m.start(2)))
            else:
                self.tokens.append(("sym", m.group(3), m.start(3)))
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, kind: str, value: str | None = None) -> str:
        k, v, pos = self.next()
        if k != kind or (value is not None and v != value):
            want = repr(value) if value is not None else kind
            got = repr(v) if k != "eof" else "end of input"
            raise ParseError(f"expected {want}, got {got}", pos)
        return v

    def integer(self) -> int:
        return int(self.expect("int"))

    def node(self):
        k, v, pos = self.peek()
        if k == "sym" and v == "(":
            self.next()
            k2, v2, pos2 = self.next()
            if k2 == "sym" and v2 in "+-":
                sign = 1 if v2 == "+" else -1
            else:
                raise ParseError(f"expected crossing sign '+' or '-', got {v2!r}", pos2)
            flip = self.node()
            zero = self.node()
            self.expect("sym", ")")
            return self._build(SkeinNode, pos, sign, flip, zero)
        if k == "name":
            self.next()
            if v == "U":
                return Unknot()
            if v == "S":
                self.expect("sym", "(")
                m = self.integer()
                self.expect("sym", ")")
                return self._build(SplitLink, pos, m)
            if v == "T":
                self.expect("sym", "(")
                p = self.integer()
                self.expect("sym", ",")
                q = self.integer()
                self.expect("sym", ")")
                return self._build(TorusKnotParams, pos, p, q)
            if v == "K":
                self.expect("sym", "(")
                a = self.integer()
                self.expect("sym", "/")
                b = self.integer()
                self.expect("sym", ")")
                return self._build(TwoBridgeParams, pos, a, b)
            if v == "B":
                self.expect("sym", "(")
                n = self.integer()
                self.expect("sym", ":")
                letters = []
                while self.peek()[0] == "int":
                    letters.append(self.integer())
                self.expect("sym", ")")
                return self._build(BraidWord, pos, n, tuple(letters))
            raise ParseError(f"unknown presentation {v!r}", pos)
        got = repr(v) if k != "eof" else "end of input"
        raise ParseError(f"expected a presentation, got {got}", pos)

    @staticmethod
    def _build(cls, pos, *args):
        try:
            return cls(*args)
        except PresentationError as exc:
            raise PresentationError(f"{exc} (at position {pos})") from None


def parse_presentation(text: str) -> KnotPresentation:
    """Parse one presentation; raises ParseError or PresentationError."""
    p = _Parser(text)
    result = p.node()
    k, v, pos = p.peek()
    if k != "eof":
        raise ParseError(f"unexpected trailing input {v!r}", pos)
    return result


def format_presentation(pres: KnotPresentation) -> str:
    return str(pres)


# ---------------------------------------------------------------------------
# braid and 2-bridge arithmetic

def closure_components(b: BraidWord) -> int:
    """Number of components of the braid closure (cycles of the permutation)."""
    perm = b.permutation()
    seen = [False] * b.strands
    cycles = 0
    for i in range(b.strands):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def writhe(b: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in b.letters)


def two_bridge_continued_fraction(tb: TwoBridgeParams) -> list[int]:
    """Regular continued fraction of alpha/beta, all terms positive.

    ``[a1, ..., ak]`` means ``a1 + 1/(a2 + 1/(... + 1/ak))``.
    """
    a, b = tb.alpha, tb.beta
    terms = []
    while b:
        terms.append(a // b)
        a, b = b, a % b
    if continued_fraction_value(terms) != Fraction(tb.alpha, tb.beta):
        raise AssertionError(f"continued fraction {terms} does not reconstruct {tb}")
    return terms


def continued_fraction_value(terms: list[int]) -> Fraction:
    value = Fraction(terms[-1])
    for x in reversed(terms[:-1]):
        value = x + 1 / value
    return value


# ---------------------------------------------------------------------------
# corpus files

@dataclass(frozen=True)
class CorpusEntry:
    name: str
    presentation: KnotPresentation
    text: str
    expect_alex: LaurentPoly | None = None


class CorpusError(ValueError):
    pass


def parse_corpus(data) -> list[CorpusEntry]:
    """Validate a decoded corpus (a JSON array of entry objects)."""
    if not isinstance(data, list):
        raise CorpusError("corpus must be a JSON array")
    entries = []
    for i, item in enumerate(data):
        try:
            name = item["name"]
            text = item["presentation"]
            if not isinstance(name, str) or not isinstance(text, str):
                raise TypeError("name and presentation must be strings")
            expect = item.get("expect_alex")
            expect = LaurentPoly.from_json(expect) if expect is not None else None
            pres = parse_presentation(text)
        except (KeyError, TypeError, AttributeError, ValueError, LaurentError) as exc:
            raise CorpusError(f"entry {i}: {exc}") from None
        entries.append(CorpusEntry(name, pres, text, expect))
    return entries


def load_corpus(path: str | Path) -> list[CorpusEntry]:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise CorpusError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CorpusError(f"{path} is not valid JSON: {exc}") from None
    return parse_corpus(data)
