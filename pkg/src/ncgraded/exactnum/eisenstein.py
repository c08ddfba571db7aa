"""Exact arithmetic in Q(w), w a primitive cube root of unity.

Elements are stored as ``re + wcoef*w`` with rational coordinates and the
reduction rule ``w**2 = -1 - w``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

from ..errors import DivisionByZero, ScalarParseError

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class Eis:
    """An element ``re + wcoef*w`` of the Eisenstein field Q(w)."""

    __slots__ = ("re", "wcoef")

    def __init__(self, re=0, wcoef=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "wcoef", _as_fraction(wcoef))

    def __setattr__(self, name, value):
        raise AttributeError("Eis is immutable")

    @classmethod
    def _raw(cls, re: Fraction, wcoef: Fraction) -> "Eis":
        # trusted constructor for coordinates that are already Fractions
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "wcoef", wcoef)
        return obj

    @classmethod
    def coerce(cls, x) -> "Eis":
        if isinstance(x, Eis):
            return x
        return cls(x, 0)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            other = Eis.coerce(other)
        except TypeError:
            return NotImplemented
        return Eis._raw(self.re + other.re, self.wcoef + other.wcoef)

    __radd__ = __add__

    def __neg__(self):
        return Eis._raw(-self.re, -self.wcoef)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = Eis.coerce(other)
        except TypeError:
            return NotImplemented
        return Eis._raw(self.re - other.re, self.wcoef - other.wcoef)

    def __rsub__(self, other):
        return Eis.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Eis.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.wcoef, other.re, other.wcoef
        if not b and not d:
            return Eis._raw(a * c, b)
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, with w^2 = -1 - w
        bd = b * d
        return Eis._raw(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def conjugate(self) -> "Eis":
        """Galois conjugate, sending w to w**2."""
        return Eis(self.re - self.wcoef, -self.wcoef)

    def norm(self) -> Fraction:
        a, b = self.re, self.wcoef
        return a * a - a * b + b * b

    def inverse(self) -> "Eis":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("inverse of zero in Q(w)")
        c = self.conjugate()
        return Eis(c.re / n, c.wcoef / n)

    def __truediv__(self, other):
        try:
            other = Eis.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Eis.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        acc, base = ONE, self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Eis):
            return self.re == other.re and self.wcoef == other.wcoef
        if isinstance(other, (int, Fraction)):
            return self.wcoef == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.wcoef == 0:
            return hash(self.re)
        return hash((self.re, self.wcoef))

    def __bool__(self):
        return bool(self.re) or bool(self.wcoef)

    def is_rational(self) -> bool:
        return self.wcoef == 0

    def to_fraction(self) -> Fraction:
        if self.wcoef:
            raise ValueError(f"{self} is not rational")
        return self.re

    # -- text ---------------------------------------------------------------
    def __repr__(self):
        return f"Eis({self.re!s}, {self.wcoef!s})"

    def __str__(self):
        return format_scalar(self)


ZERO = Eis(0)
ONE = Eis(1)
OMEGA = Eis(0, 1)
OMEGA2 = Eis(-1, -1)


def eis_inverse(s) -> Eis:
    return Eis.coerce(s).inverse()


def cube_roots_of_unity() -> tuple[Eis, Eis, Eis]:
    return (ONE, OMEGA, OMEGA2)


def format_scalar(s: Eis) -> str:
    """Render in the literal grammar accepted by :func:`parse_scalar`.

    Rationals render bare (``3``, ``-1/2``); anything involving w is
    parenthesised so it can be pasted into a presentation as a coefficient.
    """
    s = Eis.coerce(s)
    if s.wcoef == 0:
        return str(s.re)
    if s.re == 0:
        body = _w_term(s.wcoef)
        return f"({body})"
    w = _w_term(abs(s.wcoef))
    sign = "-" if s.wcoef < 0 else "+"
    return f"({s.re} {sign} {w})"


def _w_term(coef: Fraction) -> str:
    if coef == 1:
        return "w"
    if coef == -1:
        return "-w"
    return f"{coef}*w"


# ---------------------------------------------------------------------------
# Literal parser.  Grammar:
#   expr   := ['+'|'-'] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := number ['/' number] | 'w' ['^' int] | '(' expr ')'
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(w)|(\^)|([-+*/()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text_len = len(text)
    while pos < text_len:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise ScalarParseError(f"unexpected character {text[pos + stripped]!r}", text, pos + stripped)
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    return tokens


class _ScalarParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self):
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = repr(expected) if expected else "a token"
            raise ScalarParseError(f"expected {want}", self.text, self.pos())
        self.i += 1
        return tok

    def expr(self) -> Eis:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        value = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            value = value + t if op == "+" else value - t
        return value

    def term(self) -> Eis:
        value = self.factor()
        while self.peek() == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self) -> Eis:
        tok = self.peek()
        if tok is None:
            raise ScalarParseError("unexpected end of scalar", self.text, self.pos())
        if tok.isdigit():
            self.take()
            num = int(tok)
            if self.peek() == "/":
                self.take()
                den_tok = self.peek()
                if den_tok is None or not den_tok.isdigit():
                    raise ScalarParseError("expected denominator", self.text, self.pos())
                self.take()
                if int(den_tok) == 0:
                    raise ScalarParseError("zero denominator", self.text, self.pos())
                return Eis(Fraction(num, int(den_tok)))
            return Eis(num)
        if tok == "w":
            self.take()
            if self.peek() == "^":
                self.take()
                exp_tok = self.peek()
                if exp_tok is None or not exp_tok.isdigit():
                    raise ScalarParseError("expected exponent", self.text, self.pos())
                self.take()
                return OMEGA ** int(exp_tok)
            return OMEGA
        if tok == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if tok == "-":
            self.take()
            return -self.factor()
        raise ScalarParseError(f"unexpected token {tok!r}", self.text, self.pos())


def parse_scalar(text: str) -> Eis:
    """Parse an Eisenstein literal such as ``3``, ``-1/2``, ``w^2`` or ``(1/2 + 3*w)``."""
    p = _ScalarParser(text)
    if not p.tokens:
        raise ScalarParseError("empty scalar", text, 0)
    value = p.expr()
    if p.peek() is not None:
        raise ScalarParseError(f"trailing input {p.peek()!r}", text, p.pos())
    return value
