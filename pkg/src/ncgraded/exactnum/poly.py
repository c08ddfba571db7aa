"""Univariate polynomials and rational functions over Q in the variable t."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DivisionByZero, SingularSystem


class UniPoly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of t**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def t(cls) -> "UniPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @staticmethod
    def _coerce(x) -> "UniPoly":
        if isinstance(x, UniPoly):
            return x
        return UniPoly([x])

    def __add__(self, other):
        other = UniPoly._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-UniPoly._coerce(other))

    def __rsub__(self, other):
        return UniPoly._coerce(other) - self

    def __mul__(self, other):
        other = UniPoly._coerce(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        acc = UniPoly([1])
        for _ in range(n):
            acc = acc * self
        return acc

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        other = UniPoly._coerce(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.leading()
        dg = other.degree
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k] / lead
            if c:
                q[k - dg] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dg + j] -= c * b
        return UniPoly(q), UniPoly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = self.divmod(other)
        if r:
            raise ValueError("polynomial division is not exact")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.leading()
        return UniPoly(c / lead for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def format_poly(p: UniPoly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class RationalFunction:
    """``num/den`` in lowest terms with ``den(0) == 1``."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly):
        r = ratfun_reduce(num, den)
        object.__setattr__(self, "num", r[0])
        object.__setattr__(self, "den", r[1])

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_poly(cls, p) -> "RationalFunction":
        return cls(UniPoly._coerce(p), UniPoly([1]))

    def __add__(self, other):
        other = _as_ratfun(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_ratfun(other))

    def __rsub__(self, other):
        return _as_ratfun(other) - self

    def __mul__(self, other):
        other = _as_ratfun(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * _as_ratfun(other).inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, UniPoly)):
            other = _as_ratfun(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        # cross-multiplication; agrees with structural equality of reduced forms
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def series(self, n_terms: int) -> list[Fraction]:
        """First ``n_terms`` power-series coefficients about t = 0."""
        d0 = self.den.coeff(0)
        out: list[Fraction] = []
        for k in range(n_terms):
            acc = self.num.coeff(k)
            for j in range(1, min(k, self.den.degree) + 1):
                acc -= self.den.coeff(j) * out[k - j]
            out.append(acc / d0)
        return out

    def constant_term(self) -> Fraction:
        return self.num.coeff(0) / self.den.coeff(0)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        num, den = format_poly(self.num), format_poly(self.den)
        if self.den == UniPoly([1]):
            return num
        if len([c for c in self.num.coeffs if c]) > 1:
            num = f"({num})"
        return f"{num}/({den})"


def _as_ratfun(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction.from_poly(x)


def ratfun_reduce(num: UniPoly, den: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Lowest-terms form of ``num/den`` normalised so that ``den(0) == 1``.

    Every denominator this package produces has nonzero constant term once
    common factors are cancelled; a remaining zero constant term is rejected.
    """
    num, den = UniPoly._coerce(num), UniPoly._coerce(den)
    if den.is_zero():
        raise DivisionByZero("rational function with zero denominator")
    if num.is_zero():
        return UniPoly(), UniPoly([1])
    g = poly_gcd(num, den)
    num, den = num.exact_div(g), den.exact_div(g)
    d0 = den.coeff(0)
    if d0 == 0:
        raise SingularSystem("denominator vanishes at t = 0; cannot normalise den(0) = 1")
    return UniPoly(c / d0 for c in num.coeffs), UniPoly(c / d0 for c in den.coeffs)


def poly_det(matrix: Sequence[Sequence[UniPoly]]) -> UniPoly:
    """Determinant over Q[t] by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return UniPoly([1])
    m = [[UniPoly._coerce(x) for x in row] for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("poly_det needs a square matrix")
    sign = 1
    prev = UniPoly([1])
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return UniPoly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det
