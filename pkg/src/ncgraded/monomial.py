"""Quadratic monomial algebras: normal words, Ufnarovskii graphs, Hilbert series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ZeroConstantTerm
from .exactnum import IntMatrix, RationalFunction, UniPoly, mat_pow, poly_det
from .ncalg import NCPoly, Presentation, Word
from .quiver import Arrow, Quiver, adjacency


@dataclass(frozen=True)
class MonomialAlgebra:
    """``k<g letters>`` modulo a set of forbidden length-2 words."""

    alphabet_size: int
    forbidden: frozenset[Word]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        fb = frozenset(tuple(w) for w in self.forbidden)
        for w in fb:
            if len(w) != 2:
                raise ValueError(f"forbidden word {w} is not of length 2")
            if any(not (0 <= x < self.alphabet_size) for x in w):
                raise ValueError(f"forbidden word {w} uses a letter outside the alphabet")
        object.__setattr__(self, "forbidden", fb)
        names = tuple(self.names) or _default_names(self.alphabet_size)
        if len(names) != self.alphabet_size:
            raise ValueError("one name per letter")
        object.__setattr__(self, "names", names)

    @classmethod
    def from_presentation(cls, p: Presentation) -> "MonomialAlgebra":
        if not p.is_monomial() or not p.is_quadratic():
            raise ValueError("presentation is not quadratic monomial")
        return cls(p.ngens, frozenset(next(iter(r.terms)) for r in p.relations), p.generator_names)

    @classmethod
    def from_words(cls, names: Sequence[str], forbidden: Iterable[str]) -> "MonomialAlgebra":
        """E.g. ``from_words("uvw", ["uu", "vv", "ww"])``."""
        names = tuple(names)
        return cls(len(names), frozenset(tuple(names.index(ch) for ch in w) for w in forbidden), names)

    def to_presentation(self) -> Presentation:
        return Presentation(self.names, tuple(NCPoly.word(w) for w in sorted(self.forbidden)))

    def word_text(self, w: Word) -> str:
        return "".join(self.names[i] for i in w)


def _default_names(g: int) -> tuple[str, ...]:
    if g <= 3:
        return tuple("uvw"[:g])
    return tuple(f"x{i}" for i in range(g))


def normal_words(m: MonomialAlgebra, n: int) -> list[Word]:
    """All length-n words with no forbidden subword, in lexicographic order."""
    if n < 0:
        raise ValueError("negative length")
    words: list[Word] = [()]
    for _ in range(n):
        words = [w + (x,) for w in words for x in range(m.alphabet_size)
                 if not w or (w[-1], x) not in m.forbidden]
    return words


def transfer_matrix(m: MonomialAlgebra) -> IntMatrix:
    g = m.alphabet_size
    return IntMatrix([[int((i, j) not in m.forbidden) for j in range(g)] for i in range(g)])


def count_normal_words(m: MonomialAlgebra, n: int) -> int:
    """``1^T T^(n-1) 1`` for the transfer matrix T (and 1 for n = 0)."""
    if n < 0:
        raise ValueError("negative length")
    if n == 0:
        return 1
    if m.alphabet_size == 0:
        return 0
    return sum(sum(r) for r in mat_pow(transfer_matrix(m), n - 1).entries)


def ufnarovskii_graph(m: MonomialAlgebra) -> Quiver:
    """Vertex per letter, arrow x -> y when xy is normal.

    Arrows out of x are labelled x1, x2, ... in ascending target order.
    """
    arrows = []
    for x in range(m.alphabet_size):
        k = 0
        for y in range(m.alphabet_size):
            if (x, y) not in m.forbidden:
                k += 1
                arrows.append(Arrow(x, y, f"{m.names[x]}{k}"))
    return Quiver(m.alphabet_size, tuple(arrows), m.names)


def hilbert_series(m: MonomialAlgebra) -> RationalFunction:
    """H(t) = 1 + t * 1^T (I - tT)^(-1) 1 as an exact rational function.

    ``1^T adj(B) 1 = det(B + J) - det(B)`` for the all-ones matrix J, so only
    two determinants over Q[t] are needed.
    """
    g = m.alphabet_size
    if g == 0:
        return RationalFunction.from_poly(1)
    t = UniPoly.t()
    T = transfer_matrix(m).entries
    B = [[UniPoly([int(i == j)]) - t * T[i][j] for j in range(g)] for i in range(g)]
    BJ = [[B[i][j] + 1 for j in range(g)] for i in range(g)]
    det_b = poly_det(B)
    quad = poly_det(BJ) - det_b
    return RationalFunction(det_b + t * quad, det_b)


def free_product_hilbert(series: Sequence[RationalFunction]) -> RationalFunction:
    """Hilbert series of a free product: ``H^-1 = sum H_i^-1 - (k - 1)``."""
    if not series:
        raise ValueError("need at least one series")
    total = RationalFunction.from_poly(-(len(series) - 1))
    for h in series:
        if h.constant_term() != 1:
            raise ZeroConstantTerm("each factor must have constant term 1")
        total = total + h.inverse()
    return total.inverse()


def series_coefficients(h: RationalFunction, n_terms: int) -> list[int]:
    coeffs = h.series(n_terms)
    out = []
    for c in coeffs:
        out.append(int(c) if c.denominator == 1 else c)
    return out


MONO_A = MonomialAlgebra.from_words("uvw", ["uu", "vv", "ww"])
MONO_A_PRIME = MonomialAlgebra.from_words("uvw", ["uv", "vw", "wu"])
DUAL_NUMBERS = MonomialAlgebra.from_words("u", ["uu"])


def graph_adjacency(m: MonomialAlgebra) -> IntMatrix:
    return adjacency(ufnarovskii_graph(m))
