"""Words and noncommutative polynomials with Q(w) coefficients."""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping, Tuple

from ..exactnum import Eis

Word = Tuple[int, ...]


class NCPoly:
    """Finite linear combination of words; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Eis] = {}
        for word, coef in items:
            word = tuple(word)
            c = acc.get(word, 0) + Eis.coerce(coef)
            if c:
                acc[word] = c
            else:
                acc.pop(word, None)
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("NCPoly is immutable")

    @classmethod
    def gen(cls, i: int) -> "NCPoly":
        return cls({(i,): 1})

    @classmethod
    def word(cls, w: Iterable[int], coef=1) -> "NCPoly":
        return cls({tuple(w): coef})

    @classmethod
    def linear(cls, coeffs: Iterable) -> "NCPoly":
        """Degree-1 polynomial ``sum coeffs[i] * gen_i``."""
        return cls(((i,), c) for i, c in enumerate(coeffs))

    @property
    def terms(self) -> Mapping[Word, Eis]:
        return MappingProxyType(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, w: Iterable[int]) -> Eis:
        return self._terms.get(tuple(w), Eis(0))

    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Common degree of a homogeneous polynomial; None for the zero polynomial."""
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError("polynomial is not homogeneous")
        return next(iter(ds)) if ds else None

    def max_generator(self) -> int:
        return max((max(w) for w in self._terms if w), default=-1)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __add__(self, other):
        other = _as_ncpoly(other)
        return NCPoly(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return NCPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_as_ncpoly(other))

    def __rsub__(self, other):
        return _as_ncpoly(other) - self

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            out: dict[Word, Eis] = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, 0) + c1 * c2
            return NCPoly(out)
        try:
            s = Eis.coerce(other)
        except TypeError:
            return NotImplemented
        return NCPoly({w: c * s for w, c in self._terms.items()})

    def __rmul__(self, other):
        # scalars only; NCPoly * NCPoly is handled by __mul__
        return self * other

    def __pow__(self, n: int):
        acc = NCPoly({(): 1})
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"NCPoly({dict(sorted(self._terms.items()))!r})"

    def format(self, names=None) -> str:
        from .presentation import format_poly

        return format_poly(self, names)

    __str__ = format


def _as_ncpoly(x) -> NCPoly:
    if isinstance(x, NCPoly):
        return x
    return NCPoly({(): x})
