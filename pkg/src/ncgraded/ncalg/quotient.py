"""Graded pieces of a finitely presented algebra and the splitting check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..exactnum.linalg import Echelon
from .poly import NCPoly, Word
from .presentation import Presentation


class GradedQuotient:
    """Word-basis model of ``k<gens>/(relations)`` degree by degree.

    Monomial presentations use normal words directly.  Otherwise the ideal
    is built as ``I_n = F_1 I_{n-1} + I_{n-1} F_1 + R_n`` and reduced to
    echelon form; the non-pivot words of degree n then form a basis.
    """

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        self.g = presentation.ngens
        self.monomial = presentation.is_monomial()
        self._forbidden = frozenset(next(iter(r.terms)) for r in presentation.relations) if self.monomial else frozenset()
        self._ideal: dict[int, Echelon] = {}
        self._basis_cache: dict[int, list[Word]] = {}

    # -- monomial path ---------------------------------------------------
    def _is_normal(self, word: Word) -> bool:
        fb = self._forbidden
        if not fb:
            return True
        n = len(word)
        for f in fb:
            k = len(f)
            for i in range(n - k + 1):
                if word[i:i + k] == f:
                    return False
        return True

    # -- general path ----------------------------------------------------
    def ideal(self, n: int) -> Echelon:
        if n in self._ideal:
            return self._ideal[n]
        e = Echelon()
        if n > 0:
            prev = self.ideal(n - 1)
            rows = list(prev._pivots.values())
            for x in range(self.g):
                for row in rows:
                    e.add({(x,) + w: c for w, c in row.items()})
                    e.add({w + (x,): c for w, c in row.items()})
        for rel in self.presentation.relations:
            if rel.degree == n:
                e.add(rel.terms)
        self._ideal[n] = e
        return e

    def basis(self, n: int) -> list[Word]:
        if n in self._basis_cache:
            return self._basis_cache[n]
        words: list[Word] = [()]
        for _ in range(n):
            words = [w + (x,) for w in words for x in range(self.g)]
            if self.monomial:
                words = [w for w in words if self._is_normal(w)]
        if not self.monomial:
            pivots = self.ideal(n).pivot_columns
            words = [w for w in words if w not in pivots]
        self._basis_cache[n] = words
        return words

    def dim(self, n: int) -> int:
        return len(self.basis(n))

    def reduce(self, p: NCPoly) -> dict:
        """Coordinates of a homogeneous element in the basis of its degree."""
        if self.monomial:
            return {w: c for w, c in p.terms.items() if self._is_normal(w)}
        d = p.degree
        if d is None:
            return {}
        return self.ideal(d).reduce(p.terms)

    def is_zero(self, p: NCPoly) -> bool:
        return not self.reduce(p)


@dataclass(frozen=True)
class SplittingReport:
    maxdeg: int
    domain_dims: tuple[int, ...]
    target_dims: tuple[int, ...]
    kernel_dims: tuple[int, ...]
    cokernel_dims: tuple[int, ...]
    side: str = "right"
    note: str = field(default=(
        "map (a_1..a_m) -> sum e_i a_i of right modules; the image is the right ideal sum e_i A"
    ))

    @property
    def injective_up_to(self) -> int:
        """Largest N' such that every degree <= N' has zero kernel (-1 if none)."""
        for n, k in enumerate(self.kernel_dims):
            if k:
                return n - 1
        return self.maxdeg

    @property
    def injective(self) -> bool:
        return not any(self.kernel_dims)


def verify_module_splitting(p: Presentation, elements: Sequence[NCPoly], maxdeg: int,
                            quotient: GradedQuotient | None = None) -> SplittingReport:
    """Kernel and cokernel dimensions of ``(a_i) -> sum e_i a_i`` in degrees 0..maxdeg.

    The domain is ``m`` copies of the algebra shifted by one, so in degree n
    it is ``m * dim A_{n-1}``; the target is ``A_n``.
    """
    for e in elements:
        if e and e.degree != 1:
            raise ValueError("splitting elements must be homogeneous of degree 1")
    q = quotient or GradedQuotient(p)
    dom, tgt, ker, cok = [], [], [], []
    for n in range(maxdeg + 1):
        target_dim = q.dim(n)
        src = q.basis(n - 1) if n >= 1 else []
        image = Echelon()
        for e in elements:
            for b in src:
                image.add(q.reduce(e * NCPoly.word(b)))
        d = len(elements) * len(src)
        dom.append(d)
        tgt.append(target_dim)
        ker.append(d - image.rank)
        cok.append(target_dim - image.rank)
    return SplittingReport(maxdeg, tuple(dom), tuple(tgt), tuple(ker), tuple(cok))
