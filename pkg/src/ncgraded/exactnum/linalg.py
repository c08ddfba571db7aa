"""Exact linear algebra over a field (Fraction or Eis entries).

Dense routines work on lists of rows.  :class:`Echelon` is a sparse,
incremental row space keyed by any totally ordered column labels (words,
in practice), used wherever the ambient dimension is large.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence

from ..errors import SingularMatrix


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns (first-nonzero pivoting)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def kernel(rows: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Basis of the right kernel ``{x : rows @ x = 0}``."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [j for j in range(ncols) if j not in pivots]
    zero = (red[0][0] * 0) if red else 0
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = zero + 1
        for row, pcol in zip(red, pivots):
            vec[pcol] = -row[f]
        basis.append(vec)
    return basis


def inverse(rows: Sequence[Sequence]) -> list[list]:
    n = len(rows)
    one = rows[0][0] * 0 + 1
    zero = one - one
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in red]


def det(rows: Sequence[Sequence]):
    """Determinant by Gaussian elimination over the field."""
    m = [list(r) for r in rows]
    n = len(m)
    result = m[0][0] * 0 + 1 if n else 1
    for k in range(n):
        pr = next((i for i in range(k, n) if m[i][k]), None)
        if pr is None:
            return result * 0
        if pr != k:
            m[k], m[pr] = m[pr], m[k]
            result = -result
        result = result * m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            if m[i][k]:
                f = m[i][k] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return result


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(r, c)), r[0] * 0) for c in cols] for r in a]


class Echelon:
    """Sparse row space with pivot = least column label of each stored row."""

    def __init__(self):
        self._pivots: dict[Hashable, dict] = {}

    def __len__(self):
        return len(self._pivots)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivot_columns(self):
        return self._pivots.keys()

    def reduce(self, row: Mapping) -> dict:
        """Canonical remainder of ``row`` modulo the stored space.

        Every pivot column is cleared.  Eliminating the least pivot label
        first only introduces larger labels, so the loop terminates.
        """
        row = {k: v for k, v in row.items() if v}
        while True:
            candidates = [k for k in row if k in self._pivots]
            if not candidates:
                return row
            k = min(candidates)
            f = row[k]
            for key, val in self._pivots[k].items():
                nv = row.get(key, 0) - f * val
                if nv:
                    row[key] = nv
                else:
                    row.pop(key, None)

    def add(self, row: Mapping) -> bool:
        """Insert ``row``; return True when it enlarged the space."""
        red = self.reduce(row)
        if not red:
            return False
        lead = min(red)
        inv = 1 / red[lead]
        self._pivots[lead] = {k: v * inv for k, v in red.items()}
        return True

    def contains(self, row: Mapping) -> bool:
        return not self.reduce(row)


def span_rank(rows: Iterable[Mapping]) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank
