"""Stationary Bratteli diagrams and the direct limit of Z^k along an integer matrix.

The limit ``Z^k -> Z^k -> ...`` (each map multiplication by M) is modelled as
the subgroup ``union_n M^-n Z^k`` of Q^k, which is valid when det M != 0.
Membership in that subgroup is the primary, unconditional interface.  The
eigen-decomposition descriptor is secondary and needs a rational spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import IrrationalSpectrum, RepeatedRoots, SingularMatrix
from .exactnum import IntMatrix, UniPoly, kernel, mat_pow, poly_det, rational_inverse, smith_normal_form


def _as_matrix(m) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix(m)


def _check_square_nonnegative(m: IntMatrix) -> None:
    if not m.is_square:
        raise ValueError(f"expected a square matrix, got {m.rows}x{m.cols}")
    if any(x < 0 for row in m.entries for x in row):
        raise ValueError("matrix entries must be nonnegative")


@dataclass(frozen=True)
class BratteliDiagram:
    """Stationary diagram: level n+1 sizes are ``matrix @ level n sizes``."""

    matrix: IntMatrix
    initial_sizes: tuple[int, ...]

    def __post_init__(self):
        m = _as_matrix(self.matrix)
        _check_square_nonnegative(m)
        sizes = tuple(int(s) for s in self.initial_sizes)
        if len(sizes) != m.rows:
            raise ValueError("one initial size per vertex")
        if any(s <= 0 for s in sizes):
            raise ValueError("initial sizes must be positive")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "initial_sizes", sizes)

    @property
    def width(self) -> int:
        return self.matrix.rows


def level_sizes(b: BratteliDiagram, n: int) -> tuple[int, ...]:
    if n < 0:
        raise ValueError("level must be nonnegative")
    return mat_pow(b.matrix, n).apply(b.initial_sizes)


def is_simple_stationary(m) -> tuple[bool, int | None]:
    """Primitivity test: least n <= k^2 with M^n entrywise positive."""
    m = _as_matrix(m)
    _check_square_nonnegative(m)
    k = m.rows
    power = m
    for n in range(1, k * k + 1):
        if all(x > 0 for row in power.entries for x in row):
            return True, n
        power = power @ m
    return False, None


def _require_invertible(m: IntMatrix) -> int:
    if not m.is_square:
        raise ValueError("expected a square matrix")
    d = m.det()
    if d == 0:
        raise SingularMatrix("the direct limit model needs det M != 0")
    return d


def limit_membership(m, v: Sequence, bound: int) -> int | None:
    """Least n <= bound with M^n v integral, or None."""
    m = _as_matrix(m)
    _require_invertible(m)
    vec = tuple(Fraction(x) for x in v)
    if len(vec) != m.cols:
        raise ValueError("vector length mismatch")
    for n in range(bound + 1):
        if all(x.denominator == 1 for x in vec):
            return n
        vec = m.apply(vec)
    return None


def lattice_chain_quotients(m, n: int) -> list[int]:
    """Orders of M^-(i+1) Z^k / M^-i Z^k for i < n, each from Smith forms.

    All lattices are scaled by d = |det M|^n so they sit inside Z^k; the
    index of a full-rank sublattice is the product of its invariant factors.
    """
    m = _as_matrix(m)
    det = abs(_require_invertible(m))
    scale = det ** n
    inv = rational_inverse(m)
    k = m.rows

    def covolume(power: int) -> int:
        acc = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
        for _ in range(power):
            acc = [[sum(acc[i][t] * inv[t][j] for t in range(k)) for j in range(k)] for i in range(k)]
        scaled = IntMatrix([[int(x * scale) for x in row] for row in acc])
        _, d, _ = smith_normal_form(scaled)
        out = 1
        for x in d.diagonal():
            out *= x
        return out

    vols = [covolume(i) for i in range(n + 1)]
    return [vols[i] // vols[i + 1] for i in range(n)]


@dataclass(frozen=True)
class EigenDatum:
    eigenvalue: int
    eigenvector: tuple[int, ...]
    component: str


@dataclass(frozen=True)
class DimensionGroupDescriptor:
    rank: int
    eigen_data: tuple[EigenDatum, ...]
    eigenbasis_index: int
    period: int
    caveat: str | None = None

    @property
    def summary(self) -> str:
        return " ⊕ ".join(e.component for e in self.eigen_data)

    @property
    def certified(self) -> bool:
        """True when the eigenvectors span Z^rank, so the split is exact."""
        return self.eigenbasis_index == 1


def _char_poly(m: IntMatrix) -> UniPoly:
    t = UniPoly.t()
    k = m.rows
    return poly_det([[t * int(i == j) - m[i, j] for j in range(k)] for i in range(k)])


def _integer_roots(p: UniPoly) -> dict[int, int]:
    """Integer roots with multiplicity of a monic integer polynomial, plus leftover check."""
    roots: dict[int, int] = {}
    while p.degree > 0 and p.coeff(0) == 0:
        roots[0] = roots.get(0, 0) + 1
        p = p.exact_div(UniPoly.t())
    if p.degree > 0:
        c0 = abs(int(p.coeff(0)))
        cands = [d for d in range(1, c0 + 1) if c0 % d == 0]
        for d in cands:
            for r in (d, -d):
                lin = UniPoly([-r, 1])
                while p.degree > 0 and not (p % lin):
                    roots[r] = roots.get(r, 0) + 1
                    p = p.exact_div(lin)
    if p.degree > 0:
        raise IrrationalSpectrum(f"characteristic polynomial has a non-rational factor {p}")
    return roots


def _primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _saturate(vectors: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Basis of (Q-span of vectors) intersected with Z^k."""
    if len(vectors) <= 1:
        return vectors
    cols = IntMatrix(vectors).transpose()
    u, d, _ = smith_normal_form(cols)
    if all(x == 1 for x in d.diagonal()):
        return vectors
    uinv = rational_inverse(u)
    r = len(vectors)
    return [tuple(int(uinv[i][j]) for i in range(cols.rows)) for j in range(r)]


def _component(lam: int) -> str:
    if lam == 0:
        return "0"
    if abs(lam) == 1:
        return "Z"
    return f"Z[1/{abs(lam)}]"


def dimension_group(m, period: int = 1) -> DimensionGroupDescriptor:
    """Eigen-decomposition of ``M^period`` over Q, with integer eigenlattices.

    Repeated eigenvalues are accepted when the eigenspace has full
    dimension; a defective eigenvalue raises RepeatedRoots.
    """
    m = _as_matrix(m)
    if not m.is_square:
        raise ValueError("expected a square matrix")
    if period < 1:
        raise ValueError("period must be positive")
    mk = mat_pow(m, period)
    k = mk.rows
    roots = _integer_roots(_char_poly(mk))
    order = sorted(roots, key=lambda r: (-abs(r), -r))
    data: list[EigenDatum] = []
    for lam in order:
        shifted = [[Fraction(mk[i, j] - lam * int(i == j)) for j in range(k)] for i in range(k)]
        basis = [_primitive(v) for v in kernel(shifted, k)]
        if len(basis) < roots[lam]:
            raise RepeatedRoots(f"eigenvalue {lam} has multiplicity {roots[lam]} but eigenspace dimension {len(basis)}")
        for vec in _saturate(basis):
            data.append(EigenDatum(lam, vec, _component(lam)))
    index = abs(IntMatrix([d.eigenvector for d in data]).det())
    caveat = None
    if index != 1:
        caveat = (f"eigenvectors span a sublattice of index {index} in Z^{k}; "
                  "the direct-sum description is not certified by the eigen data alone")
    return DimensionGroupDescriptor(k, tuple(data), index, period, caveat)


def check_eigen_data(m, desc: DimensionGroupDescriptor) -> bool:
    mk = mat_pow(_as_matrix(m), desc.period)
    return all(mk.apply(d.eigenvector) == tuple(d.eigenvalue * x for x in d.eigenvector)
               for d in desc.eigen_data)


def bratteli_dot(b: BratteliDiagram, levels: int, name: str = "bratteli") -> str:
    """Levels 0..levels as ranked rows; M[j][i] parallel edges from i to j."""
    lines = [f"graph {name} {{", "  rankdir=TB;"]
    sizes = [level_sizes(b, n) for n in range(levels + 1)]
    for n, row in enumerate(sizes):
        nodes = " ".join(f'l{n}_{i} [label="{s}"];' for i, s in enumerate(row))
        lines.append(f"  {{ rank=same; {nodes} }}")
    for n in range(levels):
        for i in range(b.width):
            for j in range(b.width):
                for _ in range(b.matrix[j, i]):
                    lines.append(f"  l{n}_{i} -- l{n + 1}_{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bratteli_json(b: BratteliDiagram, levels: int) -> dict:
    return {
        "matrix": b.matrix.tolist(),
        "levels": [list(level_sizes(b, n)) for n in range(levels + 1)],
    }


# Incidence matrix of the stationary diagram 1,1,1 -> 2,2,2 -> 4,4,4 -> ...
K0_MATRIX = IntMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
THREE_VERTEX_DIAGRAM = BratteliDiagram(K0_MATRIX, (1, 1, 1))
DOUBLING_DIAGRAM = BratteliDiagram(IntMatrix([[2]]), (1,))
# class of the structure sheaf in the chosen coordinates, recorded rather than derived
STRUCTURE_SHEAF_CLASS = (1, 0, 0)
