"""Quivers, path algebras, Veronese quivers and cyclic McKay quivers.

Paths compose left to right: ``ab`` is the path that follows ``a`` and then
``b``, and needs ``target(a) == source(b)``.  This matches right modules,
where ``f(u) f(v)`` mirrors the word ``uv``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .errors import TooLarge
from .exactnum import Eis, IntMatrix, mat_pow
from .ncalg import NCPoly, Presentation

DEFAULT_ISO_BOUND = 8


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    label: str


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...]
    vertex_names: tuple[str, ...] = ()

    def __post_init__(self):
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        if self.vertex_count < 0:
            raise ValueError("negative vertex count")
        for a in arrows:
            if not (0 <= a.source < self.vertex_count and 0 <= a.target < self.vertex_count):
                raise ValueError(f"arrow {a.label} has an endpoint out of range")
        labels = [a.label for a in arrows]
        if len(set(labels)) != len(labels):
            raise ValueError("arrow labels must be distinct")
        names = tuple(self.vertex_names) or tuple(str(i + 1) for i in range(self.vertex_count))
        if len(names) != self.vertex_count:
            raise ValueError("one name per vertex")
        object.__setattr__(self, "vertex_names", names)

    def arrow(self, label: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.label == label:
                return i
        raise KeyError(label)

    def loop_count(self) -> int:
        return sum(1 for a in self.arrows if a.source == a.target)

    def out_arrows(self, v: int) -> list[int]:
        return [i for i, a in enumerate(self.arrows) if a.source == v]

    def paths(self, n: int) -> list[tuple[int, ...]]:
        """All composable arrow sequences of length n (n = 0 gives the trivial paths, one per vertex)."""
        if n == 0:
            return [() for _ in range(self.vertex_count)]
        paths = [(i,) for i in range(len(self.arrows))]
        for _ in range(n - 1):
            paths = [p + (j,) for p in paths for j in self.out_arrows(self.arrows[p[-1]].target)]
        return paths

    def relabel(self, perm: Sequence[int]) -> "Quiver":
        """Move vertex i to position ``perm[i]``."""
        names = [""] * self.vertex_count
        for i, j in enumerate(perm):
            names[j] = self.vertex_names[i]
        return Quiver(self.vertex_count,
                      tuple(Arrow(perm[a.source], perm[a.target], a.label) for a in self.arrows),
                      tuple(names))


def adjacency(q: Quiver) -> IntMatrix:
    n = q.vertex_count
    m = [[0] * n for _ in range(n)]
    for a in q.arrows:
        m[a.source][a.target] += 1
    return IntMatrix(m)


def veronese(q: Quiver, n: int) -> Quiver:
    """Same vertices; one arrow per path of length n, labelled by its arrows joined with '.'."""
    if n < 1:
        raise ValueError("Veronese degree must be at least 1")
    arrows = []
    for p in q.paths(n):
        first, last = q.arrows[p[0]], q.arrows[p[-1]]
        arrows.append(Arrow(first.source, last.target, ".".join(q.arrows[i].label for i in p)))
    return Quiver(q.vertex_count, tuple(arrows), q.vertex_names)


def path_count(q: Quiver, n: int) -> int:
    if n < 0:
        raise ValueError("negative path length")
    m = mat_pow(adjacency(q), n) if q.vertex_count else None
    if m is None:
        return 0
    return sum(sum(r) for r in m.entries)


class PathElement:
    """Homogeneous element of the path algebra kQ."""

    __slots__ = ("quiver", "degree", "_terms")

    def __init__(self, quiver: Quiver, degree: int, terms: Mapping[tuple[int, ...], object] = ()):
        acc: dict[tuple[int, ...], Eis] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for path, coef in items:
            path = tuple(path)
            if len(path) != degree:
                raise ValueError(f"path {path} does not have length {degree}")
            if not _composable(quiver, path):
                raise ValueError(f"path {path} is not composable")
            c = acc.get(path, 0) + Eis.coerce(coef)
            if c:
                acc[path] = c
            else:
                acc.pop(path, None)
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("PathElement is immutable")

    @classmethod
    def arrows_sum(cls, quiver: Quiver, labels: Iterable[str], coeffs: Iterable | None = None) -> "PathElement":
        labels = list(labels)
        coeffs = list(coeffs) if coeffs is not None else [1] * len(labels)
        return cls(quiver, 1, {(quiver.arrow(l),): c for l, c in zip(labels, coeffs)})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("can only add path elements of equal degree")
        return PathElement(self.quiver, self.degree, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return PathElement(self.quiver, self.degree, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PathElement):
            out: dict[tuple[int, ...], Eis] = {}
            arrows = self.quiver.arrows
            for p1, c1 in self._terms.items():
                end = arrows[p1[-1]].target if p1 else None
                for p2, c2 in other._terms.items():
                    if p1 and p2 and end != arrows[p2[0]].source:
                        continue
                    p = p1 + p2
                    out[p] = out.get(p, 0) + c1 * c2
            return PathElement(self.quiver, self.degree + other.degree, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s) -> "PathElement":
        s = Eis.coerce(s)
        return PathElement(self.quiver, self.degree, {p: c * s for p, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, PathElement):
            return self.degree == other.degree and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, frozenset(self._terms.items())))

    def __repr__(self):
        labels = self.quiver.arrows
        body = " + ".join(f"{c}*{'.'.join(labels[i].label for i in p)}" for p, c in sorted(self._terms.items()))
        return f"PathElement({body or '0'})"


def _composable(q: Quiver, path: tuple[int, ...]) -> bool:
    arrows = q.arrows
    return all(arrows[path[i]].target == arrows[path[i + 1]].source for i in range(len(path) - 1))


def evaluate(p: NCPoly, q: Quiver, assignment: Sequence[PathElement]) -> dict:
    """Image of ``p`` under generator i -> assignment[i], grouped by degree."""
    by_degree: dict[int, PathElement] = {}
    for word, coef in p:
        if not word:
            raise ValueError("constant terms cannot be evaluated in kQ")
        term = assignment[word[0]]
        for letter in word[1:]:
            term = term * assignment[letter]
        term = term.scale(coef)
        d = term.degree
        by_degree[d] = by_degree[d] + term if d in by_degree else term
    return by_degree


def algebra_hom_check(P: Presentation, Q: Quiver, assignment: Mapping[str, PathElement] | Sequence[PathElement]) -> bool:
    """Do the assigned degree-1 elements satisfy every relation of P in kQ?"""
    if isinstance(assignment, Mapping):
        missing = [n for n in P.generator_names if n not in assignment]
        if missing:
            raise ValueError(f"assignment is missing generators {missing}")
        images = [assignment[n] for n in P.generator_names]
    else:
        images = list(assignment)
        if len(images) != P.ngens:
            raise ValueError("assignment length does not match generator count")
    for img in images:
        if img.degree != 1 or img.quiver != Q:
            raise ValueError("assignment must consist of degree-1 elements of kQ")
    return all(not any(evaluate(rel, Q, images).values()) for rel in P.relations)


def quiver_iso(q1: Quiver, q2: Quiver, bound: int = DEFAULT_ISO_BOUND) -> tuple[int, ...] | None:
    """Vertex bijection ``perm`` with ``adj1[i][j] == adj2[perm[i]][perm[j]]``, or None."""
    n = q1.vertex_count
    if max(n, q2.vertex_count) > bound:
        raise TooLarge(f"quiver_iso is brute force; {max(n, q2.vertex_count)} vertices exceeds {bound}")
    if n != q2.vertex_count or len(q1.arrows) != len(q2.arrows):
        return None
    if q1.loop_count() != q2.loop_count():
        return None
    a1, a2 = adjacency(q1).entries, adjacency(q2).entries

    def signature(a, i):
        return (a[i][i], sum(a[i]), sum(r[i] for r in a))

    sig1 = [signature(a1, i) for i in range(n)]
    sig2 = [signature(a2, i) for i in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    for perm in permutations(range(n)):
        if any(sig1[i] != sig2[perm[i]] for i in range(n)):
            continue
        if all(a1[i][j] == a2[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return perm
    return None


@dataclass(frozen=True)
class McKayWeights:
    group_order: int
    generator_weights: tuple[int, ...]
    generator_names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.group_order < 1:
            raise ValueError("group order must be positive")
        weights = tuple(self.generator_weights)
        if any(not (0 <= w < self.group_order) for w in weights):
            raise ValueError("weights must lie in [0, group_order)")
        object.__setattr__(self, "generator_weights", weights)
        names = tuple(self.generator_names) or _default_gen_names(len(weights))
        object.__setattr__(self, "generator_names", names)


def _default_gen_names(k: int) -> tuple[str, ...]:
    base = "XYZTUVW"
    return tuple(base[i] if i < len(base) else f"X{i}" for i in range(k))


def mckay_quiver(w: McKayWeights) -> Quiver:
    """Vertex i is the character xi -> xi^i; a weight-d generator gives arrows i -> i + d."""
    n = w.group_order
    arrows = []
    for name, d in zip(w.generator_names, w.generator_weights):
        for i in range(n):
            arrows.append(Arrow(i, (i + d) % n, f"{name}{i}"))
    return Quiver(n, tuple(arrows), tuple(str(i) for i in range(n)))


def skew_group_graded_dim(g: int, n: int, d: int) -> int:
    """dim of the degree-d part of F * mu_n for F free on g degree-1 generators."""
    if d < 0:
        raise ValueError("negative degree")
    return n * g ** d


def to_dot(q: Quiver, name: str = "Q") -> str:
    lines = [f"digraph {name} {{"]
    for i in range(q.vertex_count):
        lines.append(f'  v{i} [label="{q.vertex_names[i]}"];')
    for a in q.arrows:
        lines.append(f'  v{a.source} -> v{a.target} [label="{a.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(q: Quiver) -> dict:
    return {
        "vertices": list(q.vertex_names),
        "arrows": [{"source": a.source + 1, "target": a.target + 1, "label": a.label} for a in q.arrows],
        "adjacency": adjacency(q).tolist(),
    }


# Q and Q' for A = k<u,v,w>/(u^2,v^2,w^2) and A' = k<u,v,w>/(uv,vw,wu); arrows
# out of a vertex are named after its letter.  Q' is numbered u, w, v so its
# adjacency matrix is the circulant [[1,1,0],[0,1,1],[1,0,1]].
QUIVER_Q = Quiver(3, (
    Arrow(0, 1, "u1"), Arrow(0, 2, "u2"),
    Arrow(1, 2, "v1"), Arrow(1, 0, "v2"),
    Arrow(2, 0, "w1"), Arrow(2, 1, "w2"),
))

QUIVER_Q_PRIME = Quiver(3, (
    Arrow(0, 0, "u1"), Arrow(0, 1, "u2"),
    Arrow(2, 2, "v1"), Arrow(2, 0, "v2"),
    Arrow(1, 1, "w1"), Arrow(1, 2, "w2"),
))


def standard_assignment(q: Quiver) -> dict[str, PathElement]:
    """u -> u1 + u2, v -> v1 + v2, w -> w1 + w2."""
    return {g: PathElement.arrows_sum(q, [f"{g}1", f"{g}2"]) for g in "uvw"}
