"""Linear changes of generators, relation spans, and Zhang twists."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import DimensionMismatch, InhomogeneousInput, NonQuadratic, SingularMatrix
from ..exactnum import Eis
from ..exactnum import linalg
from ..exactnum.linalg import Echelon
from .poly import NCPoly
from .presentation import Presentation


class LinearChange:
    """Square matrix over Q(w); row i is the image of generator i.

    ``substitute(p, c)`` replaces generator i by ``sum_j c[i][j] * gen_j``.
    Used as an isomorphism witness, the rows express the *target*
    presentation's generators in terms of the *source* generators, exactly as
    one writes ``u = x + y + z`` when changing variables.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix: Iterable[Iterable]):
        m = tuple(tuple(Eis.coerce(x) for x in row) for row in matrix)
        n = len(m)
        if n == 0 or any(len(r) != n for r in m):
            raise DimensionMismatch("a linear change needs a nonempty square matrix")
        if linalg.det([list(r) for r in m]) == 0:
            raise SingularMatrix("linear change of generators is not invertible")
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name, value):
        raise AttributeError("LinearChange is immutable")

    @classmethod
    def identity(cls, n: int) -> "LinearChange":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, images: Sequence[int]) -> "LinearChange":
        """Generator i maps to generator ``images[i]``."""
        n = len(images)
        return cls([[int(images[i] == j) for j in range(n)] for i in range(n)])

    @property
    def size(self) -> int:
        return len(self.matrix)

    def determinant(self) -> Eis:
        return linalg.det([list(r) for r in self.matrix])

    def inverse(self) -> "LinearChange":
        return LinearChange(linalg.inverse([list(r) for r in self.matrix]))

    def compose(self, other: "LinearChange") -> "LinearChange":
        """The change ``self`` followed by ``other`` (substitute self, then other)."""
        return LinearChange(linalg.matmul([list(r) for r in self.matrix], [list(r) for r in other.matrix]))

    def image(self, i: int) -> NCPoly:
        return NCPoly.linear(self.matrix[i])

    def images(self) -> list[NCPoly]:
        return [self.image(i) for i in range(self.size)]

    def __eq__(self, other):
        return isinstance(other, LinearChange) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LinearChange({[[str(x) for x in r] for r in self.matrix]})"


def substitute(p: NCPoly, c: LinearChange) -> NCPoly:
    if p.max_generator() >= c.size:
        raise DimensionMismatch(f"polynomial uses generator {p.max_generator()} but change has size {c.size}")
    imgs = c.images()
    total = NCPoly()
    for word, coef in p:
        term = NCPoly({(): coef})
        for letter in word:
            term = term * imgs[letter]
        total = total + term
    return total


def _common_degree(polys: Sequence[NCPoly], degree: int | None) -> int | None:
    for p in polys:
        if not p:
            continue
        if not p.is_homogeneous():
            raise InhomogeneousInput("span comparison needs homogeneous polynomials")
        d = p.degree
        if degree is None:
            degree = d
        elif d != degree:
            raise InhomogeneousInput(f"expected degree {degree}, found {d}")
    return degree


def relation_space(polys: Iterable[NCPoly]) -> Echelon:
    e = Echelon()
    for p in polys:
        e.add(p.terms)
    return e


def span_equal(rels1: Sequence[NCPoly], rels2: Sequence[NCPoly], degree: int | None = None) -> bool:
    """Do the two lists span the same subspace of the degree-d word space?"""
    d = _common_degree(list(rels1), degree)
    _common_degree(list(rels2), d)
    e1 = relation_space(rels1)
    e2 = relation_space(rels2)
    if e1.rank != e2.rank:
        return False
    return all(e1.contains(p.terms) for p in rels2)


def spans_contain(rels: Sequence[NCPoly], p: NCPoly) -> bool:
    return relation_space(rels).contains(p.terms)


def is_isomorphism_witness(source: Presentation, target: Presentation, c: LinearChange) -> bool:
    """Does ``c`` induce an isomorphism between the two quotient algebras?

    The rows of ``c`` write each target generator in the source generators;
    substituting them into the target relations must reproduce the span of
    the source relations.
    """
    if source.ngens != target.ngens or c.size != source.ngens:
        raise DimensionMismatch(f"generator counts {source.ngens}, {target.ngens}, change size {c.size}")
    sd, td = set(source.relation_degrees), set(target.relation_degrees)
    if len(sd) > 1 or len(td) > 1:
        raise InhomogeneousInput("relations of mixed degree")
    if sd != td:
        return False
    if c.determinant() == 0:
        return False
    pulled = [substitute(r, c) for r in target.relations]
    return span_equal(pulled, list(source.relations))


class GradedAutomorphism:
    """A degree-0 automorphism of ``presentation`` given on the generators."""

    __slots__ = ("presentation", "change")

    def __init__(self, presentation: Presentation, matrix):
        change = matrix if isinstance(matrix, LinearChange) else LinearChange(matrix)
        if change.size != presentation.ngens:
            raise DimensionMismatch("automorphism size does not match generator count")
        moved = [substitute(r, change) for r in presentation.relations]
        if not span_equal(moved, list(presentation.relations)):
            raise ValueError("matrix does not preserve the relation space")
        object.__setattr__(self, "presentation", presentation)
        object.__setattr__(self, "change", change)

    def __setattr__(self, name, value):
        raise AttributeError("GradedAutomorphism is immutable")

    @classmethod
    def from_images(cls, presentation: Presentation, images: Sequence[str]) -> "GradedAutomorphism":
        """Permutation automorphism, ``images[i]`` naming where generator i goes."""
        return cls(presentation, LinearChange.permutation([presentation.index(n) for n in images]))

    @property
    def matrix(self):
        return self.change.matrix

    def __call__(self, p: NCPoly) -> NCPoly:
        return substitute(p, self.change)

    def inverse(self) -> "GradedAutomorphism":
        return GradedAutomorphism(self.presentation, self.change.inverse())


def zhang_twist(p: Presentation, tau: GradedAutomorphism) -> Presentation:
    """Relations of the twist with multiplication ``x*y = x tau(y)``.

    A relation ``sum c_ij x_i x_j`` becomes ``sum c_ij x_i tau^{-1}(x_j)``
    so that, read with the twisted product, it is the original relation.
    """
    if any(d != 1 for d in p.generator_degrees):
        raise NonQuadratic("twisting needs all generators in degree 1")
    if not p.is_quadratic():
        raise NonQuadratic("only quadratic relations can be twisted")
    if tau.change.size != p.ngens:
        raise DimensionMismatch("automorphism size does not match generator count")
    if tau.presentation is not p and not same_relation_span(tau.presentation, p):
        raise ValueError("automorphism was built for a different relation space")
    inv_images = tau.change.inverse().images()
    new_rels = []
    for rel in p.relations:
        acc = NCPoly()
        for (left, right), coef in rel:
            acc = acc + NCPoly.gen(left) * inv_images[right] * coef
        new_rels.append(acc)
    return p.with_relations(new_rels)


def same_relation_span(p: Presentation, q: Presentation) -> bool:
    if p.ngens != q.ngens:
        return False
    return span_equal(list(p.relations), list(q.relations))
