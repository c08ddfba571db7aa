"""The (a, b, c) family of quadratic algebras on x, y, z.

For a point (a:b:c) of the projective plane the relations are

    f1 = a yz + b zy + c x^2
    f2 = a zx + b xz + c y^2
    f3 = a xy + b yx + c z^2

The degenerate locus consists of the three coordinate points and the nine
points with a^3 = b^3 = c^3.  Each degenerate member is isomorphic to one of
the monomial algebras ``MONOMIAL_A`` (u^2, v^2, w^2) or ``MONOMIAL_A_PRIME``
(uv, vw, wu), and :func:`witness_change` produces an explicit change of
generators proving it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from .errors import NotDegenerate
from .exactnum import OMEGA, ONE, Eis, cube_roots_of_unity
from .ncalg import LinearChange, NCPoly, Presentation, is_isomorphism_witness, parse_presentation

X, Y, Z = 0, 1, 2

MONOMIAL_A = parse_presentation("gens: u v w\nrel: u*u\nrel: v*v\nrel: w*w\n")
MONOMIAL_A_PRIME = parse_presentation("gens: u v w\nrel: u*v\nrel: v*w\nrel: w*u\n")


@dataclass(frozen=True)
class SklyaninParams:
    """Projective point (a:b:c), normalised so the first nonzero entry is 1."""

    a: Eis
    b: Eis
    c: Eis

    def __post_init__(self):
        coords = [Eis.coerce(x) for x in (self.a, self.b, self.c)]
        lead = next((x for x in coords if x), None)
        if lead is None:
            raise ValueError("(a, b, c) must not be (0, 0, 0)")
        coords = [x / lead for x in coords]
        for name, val in zip("abc", coords):
            object.__setattr__(self, name, val)

    @property
    def coords(self) -> tuple[Eis, Eis, Eis]:
        return (self.a, self.b, self.c)

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.coords) + ")"


class FamilyTag(enum.Enum):
    NON_DEGENERATE = "NonDegenerate"
    DEGENERATE_A = "DegenerateA"
    DEGENERATE_A_PRIME = "DegenerateAPrime"


@dataclass(frozen=True)
class FamilyClass:
    tag: FamilyTag
    detail: str

    @property
    def degenerate(self) -> bool:
        return self.tag is not FamilyTag.NON_DEGENERATE

    @property
    def target(self) -> Presentation | None:
        if self.tag is FamilyTag.DEGENERATE_A:
            return MONOMIAL_A
        if self.tag is FamilyTag.DEGENERATE_A_PRIME:
            return MONOMIAL_A_PRIME
        return None


def _as_params(p) -> SklyaninParams:
    if isinstance(p, SklyaninParams):
        return p
    return SklyaninParams(*p)


def build_relations(p) -> Presentation:
    return Presentation(("x", "y", "z"), sklyanin_relations(p))


def sklyanin_relations(p) -> tuple[NCPoly, NCPoly, NCPoly]:
    """The three relations as a tuple, zero polynomials included."""
    p = _as_params(p)
    a, b, c = p.coords
    return tuple(
        NCPoly({(i, j): a}) + NCPoly({(j, i): b}) + NCPoly({(k, k): c})
        for i, j, k in ((Y, Z, X), (Z, X, Y), (X, Y, Z))
    )


def _is_coordinate_point(p: SklyaninParams) -> bool:
    return sum(1 for x in p.coords if x) == 1


def classify(p) -> FamilyClass:
    p = _as_params(p)
    if _is_coordinate_point(p):
        detail = "coordinate point"
    elif p.a ** 3 == p.b ** 3 == p.c ** 3:
        detail = "a^3 = b^3 = c^3"
    else:
        return FamilyClass(FamilyTag.NON_DEGENERATE, "not in the degenerate locus")
    tag = FamilyTag.DEGENERATE_A if p.a == p.b else FamilyTag.DEGENERATE_A_PRIME
    return FamilyClass(tag, detail)


def degenerate_points() -> list[SklyaninParams]:
    """The twelve degenerate points: coordinate points, then (1, w^i, w^j)."""
    pts = [SklyaninParams(1, 0, 0), SklyaninParams(0, 1, 0), SklyaninParams(0, 0, 1)]
    roots = cube_roots_of_unity()
    pts += [SklyaninParams(ONE, b, c) for b, c in product(roots, roots)]
    return pts


def count_D() -> tuple[int, list[SklyaninParams]]:
    pts = degenerate_points()
    return len(pts), pts


def witness_change(p) -> LinearChange:
    """Change of generators taking the degenerate algebra at ``p`` to A or A'.

    Rows give u, v, w in terms of x, y, z.
    """
    p = _as_params(p)
    cls = classify(p)
    if not cls.degenerate:
        raise NotDegenerate(f"{p} is not a degenerate point")
    a, b, c = p.coords
    if _is_coordinate_point(p):
        if c:
            return LinearChange.identity(3)  # x^2, y^2, z^2
        if a:
            return LinearChange.identity(3)  # yz, zx, xy
        # zy, xz, yx: u = x, v = z, w = y gives uv = xz, vw = zy, wu = yx
        return LinearChange.permutation([X, Z, Y])
    if a == b == c:
        w1, w2 = OMEGA, OMEGA ** 2
        return LinearChange([[1, 1, 1], [1, w1, w2], [1, w2, w1]])
    if a == b:
        ci = c.inverse()
        return LinearChange([[1, 1, ci], [1, ci, 1], [ci, 1, 1]])
    ai, bi, ci = a.inverse(), b.inverse(), c.inverse()
    abc = a * b * c
    return LinearChange([[ai, bi, ci], [bi, ai, ci], [abc, abc, ONE]])


def validate_witness(p) -> bool:
    p = _as_params(p)
    cls = classify(p)
    if not cls.degenerate:
        return False
    return is_isomorphism_witness(build_relations(p), cls.target, witness_change(p))


def in_degenerate_locus(p) -> bool:
    return classify(p).degenerate


__all__ = [
    "MONOMIAL_A", "MONOMIAL_A_PRIME", "SklyaninParams", "FamilyTag", "FamilyClass",
    "build_relations", "sklyanin_relations", "classify", "degenerate_points", "count_D",
    "witness_change", "validate_witness", "in_degenerate_locus",
]
