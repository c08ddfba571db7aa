import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncgraded.errors import NotDegenerate
from ncgraded.exactnum import OMEGA, OMEGA2, ONE, ZERO, Eis
from ncgraded.ncalg import LinearChange, NCPoly, is_isomorphism_witness, span_equal
from ncgraded.sklyanin import (
    MONOMIAL_A,
    MONOMIAL_A_PRIME,
    FamilyTag,
    SklyaninParams,
    build_relations,
    classify,
    count_D,
    degenerate_points,
    sklyanin_relations,
    validate_witness,
    witness_change,
)

X, Y, Z = (NCPoly.gen(i) for i in range(3))


def test_relations_at_one_one_one():
    assert sklyanin_relations((1, 1, 1)) == (Y * Z + Z * Y + X * X, Z * X + X * Z + Y * Y, X * Y + Y * X + Z * Z)


def test_relations_at_coordinate_points():
    assert span_equal(list(build_relations((0, 0, 1)).relations), [X * X, Y * Y, Z * Z])
    assert span_equal(list(build_relations((1, 0, 0)).relations), [Y * Z, Z * X, X * Y])


def test_params_normalised():
    p = SklyaninParams(0, 2, 4)
    assert p.coords == (ZERO, ONE, Eis(2))
    with pytest.raises(ValueError):
        SklyaninParams(0, 0, 0)


@pytest.mark.parametrize("point,tag", [
    ((1, 1, 1), FamilyTag.DEGENERATE_A),
    ((1, OMEGA, 1), FamilyTag.DEGENERATE_A_PRIME),
    ((1, 2, 3), FamilyTag.NON_DEGENERATE),
    ((0, 0, 1), FamilyTag.DEGENERATE_A),
    ((1, 0, 0), FamilyTag.DEGENERATE_A_PRIME),
    ((0, 1, 0), FamilyTag.DEGENERATE_A_PRIME),
    ((1, 1, 0), FamilyTag.NON_DEGENERATE),
])
def test_classify_examples(point, tag):
    assert classify(point).tag is tag


def test_degenerate_locus_has_twelve_points():
    n, pts = count_D()
    assert n == 12 and len(set(pts)) == 12
    assert all(classify(p).degenerate for p in pts)
    for p in pts[3:]:
        assert p.a ** 3 == p.b ** 3 == p.c ** 3 == ONE
    assert sum(classify(p).tag is FamilyTag.DEGENERATE_A for p in pts) == 4


@pytest.mark.parametrize("p", degenerate_points(), ids=str)
def test_every_witness_validates(p):
    assert validate_witness(p)
    c = witness_change(p)
    assert is_isomorphism_witness(build_relations(p), classify(p).target, c)


def test_witness_shapes():
    assert witness_change((1, 1, 1)) == LinearChange([[1, 1, 1], [1, OMEGA, OMEGA2], [1, OMEGA2, OMEGA]])
    assert witness_change((0, 0, 1)) == LinearChange.identity(3)
    for p in degenerate_points()[:3]:
        m = witness_change(p).matrix
        assert all(sorted(row, key=lambda e: e == ONE) == [ZERO, ZERO, ONE] for row in m)
    with pytest.raises(NotDegenerate):
        witness_change((1, 2, 3))


def test_case_two_determinant():
    ci = OMEGA.inverse()
    c = witness_change((1, 1, OMEGA))
    assert c.matrix[0] == (ONE, ONE, ci)
    assert c.determinant() == -(ci - 1) ** 2 * (ci + 2)
    assert c.determinant() != ZERO
    assert validate_witness((1, 1, OMEGA))


def test_case_three_product():
    a, b, c = ONE, OMEGA, OMEGA2
    u, v, w = witness_change((a, b, c)).images()
    f1, f2, f3 = sklyanin_relations((a, b, c))
    assert v * w == f1 * a + f2 * b + f3 * c
    assert is_isomorphism_witness(build_relations((a, b, c)), MONOMIAL_A_PRIME, LinearChange([[a.inverse(), b.inverse(), c.inverse()], [b.inverse(), a.inverse(), c.inverse()], [a * b * c, a * b * c, 1]]))


nonzero = st.builds(Eis, st.integers(-4, 4), st.integers(-4, 4)).filter(bool)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(degenerate_points() + [SklyaninParams(1, 2, 3), SklyaninParams(2, 1, OMEGA)]), nonzero)
def test_classify_invariant_under_rescaling(p, s):
    q = (p.a * s, p.b * s, p.c * s)
    assert classify(q) == classify(p)
    assert span_equal(list(build_relations(q).relations), list(build_relations(p).relations))


def test_random_nondegenerate_points_have_no_identity_witness():
    rng = random.Random(20261014)
    ident = LinearChange.identity(3)
    seen = 0
    while seen < 50:
        p = tuple(Eis(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(3))
        if not any(p) or classify(p).degenerate:
            continue
        seen += 1
        assert classify(p).tag is FamilyTag.NON_DEGENERATE
        s = build_relations(p)
        assert not is_isomorphism_witness(s, MONOMIAL_A, ident)
        assert not is_isomorphism_witness(s, MONOMIAL_A_PRIME, ident)
