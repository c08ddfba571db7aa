from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncgraded.errors import DivisionByZero, NonSquare, ScalarParseError, SingularSystem
from ncgraded.exactnum import (
    OMEGA,
    OMEGA2,
    ONE,
    ZERO,
    Eis,
    IntMatrix,
    RationalFunction,
    UniPoly,
    cube_roots_of_unity,
    eis_inverse,
    format_scalar,
    int_det,
    mat_pow,
    parse_scalar,
    poly_det,
    ratfun_reduce,
    smith_normal_form,
)
from ncgraded.exactnum.linalg import Echelon, inverse, kernel, rank

small_q = st.fractions(min_value=-20, max_value=20, max_denominator=12)
eis = st.builds(Eis, small_q, small_q)


# -- Q(w) ---------------------------------------------------------------------

def test_omega_relations():
    assert OMEGA ** 3 == ONE
    assert OMEGA * OMEGA == Eis(-1, -1)
    assert ONE + OMEGA + OMEGA2 == ZERO
    assert OMEGA2 == OMEGA.conjugate()


@pytest.mark.parametrize("value,expected", [
    (Eis(2), Eis(Fraction(1, 2))),
    (OMEGA, Eis(-1, -1)),
    (Eis(1, 1), Eis(0, -1)),
])
def test_eis_inverse_examples(value, expected):
    assert eis_inverse(value) == expected


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        eis_inverse(ZERO)
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@settings(max_examples=1000, deadline=None)
@given(eis, eis, eis)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO
    assert (a * b).norm() == a.norm() * b.norm()
    assert (a.norm() == 0) == (a == ZERO)
    if a:
        assert a * eis_inverse(a) == ONE


@given(eis)
def test_scalar_format_parse_roundtrip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_scalar_literals():
    assert parse_scalar("w^2") == OMEGA2
    assert parse_scalar("-1/2") == Eis(Fraction(-1, 2))
    assert parse_scalar("(1/2 + 3*w)") == Eis(Fraction(1, 2), 3)
    assert parse_scalar("w^3") == ONE
    with pytest.raises(ScalarParseError):
        parse_scalar("(1 + w")
    with pytest.raises(ScalarParseError):
        parse_scalar("")


def test_cube_roots():
    roots = cube_roots_of_unity()
    assert len(set(roots)) == 3
    assert all(r ** 3 == ONE for r in roots)


def test_hash_agrees_with_fraction():
    assert hash(Eis(3)) == hash(Fraction(3))
    assert {Eis(Fraction(1, 2)): 1}[Eis(Fraction(2, 4))] == 1


# -- Q[t], Q(t) ---------------------------------------------------------------

T = UniPoly.t()


def test_ratfun_examples():
    r = RationalFunction(1 - 4 * T * T, 1 - 2 * T)
    assert r.den == UniPoly([1]) and r.num == 1 + 2 * T
    h = RationalFunction(1 + T, 1 - 2 * T)
    assert (h.num, h.den) == (1 + T, 1 - 2 * T)
    assert RationalFunction(2 + 2 * T, 2 - 4 * T) == h
    assert str(RationalFunction(2 + 2 * T, 2 - 4 * T)) == "(1 + t)/(1 - 2*t)"


def test_ratfun_errors():
    with pytest.raises(DivisionByZero):
        ratfun_reduce(UniPoly([1]), UniPoly())
    with pytest.raises(SingularSystem):
        RationalFunction(UniPoly([1]), T)


polys = st.lists(st.integers(-5, 5), min_size=1, max_size=4).map(UniPoly)
dens = polys.filter(lambda p: p.coeff(0) != 0)


@given(polys, dens)
def test_ratfun_reduce_idempotent(n, d):
    a = RationalFunction(n, d)
    b = RationalFunction(a.num, a.den)
    assert (a.num, a.den) == (b.num, b.den)
    assert a.den.coeff(0) == 1


@given(polys, dens, polys, dens)
def test_ratfun_equality_matches_reduced_forms(n1, d1, n2, d2):
    a, b = RationalFunction(n1, d1), RationalFunction(n2, d2)
    assert (a == b) == ((a.num, a.den) == (b.num, b.den))


def test_series_of_geometric():
    assert RationalFunction(UniPoly([1]), 1 - 2 * T).series(5) == [1, 2, 4, 8, 16]


def test_poly_det_matches_evaluation():
    m = [[1 - T, T, UniPoly([2])], [T * T, UniPoly([1]), T], [UniPoly([3]), 1 + T, T]]
    d = poly_det(m)
    for x in range(-3, 4):
        vals = [[e(x) for e in row] for row in m]
        assert d(x) == int_det(vals)


# -- integer matrices ---------------------------------------------------------

M = IntMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
M_PRIME = IntMatrix([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
CUBE = [[2, 3, 3], [3, 2, 3], [3, 3, 2]]


def test_mat_pow_examples():
    assert mat_pow(M, 3) == CUBE
    assert mat_pow(M_PRIME, 3) == CUBE
    assert mat_pow(M, 0) == IntMatrix.identity(3)
    with pytest.raises(NonSquare):
        mat_pow(IntMatrix([[1, 2]]), 2)


small_mats = st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3).map(IntMatrix)


@given(small_mats, st.integers(0, 8), st.integers(0, 8))
def test_mat_pow_additive(m, a, b):
    assert mat_pow(m, a + b) == mat_pow(m, a) @ mat_pow(m, b)


def _brute_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    return sum((-1) ** j * rows[0][j] * _brute_det([r[:j] + r[j + 1:] for r in rows[1:]]) for j in range(n))


@given(small_mats)
def test_det_against_cofactor_expansion(m):
    assert m.det() == _brute_det(m.tolist())


def test_snf_examples():
    assert smith_normal_form(IntMatrix.identity(3))[1] == IntMatrix.identity(3)
    assert smith_normal_form(IntMatrix([[2, 0], [0, 4]]))[1] == [[2, 0], [0, 4]]
    assert smith_normal_form(M)[1].diagonal() == (1, 1, 2)


def _gcd_of_minors(m, k):
    from itertools import combinations
    from math import gcd

    rows = m.tolist()
    g = 0
    for rs in combinations(range(m.rows), k):
        for cs in combinations(range(m.cols), k):
            g = gcd(g, _brute_det([[rows[i][j] for j in cs] for i in rs]))
    return g


wide_ints = st.integers(-50, 50)
mats3 = st.lists(st.lists(wide_ints, min_size=3, max_size=3), min_size=3, max_size=3).map(IntMatrix)


@settings(max_examples=100, deadline=None)
@given(mats3)
def test_snf_postconditions(m):
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert abs(u.det()) == 1 and abs(v.det()) == 1
    assert d.is_diagonal()
    diag = d.diagonal()
    assert all(x >= 0 for x in diag)
    assert all(diag[i + 1] % diag[i] == 0 for i in range(2) if diag[i])
    assert all(diag[i + 1] == 0 for i in range(2) if not diag[i])
    assert abs(d.det()) == abs(m.det())
    # oracle: d_1 ... d_k equals the gcd of the k x k minors
    prod = 1
    for k in range(1, 4):
        prod *= diag[k - 1]
        assert prod == _gcd_of_minors(m, k)


def test_snf_rectangular():
    m = IntMatrix([[2, 4, 6], [4, 8, 14]])
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert d.diagonal() == (2, 2)


# -- linear algebra -----------------------------------------------------------

def test_dense_linalg():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert rank(rows) == 1
    (k,) = kernel(rows)
    assert all(sum(a * b for a, b in zip(r, k)) == 0 for r in rows)
    inv = inverse([[Eis(1), OMEGA], [ZERO, Eis(2)]])
    assert inv[0][0] == ONE and inv[1][1] == Eis(Fraction(1, 2))


def test_echelon_canonical_remainder():
    e = Echelon()
    assert e.add({"a": 1, "b": 1})
    assert e.add({"b": 1, "c": 1})
    assert not e.add({"a": 1, "c": -1})
    assert e.rank == 2
    assert e.reduce({"a": 1}) == e.reduce({"c": 1})


@given(st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=1, max_size=5))
def test_echelon_rank_matches_dense(rows):
    e = Echelon()
    for r in rows:
        e.add({i: Fraction(x) for i, x in enumerate(r) if x})
    assert e.rank == rank([[Fraction(x) for x in r] for r in rows])


def test_all_small_products_in_field():
    elems = [Eis(a, b) for a, b in product(range(-1, 2), repeat=2)]
    for a in elems:
        for b in elems:
            if a and b:
                assert a * b
