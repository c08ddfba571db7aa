"""Exact arithmetic: Q, Q(w), Q[t], Q(t) and integer matrices."""

from .eisenstein import (
    OMEGA,
    OMEGA2,
    ONE,
    ZERO,
    Eis,
    Rational,
    cube_roots_of_unity,
    eis_inverse,
    format_scalar,
    parse_scalar,
)
from .intmatrix import IntMatrix, int_det, mat_pow, rational_inverse, smith_normal_form
from .linalg import Echelon, kernel, rank, rref
from .poly import RationalFunction, UniPoly, format_poly, poly_det, poly_gcd, ratfun_reduce

__all__ = [
    "OMEGA", "OMEGA2", "ONE", "ZERO", "Eis", "Rational", "cube_roots_of_unity",
    "eis_inverse", "format_scalar", "parse_scalar", "IntMatrix", "int_det", "mat_pow",
    "rational_inverse", "smith_normal_form", "Echelon", "kernel", "rank", "rref",
    "RationalFunction", "UniPoly", "format_poly", "poly_det", "poly_gcd", "ratfun_reduce",
]
