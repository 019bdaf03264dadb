from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from ehrmat.exactmath import (
    binomial, det, integer_kernel, mat_identity, mat_inverse_unimodular,
    mat_mul, mat_rank, poly_eval, poly_interpolate, poly_trim,
    rational_nullspace, series_mul_trunc, solve_linear, vec_dot,
)

rats = st.fractions(min_value=-50, max_value=50, max_denominator=9)


def test_det_identity():
    assert det(mat_identity(3)) == 1


def test_det_upper_triangular_unimodular():
    assert det(((1, 1), (0, 1))) == 1


def test_det_rejects_non_square():
    import pytest
    with pytest.raises(ValueError):
        det(((1, 2, 3), (4, 5, 6)))


def _cofactor_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _cofactor_det(minor)
    return total


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4),
                min_size=4, max_size=4))
def test_det_matches_cofactor_expansion(m):
    assert det(tuple(map(tuple, m))) == _cofactor_det(m)


def test_interpolate_constant():
    assert poly_interpolate([(0, 1), (1, 1)]) == (Fraction(1),)


def test_interpolate_reevaluates_exactly():
    pts = [(0, 1), (1, 6), (2, 19)]
    p = poly_interpolate(pts)
    for k, v in pts:
        assert poly_eval(p, k) == v


def test_interpolate_rejects_duplicates():
    import pytest
    with pytest.raises(ValueError):
        poly_interpolate([(1, 2), (1, 3)])


@settings(max_examples=50)
@given(st.lists(rats, min_size=1, max_size=7))
def test_interpolate_roundtrip(coeffs):
    p = poly_trim(tuple(coeffs))
    pts = [(k, poly_eval(p, k)) for k in range(len(p))]
    assert poly_interpolate(pts) == p


def test_series_mul_trunc_drops_high_terms():
    one_plus_x = (Fraction(1), Fraction(1))
    assert series_mul_trunc(one_plus_x, one_plus_x, 1) == (
        Fraction(1), Fraction(2))
    half = (Fraction(1), Fraction(1, 2))
    assert series_mul_trunc(half, half, 2) == (
        Fraction(1), Fraction(1), Fraction(1, 4))


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(7, 3) == 35
    assert binomial(5, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


@given(rats, rats, rats)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


def test_solve_linear_consistent_overdetermined():
    # x = 2, y = 3 seen through three equations
    rows = [[1, 0], [0, 1], [1, 1]]
    assert solve_linear(rows, [2, 3, 5]) == [2, 3]
    assert solve_linear(rows, [2, 3, 6]) is None


def test_integer_kernel_is_saturated():
    # kernel of x + y + z = 0 inside Z^3
    basis = integer_kernel([(1, 1, 1)], 3)
    assert len(basis) == 2
    for v in basis:
        assert sum(v) == 0
    # (1,-1,0) must be an integer combination of the basis
    sol = solve_linear([[b[c] for b in basis] for c in range(3)], (1, -1, 0))
    assert sol is not None and all(x.denominator == 1 for x in sol)


def test_rational_nullspace_orthogonal():
    rows = [(1, 2, 3), (0, 1, 1)]
    for v in rational_nullspace(rows, 3):
        assert vec_dot(rows[0], v) == 0
        assert vec_dot(rows[1], v) == 0
    assert mat_rank(rows + rational_nullspace(rows, 3)) == 3


def test_unimodular_inverse():
    m = ((1, 2), (1, 3))
    inv = mat_inverse_unimodular(m)
    assert mat_mul(m, inv) == mat_identity(2)
