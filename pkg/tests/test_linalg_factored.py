from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopsym.factored import (Factored, evaluate_factored, factored_det, factored_eq, factored_sum)
from loopsym.linalg import bareiss_det, leibniz_det, permutation_sign, poly_det, ratfn_det
from loopsym.poly import RatFn, Ring

R = Ring(2, 2)
VARS = R.all_vars()

small_polys = st.lists(
    st.tuples(st.tuples(*[st.integers(0, 1)] * R.nvars), st.integers(-3, 3)), max_size=3,
).map(lambda terms: sum((R.monomial(dict(zip(VARS, e)), c) for e, c in terms), R.zero()))


def square(size):
    return st.lists(st.lists(small_polys, min_size=size, max_size=size), min_size=size, max_size=size)


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((1, 2, 0)) == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_bareiss_agrees_with_leibniz(rows):
    assert bareiss_det(rows, R) == leibniz_det(rows, R)


def test_poly_det_switches_to_bareiss_above_six():
    x = R.var
    size = 7
    rows = [[R.one() if i == j else R.zero() for j in range(size)] for i in range(size)]
    rows[0][6] = x(1, 1)
    rows[6][0] = x(2, 2)
    assert poly_det(rows, R) == 1 - x(1, 1) * x(2, 2)
    assert poly_det([], R) == 1
    with pytest.raises(ValueError):
        poly_det([[R.one(), R.one()]], R)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3).flatmap(square), st.integers(1, 3).flatmap(square))
def test_det_is_multiplicative(a, b):
    if len(a) != len(b):
        return
    n = len(a)
    prod = [[sum((a[i][k] * b[k][j] for k in range(n)), R.zero()) for j in range(n)] for i in range(n)]
    assert poly_det(prod, R) == poly_det(a, R) * poly_det(b, R)


def test_ratfn_det_matches_factored_det():
    x = R.var
    rows = [[RatFn(x(1, 1), x(2, 1) + 1), RatFn(R.one(), x(1, 2))],
            [RatFn(x(2, 2)), RatFn(x(1, 1) + x(2, 2), x(2, 1) + 1)]]
    expected = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    assert ratfn_det(rows, R) == expected
    fac = [[Factored.from_poly(q.num) / Factored.from_poly(q.den) for q in row] for row in rows]
    assert factored_det(fac, R).to_ratfn() == expected


@settings(max_examples=40, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_factored_round_trip_and_equality(a, b, c):
    if a.is_zero() or b.is_zero():
        return
    Fa, Fb = Factored.from_poly(a), Factored.from_poly(b)
    assert Fa.to_poly() == a
    assert (Fa * Fb).to_poly() == a * b
    assert factored_eq((Fa * Fb) / Fb, Fa)
    assert (Fa / Fb).to_ratfn() == RatFn(a, b)
    if not c.is_zero():
        Fc = Factored.from_poly(c)
        total = factored_sum([(None, Fa / Fb), (None, Fc / Fb)], R)
        assert total.to_ratfn() == RatFn(a + c, b)


def test_factor_registry_finds_known_factors():
    x = R.var
    f = x(1, 1) + x(2, 2)
    g = x(1, 2) - 3 * x(2, 1)
    Factored.from_poly(f)
    F = Factored.from_poly((f * g).scale(-4))
    assert F.factors.get(f) == 1
    assert abs(F.coeff) == 4
    assert F.to_poly() == (f * g).scale(-4)


def test_factored_evaluation():
    x = R.var
    F = Factored.from_poly(x(1, 1) + 1) / Factored.from_poly(x(2, 2))
    values = [Fraction(1), Fraction(2), Fraction(3), Fraction(4)]
    assert evaluate_factored(F, values) == Fraction(2, 4)
    with pytest.raises(ZeroDivisionError):
        evaluate_factored(F, [1, 1, 1, 0])


def test_zero_handling():
    assert Factored.from_poly(R.zero()).is_zero()
    assert factored_eq(Factored(R, 0), Factored(R, 0))
    assert not factored_eq(Factored(R, 0), Factored(R, 1))
    with pytest.raises(ZeroDivisionError):
        Factored(R, 0).inverse()
