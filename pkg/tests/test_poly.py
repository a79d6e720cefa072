import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopsym.poly import (AmbientMismatchError, NotDivisibleError, Poly, RatFn, Ring,
                          UnboundVariableError, VarId, parse_rational, ratfn_eq)

R = Ring(2, 2)
VARS = R.all_vars()

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exps = st.tuples(*[st.integers(0, 2)] * R.nvars)


@st.composite
def polys(draw, max_terms=4):
    terms = draw(st.lists(st.tuples(exps, coeffs), max_size=max_terms))
    p = R.zero()
    for e, c in terms:
        p = p + R.monomial(dict(zip(VARS, e)), c)
    return p


@st.composite
def nonzero_polys(draw):
    p = draw(polys())
    return p if not p.is_zero() else R.one()


points = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3),
                  min_size=R.nvars, max_size=R.nvars)


# -- ring basics -------------------------------------------------------------

def test_color_is_taken_mod_n():
    assert R.varid(1, 3) == R.varid(1, 1)
    assert R.varid(2, 0) == R.varid(2, 2)
    assert R.var(1, -1) == R.var(1, 1)


def test_labels_are_one_based():
    assert R.varid(2, 2).label() == "x_2^(2)"
    assert R.varid(1, 1).key() == "x:1:1"


def test_bad_rings_and_flows():
    with pytest.raises(ValueError):
        Ring(0, 2)
    with pytest.raises(ValueError):
        R.varid(3, 1)


def test_exponent_overflow_is_refused():
    with pytest.raises(OverflowError):
        R.monomial({VARS[0]: 1 << 16})
    with pytest.raises(OverflowError):
        R.var(1, 1) ** (1 << 16)


def test_str_format():
    x = R.var
    p = x(1, 1) * x(2, 2) ** 2 - Fraction(1, 2) * x(1, 2) + 3
    text = str(p)
    assert "x_1^(1)*(x_2^(2))^2" in text
    assert "1/2*x_1^(2)" in text
    assert str(R.zero()) == "0"


# -- ring axioms -------------------------------------------------------------

@given(polys(), polys(), polys())
def test_addition_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + R.zero() == a
    assert a - a == R.zero()


@settings(max_examples=60)
@given(polys(), polys(), polys())
def test_multiplication_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * R.one() == a


@given(polys(), st.integers(0, 3))
def test_power_is_repeated_product(a, k):
    expected = R.one()
    for _ in range(k):
        expected = expected * a
    assert a ** k == expected


@given(polys(), polys())
def test_no_zero_coefficients_stored(a, b):
    for c in (a * b - b * a + a).raw_terms.values():
        assert c != 0


@given(polys(), nonzero_polys())
def test_divexact_inverts_multiplication(a, b):
    assert (a * b).divexact(b) == a


def test_divexact_reports_remainder():
    x = R.var
    with pytest.raises(NotDivisibleError):
        (x(1, 1) + 1).divexact(x(1, 2))
    with pytest.raises(ZeroDivisionError):
        x(1, 1).divexact(R.zero())


# -- evaluation --------------------------------------------------------------

@given(polys(), polys(), points)
def test_evaluation_is_a_homomorphism(a, b, pt):
    assert (a + b).evaluate_vector(pt) == a.evaluate_vector(pt) + b.evaluate_vector(pt)
    assert (a * b).evaluate_vector(pt) == a.evaluate_vector(pt) * b.evaluate_vector(pt)


def test_evaluate_requires_every_occurring_variable():
    p = R.var(1, 1) * R.var(2, 1)
    with pytest.raises(UnboundVariableError):
        p.evaluate({R.varid(1, 1): 2})
    assert p.evaluate({R.varid(1, 1): 2, R.varid(2, 1): Fraction(1, 2)}) == 1


def test_evaluate_rejects_vanishing_denominator():
    f = RatFn(R.one(), R.var(1, 1) - 1)
    with pytest.raises(ZeroDivisionError):
        f.evaluate({v: 1 for v in VARS})


# -- serialization -----------------------------------------------------------

@given(polys())
def test_poly_json_round_trip(p):
    assert Poly.from_json(p.to_json()) == p
    assert Poly.from_json(json.dumps(json.loads(p.to_json()))).to_json() == p.to_json()


@given(polys(), nonzero_polys())
def test_ratfn_json_round_trip(a, b):
    f = RatFn(a, b)
    assert RatFn.from_json_obj(json.loads(json.dumps(f.to_json_obj()))) == f


def test_json_rejects_decimals_and_bad_keys():
    with pytest.raises(ValueError):
        parse_rational("0.5")
    bad = {"m": 2, "n": 2, "terms": [{"coeff": "1", "exps": {"y:1:1": 1}}]}
    with pytest.raises(ValueError):
        Poly.from_json_obj(bad)
    bad = {"m": 2, "n": 2, "terms": [{"coeff": "1", "exps": {"x:1:3": 1}}]}
    with pytest.raises(ValueError):
        Poly.from_json_obj(bad)


# -- rational functions ------------------------------------------------------

@given(polys(), nonzero_polys(), nonzero_polys())
def test_ratfn_equality_is_cross_multiplication(a, b, c):
    f = RatFn(a, b)
    g = RatFn(a * c, b * c)
    assert ratfn_eq(f, g)
    assert ratfn_eq(g, f)
    assert ratfn_eq(f, f)


@given(polys(), nonzero_polys(), polys(), nonzero_polys(), points)
def test_ratfn_arithmetic_matches_evaluation(a, b, c, d, pt):
    f, g = RatFn(a, b), RatFn(c, d)
    try:
        fv, gv = f.evaluate_vector(pt), g.evaluate_vector(pt)
        sv = (f + g).evaluate_vector(pt)
        pv = (f * g).evaluate_vector(pt)
    except ZeroDivisionError:
        return
    assert sv == fv + gv
    assert pv == fv * gv


@given(nonzero_polys(), nonzero_polys())
def test_ratfn_inverse(a, b):
    f = RatFn(a, b)
    assert f * f.inverse() == RatFn(R.one())
    assert f / f == 1


def test_ratfn_normalization_makes_content_one():
    x = R.var
    f = RatFn(x(1, 1).scale(6), x(1, 2).scale(-4))
    assert f.den.leading_coeff() > 0
    assert f == RatFn(x(1, 1).scale(-3), x(1, 2).scale(2))


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFn(R.one(), R.zero())
    with pytest.raises(ZeroDivisionError):
        RatFn(R.zero(), R.one()).inverse()


def test_to_poly():
    x = R.var
    assert RatFn(x(1, 1) * x(2, 1) + x(1, 1), x(1, 1)).to_poly() == x(2, 1) + 1
    with pytest.raises(NotDivisibleError):
        RatFn(R.one(), x(1, 1)).to_poly()


def test_mixing_rings_fails():
    other = Ring(3, 2)
    with pytest.raises(AmbientMismatchError):
        R.var(1, 1) + other.var(1, 1)
    with pytest.raises(AmbientMismatchError):
        ratfn_eq(RatFn(R.one()), RatFn(other.one()))


def test_varid_ordering():
    assert VarId(1, 0) < VarId(1, 1) < VarId(2, 0)
