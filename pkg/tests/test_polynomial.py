import pytest
from hypothesis import given, strategies as st

from knotforge.polynomial import LaurentPoly, ZeroPolynomialError, degrees, loop_value, substitute_quarter

A = LaurentPoly.monomial(1)
Ainv = LaurentPoly.monomial(-1)

polys = st.dictionaries(st.integers(-12, 12), st.integers(-50, 50), max_size=6).map(LaurentPoly)
nonzero = polys.filter(lambda p: not p.is_zero())
quarter = st.dictionaries(st.integers(-5, 5).map(lambda k: 4 * k), st.integers(-9, 9), max_size=5).map(LaurentPoly)


def test_difference_of_squares():
    assert (A + Ainv) * (A - Ainv) == LaurentPoly({2: 1, -2: -1})


def test_loop_value_squared():
    assert loop_value() ** 2 == LaurentPoly({4: 1, 0: 2, -4: 1})


def test_zero_coefficients_not_stored():
    p = LaurentPoly({3: 1}) - LaurentPoly({3: 1})
    assert p.is_zero() and p.terms == {}


@pytest.mark.parametrize(
    "terms, expected",
    [({5: -1, -3: -1, -7: 1}, (5, -7, 12)), ({0: 1}, (0, 0, 0)), ({-4: 1}, (-4, -4, 0))],
)
def test_degrees(terms, expected):
    assert degrees(LaurentPoly(terms)) == expected


def test_degrees_of_zero_raises():
    with pytest.raises(ZeroPolynomialError):
        degrees(LaurentPoly())


def test_substitute_quarter_examples():
    assert substitute_quarter(LaurentPoly({-4: 1, -12: 1, -16: -1})) == LaurentPoly({1: 1, 3: 1, 4: -1})
    assert substitute_quarter(LaurentPoly.const(1)) == LaurentPoly.const(1)
    assert substitute_quarter(LaurentPoly({4: 1})) == LaurentPoly({-1: 1})
    with pytest.raises(ValueError):
        substitute_quarter(LaurentPoly({2: 1}))


def test_rendering():
    assert str(LaurentPoly({5: -1, -3: -1, -7: 1})) == "-A^5-A^-3+A^-7"
    assert str(LaurentPoly({1: 2, 0: -3, -1: 1}, var="t")) == "2*t^1-3+t^-1"
    assert LaurentPoly({-4: -1, -3: 1, -1: 1}, var="t").format(ascending=True) == "-t^-4+t^-3+t^-1"
    assert str(LaurentPoly()) == "0"


def test_negative_power_of_monomial():
    assert (-A.shift(2)) ** -1 == -LaurentPoly({-3: 1})
    with pytest.raises(ValueError):
        (A + 1) ** -1


def test_big_coefficients_are_exact():
    p = LaurentPoly({1: 2**70}) * LaurentPoly({1: 3**50})
    assert p.coefficient(2) == 2**70 * 3**50


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + 0 == p and p * 1 == p
    assert p - p == LaurentPoly()


@given(nonzero, nonzero)
def test_span_is_additive(p, q):
    assert degrees(p * q)[2] == degrees(p)[2] + degrees(q)[2]


@given(quarter, quarter)
def test_substitute_quarter_is_a_homomorphism(p, q):
    assert substitute_quarter(p + q) == substitute_quarter(p) + substitute_quarter(q)
    assert substitute_quarter(p * q) == substitute_quarter(p) * substitute_quarter(q)


@given(polys)
def test_json_round_trip(p):
    data = p.to_json()
    assert all(isinstance(k, str) for k in data)
    assert LaurentPoly.from_json(data) == p


@given(polys, st.integers(-3, 3).filter(bool))
def test_evaluate_matches_product(p, x):
    q = p * (A + 1)
    assert q.evaluate(x) == p.evaluate(x) * (x + 1)
