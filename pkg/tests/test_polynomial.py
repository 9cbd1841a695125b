from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nablachains import Polynomial, parse_polynomial


def poly_strategy(n_vars=3, max_degree=3, max_terms=4):
    exps = st.tuples(*[st.integers(0, max_degree) for _ in range(n_vars)])
    coeff = st.fractions(
        min_value=-5, max_value=5, max_denominator=4
    )
    return st.dictionaries(exps, coeff, max_size=max_terms).map(
        lambda terms: Polynomial(n_vars, terms)
    )


def test_canonical_form_drops_zeros():
    p = Polynomial(2, {(1, 0): 1, (0, 1): 0})
    assert (0, 1) not in p.terms
    q = Polynomial(2, {(1, 0): 1}) - Polynomial(2, {(1, 0): 1})
    assert q.is_zero()
    assert q == Polynomial.zero(2)


def test_arithmetic():
    x1 = Polynomial.variable(2, 1)
    x2 = Polynomial.variable(2, 2)
    p = (x1 + x2) * (x1 - x2)
    assert p == x1 * x1 - x2 * x2
    assert p.scale(Fraction(1, 2)).scale(2) == p


def test_diff_power_rule():
    # d/dx1 (x1^3 * x2) = 3 x1^2 x2
    p = Polynomial(2, {(3, 1): 1})
    assert p.diff(1) == Polynomial(2, {(2, 1): 3})
    assert p.diff(2) == Polynomial(2, {(3, 0): 1})
    assert Polynomial.constant(2, 5).diff(1).is_zero()


def test_mixed_partials_commute():
    p = Polynomial(3, {(2, 1, 0): Fraction(3, 2), (1, 1, 1): -2})
    assert p.diff(1).diff(2) == p.diff(2).diff(1)


def test_parse_basic():
    p = parse_polynomial("3/2*x1^2*x3 - x2", 3)
    assert p == Polynomial(3, {(2, 0, 1): Fraction(3, 2), (0, 1, 0): -1})
    assert parse_polynomial("0", 3).is_zero()
    assert parse_polynomial("-x1 + 4", 2) == Polynomial(
        2, {(1, 0): -1, (0, 0): 4}
    )


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_polynomial("x9", 3)
    with pytest.raises(ValueError):
        parse_polynomial("x1 +", 3)
    with pytest.raises(ValueError):
        parse_polynomial("y1", 3)
    with pytest.raises(ValueError):
        parse_polynomial("", 3)


def test_str_round_trip_examples():
    for text in ["3/2*x1^2*x3 - x2", "x1*x2 + 1", "-x3^4", "7"]:
        p = parse_polynomial(text, 3)
        assert parse_polynomial(str(p), 3) == p


@given(poly_strategy())
@settings(max_examples=200)
def test_render_parse_round_trip(p):
    assert parse_polynomial(str(p), p.n_vars) == p


@given(poly_strategy(), poly_strategy())
def test_addition_commutes(p, q):
    assert p + q == q + p


@given(poly_strategy(), poly_strategy(), poly_strategy())
@settings(max_examples=50)
def test_distributivity(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(poly_strategy(), poly_strategy(), st.integers(1, 3))
def test_diff_is_linear_and_leibniz(p, q, i):
    assert (p + q).diff(i) == p.diff(i) + q.diff(i)
    assert (p * q).diff(i) == p.diff(i) * q + p * q.diff(i)


def test_mismatched_variable_counts_rejected():
    with pytest.raises(ValueError):
        Polynomial.variable(2, 1) + Polynomial.variable(3, 1)
