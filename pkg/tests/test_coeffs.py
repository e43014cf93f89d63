"""Tests for the rational coefficient polynomials in the deformation variable.

Covers the commutative ring laws, evaluation, the text format, and the
binomial helper that the closed-form modules lean on.
"""

from fractions import Fraction

from hypothesis import given, strategies as st

from imzv import QtPoly, binom, parse_qtpoly


def qtpoly_strategy():
    coeff = st.fractions(
        min_value=-20, max_value=20, max_denominator=8
    )
    return st.dictionaries(st.integers(min_value=0, max_value=5), coeff, max_size=4).map(
        QtPoly
    )


polys = qtpoly_strategy()


@given(a=polys, b=polys)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(a=polys, b=polys, c=polys)
def test_addition_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(a=polys, b=polys)
def test_multiplication_commutes(a, b):
    assert a * b == b * a


@given(a=polys, b=polys, c=polys)
def test_multiplication_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(a=polys, b=polys, c=polys)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(a=polys)
def test_additive_inverse(a):
    assert (a - a).is_zero()
    assert a + QtPoly.zero() == a


@given(a=polys)
def test_one_is_multiplicative_identity(a):
    assert a * QtPoly.one() == a


@given(a=polys, value=st.fractions(min_value=-3, max_value=3, max_denominator=6))
def test_eval_is_ring_homomorphism(a, value):
    b = QtPoly.t(2) - QtPoly.const(Fraction(1, 2))
    assert (a * b).eval_at(value) == a.eval_at(value) * b.eval_at(value)
    assert (a + b).eval_at(value) == a.eval_at(value) + b.eval_at(value)


@given(a=polys)
def test_str_parse_round_trip(a):
    assert parse_qtpoly(str(a)) == a


def test_known_strings():
    p = QtPoly({0: 2, 1: -3, 2: 1})
    assert str(p) == "2 - 3*t + t^2"
    assert str(QtPoly.zero()) == "0"
    assert str(QtPoly.t()) == "t"
    assert str(QtPoly.const(Fraction(-3, 2))) == "-3/2"


def test_parse_accepts_parens_and_fractions():
    assert parse_qtpoly("(1 - 2*t)") == QtPoly({0: 1, 1: -2})
    assert parse_qtpoly("3/2*t^2") == QtPoly({2: Fraction(3, 2)})
    assert parse_qtpoly("-t") == QtPoly({1: -1})


def test_monomial_introspection():
    assert QtPoly({3: 5}).as_monomial() == (3, Fraction(5))
    assert QtPoly({0: 1, 1: 1}).as_monomial() is None
    assert QtPoly.const(7).is_const()
    assert not QtPoly.t().is_const()
    assert QtPoly({2: 1}).degree() == 2


def test_eval_at_returns_exact_fraction():
    p = QtPoly({0: 1, 2: Fraction(1, 3)})
    assert p.eval_at(Fraction(1, 2)) == Fraction(13, 12)


def test_binom_small_table():
    assert binom(4, 2) == 6
    assert binom(0, 0) == 1
    assert binom(5, 0) == 1
    assert binom(5, 5) == 1


def test_binom_out_of_range_is_zero():
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    assert binom(-2, 1) == 0


@given(n=st.integers(min_value=0, max_value=12), k=st.integers(min_value=0, max_value=12))
def test_binom_pascal_rule(n, k):
    assert binom(n + 1, k + 1) == binom(n, k) + binom(n, k + 1)
