"""Tests for linear combinations of words with polynomial coefficients.

The concatenation product makes these a noncommutative ring; the tests
pin down the module laws, the canonical printing order, and the text and
JSON round trips used by the command line tools.
"""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from imzv import (
    HElement,
    QtPoly,
    Word,
    helement_from_json,
    helement_to_json,
    parse_helement,
)

import json

coeffs = st.builds(
    QtPoly,
    st.dictionaries(
        st.integers(min_value=0, max_value=2),
        st.integers(min_value=-9, max_value=9).map(Fraction),
        max_size=3,
    ),
)
elements = st.dictionaries(
    st.text(alphabet="xy", max_size=4).map(Word), coeffs, max_size=4
).map(HElement)


@given(u=elements, v=elements)
def test_addition_commutes(u, v):
    assert u + v == v + u


@given(u=elements, v=elements, w=elements)
def test_addition_associates(u, v, w):
    assert (u + v) + w == u + (v + w)


@given(u=elements)
def test_subtraction_gives_zero(u):
    assert (u - u).is_zero()
    assert u + HElement.zero() == u


@given(u=elements, v=elements, w=elements)
def test_concatenation_is_bilinear(u, v, w):
    assert u * (v + w) == u * v + u * w
    assert (u + v) * w == u * w + v * w


@given(u=elements, v=elements, w=elements)
def test_concatenation_associates(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(u=elements)
def test_unit_element(u):
    assert HElement.unit() * u == u
    assert u * HElement.unit() == u


def test_concatenation_of_words():
    assert HElement.from_word("xy") * HElement.from_word("y") == HElement.from_word("xyy")


def test_zero_coefficients_are_dropped():
    u = HElement({Word("xy"): QtPoly.zero(), Word("y"): QtPoly.one()})
    assert list(w.letters for w, _ in u.sorted_terms()) == ["y"]


@given(u=elements, c=coeffs)
def test_scaling_distributes(u, c):
    v = u.scale(c)
    for w, cw in u.terms.items():
        assert v.coeff(w) == c * cw


def test_canonical_print_order():
    # length first, then y before x at each position
    u = (
        HElement.from_word("xyxy", 2)
        + HElement.from_word("xxyy", 4)
        + HElement.from_word("xxxy", QtPoly({1: -6}))
    )
    assert str(u) == "2*xyxy + 4*xxyy + (-6*t)*xxxy"


def test_unit_and_zero_strings():
    assert str(HElement.zero()) == "0"
    assert str(HElement.unit()) == "1"
    assert str(HElement.from_word("y", -1)) == "(-1)*y"


@given(u=elements)
def test_str_parse_round_trip(u):
    assert parse_helement(str(u)) == u


@given(u=elements)
def test_json_round_trip(u):
    assert helement_from_json(json.loads(helement_to_json(u))) == u


def test_parse_rejects_bad_letters():
    with pytest.raises(ValueError):
        parse_helement("2*xz + y")


@given(u=elements, value=st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(1)]))
def test_substitute_t_is_linear(u, value):
    doubled = u + u
    lhs = doubled.substitute_t(value)
    rhs = u.substitute_t(value) + u.substitute_t(value)
    assert lhs == rhs
