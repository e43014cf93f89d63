"""Tests for the closed product formulas against the recursive oracle.

Each formula family is exercised on a grid small enough for quick runs;
the wide acceptance grids live in tests/test_acceptance.py.  The
alternating sums additionally pin down the parity split: odd chain
lengths cancel to zero, even ones match the binomial closed form and do
not vanish.
"""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from imzv import (
    HElement,
    Word,
    alternating_product_closed_form,
    alternating_product_sum,
    alternating_product_weight4_form,
    expanded_height_one_product,
    height_one_product,
    height_two_product,
    pattern_product,
    tshuffle_words,
)

exps = st.integers(min_value=0, max_value=2)
runs = st.integers(min_value=1, max_value=2)


def word_from_exps(e):
    return Word("".join("x" * k + "y" for k in e))


@settings(max_examples=60, deadline=None)
@given(
    a=st.lists(exps, min_size=1, max_size=2),
    b=st.lists(exps, min_size=1, max_size=2),
)
def test_pattern_product_matches_oracle(a, b):
    lhs = pattern_product(a, b)
    rhs = tshuffle_words(word_from_exps(a), word_from_exps(b))
    assert lhs == rhs


def test_pattern_product_needs_a_run_on_each_side():
    with pytest.raises(ValueError):
        pattern_product((), (1,))


@settings(max_examples=50, deadline=None)
@given(
    a=st.integers(min_value=1, max_value=2),
    r=st.integers(min_value=1, max_value=3),
    b=st.integers(min_value=1, max_value=2),
    s=st.integers(min_value=1, max_value=3),
)
def test_height_one_matches_oracle(a, r, b, s):
    lhs = height_one_product(a, r, b, s)
    rhs = tshuffle_words(Word("x" * a + "y" * r), Word("x" * b + "y" * s))
    assert lhs == rhs


def test_expanded_height_one_matches_oracle_on_grid():
    for m, j, n, k in itertools.product((1, 2), repeat=4):
        lhs = expanded_height_one_product(m, j, n, k)
        rhs = tshuffle_words(Word("x" * m + "y" * j), Word("x" * n + "y" * k))
        assert lhs == rhs, (m, j, n, k)


def test_expanded_and_direct_height_one_agree():
    for m, j, n, k in itertools.product((1, 2), repeat=4):
        assert expanded_height_one_product(m, j, n, k) == height_one_product(
            m, j, n, k
        ), (m, j, n, k)


@settings(max_examples=30, deadline=None)
@given(a=runs, b1=runs, b2=runs, r=runs, s1=runs, s2=runs)
def test_height_two_matches_oracle(a, b1, b2, r, s1, s2):
    lhs = height_two_product(a, r, b1, s1, b2, s2)
    w2 = Word("x" * b1 + "y" * s1 + "x" * b2 + "y" * s2)
    rhs = tshuffle_words(Word("x" * a + "y" * r), w2)
    assert lhs == rhs


def test_alternating_sum_vanishes_for_odd_chain_lengths():
    for k in (1, 3, 5):
        for p in (1, 2, 3):
            assert alternating_product_sum(k, p).is_zero(), (k, p)


def test_alternating_sum_closed_form_for_even_chain_lengths():
    for k in (2, 4, 6):
        for p in (1, 2, 3):
            lhs = alternating_product_sum(k, p)
            rhs = alternating_product_closed_form(k, p)
            assert lhs == rhs, (k, p)
            assert not lhs.is_zero(), (k, p)


def test_alternating_weight4_specialization():
    for k in (2, 4, 6):
        assert alternating_product_weight4_form(k) == alternating_product_sum(k, 2)
    for k in (1, 3, 5):
        assert alternating_product_weight4_form(k).is_zero()


def test_every_output_word_ends_in_y():
    out = pattern_product((1, 0), (2,))
    assert all(w.letters.endswith("y") for w in out.terms)
    out = height_one_product(2, 2, 1, 1)
    assert all(w.letters.endswith("y") for w in out.terms)
