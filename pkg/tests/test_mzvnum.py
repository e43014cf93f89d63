"""Tests for the double-precision evaluator of nested harmonic sums.

Reference values are recomputed at import time from math.pi and from an
independent single-series routine with an analytic tail, so no multi-digit
constants are frozen into the assertions.  The honesty checks require the
reported error estimate to cover the actual error on indices with known
closed forms.
"""

import math
from fractions import Fraction

import pytest

from imzv import (
    Index,
    STAR,
    ZetaCombo,
    eval_combo,
    eval_mzv,
    interpolated_symbol,
    parse_zeta_combo,
    zeta_ref,
)

PI = math.pi
ZETA2 = PI**2 / 6
ZETA3 = zeta_ref(3)
ZETA4 = PI**4 / 90
ZETA5 = zeta_ref(5)
ZETA6 = PI**6 / 945
ZETA7 = zeta_ref(7)


def test_reference_series_matches_pi_powers():
    assert abs(zeta_ref(2) - ZETA2) < 1e-12
    assert abs(zeta_ref(4) - ZETA4) < 1e-12
    assert abs(zeta_ref(6) - ZETA6) < 1e-12


@pytest.mark.parametrize("s", [2, 3, 4, 5, 6, 7, 8])
def test_depth_one_honesty(s):
    res = eval_mzv((s,))
    assert abs(res.value - zeta_ref(s)) <= res.error_estimate


@pytest.mark.parametrize(
    "parts,closed_form",
    [
        ((3, 1), PI**4 / 360),
        ((2, 2), PI**4 / 120),
        ((2, 1), ZETA3),
        ((2, 1, 1), ZETA4),
        ((2, 1, 1, 1), ZETA5),
    ],
)
def test_known_depth_identities(parts, closed_form):
    res = eval_mzv(parts)
    assert abs(res.value - closed_form) <= res.error_estimate


def test_result_invariants():
    res = eval_mzv((2, 1, 2))
    assert res.error_estimate > 0
    assert res.cutoff_used >= 1024
    assert res.tol_ok == (res.error_estimate <= 1e-9)


def test_rejects_non_admissible_index():
    with pytest.raises(ValueError):
        eval_mzv((1, 2))


def test_refinement_does_not_degrade():
    for parts in ((2,), (3, 1), (2, 1, 1), (2, 1, 1, 1, 1, 1)):
        coarse = eval_mzv(parts, cutoff=1 << 13)
        fine = eval_mzv(parts, cutoff=1 << 14)
        assert fine.error_estimate <= 2 * coarse.error_estimate, parts


def test_small_cutoff_is_flagged_but_still_honest():
    # a depth-six chain needs far more than 1024 terms for the default target
    res = eval_mzv((2, 1, 1, 1, 1, 1), target_abs_err=1e-9, cutoff=1024)
    assert not res.tol_ok
    assert abs(res.value - ZETA7) <= res.error_estimate


def test_cache_reuses_default_cutoff_results():
    cache = {}
    first = eval_mzv((3, 1), cache=cache)
    assert (3, 1) in cache
    again = eval_mzv((3, 1), cache=cache)
    assert again.value == first.value
    assert again.cutoff_used == first.cutoff_used
    # an explicit cutoff must bypass the cached entry
    forced = eval_mzv((3, 1), cutoff=1 << 12, cache=cache)
    assert forced.cutoff_used == 1 << 12


def test_combo_of_scalar_only():
    zc = parse_zeta_combo("3/2")
    res = eval_combo(zc)
    assert res.value == 1.5
    assert res.tol_ok


def test_combo_linear_accumulation():
    zc = parse_zeta_combo("2*z(2,2) + 4*z(3,1)")
    res = eval_combo(zc, target_abs_err=1e-6)
    assert abs(res.value - ZETA2**2) < 1e-6
    assert res.tol_ok
    single = eval_mzv((2, 2))
    assert res.error_estimate >= 2 * single.error_estimate


def test_combo_interpolation_at_one_half():
    # z^t(2,1) = z(2,1) + t*z(3), evaluated midway between the two ends
    zc = interpolated_symbol((2, 1))
    res = eval_combo(zc, t_value=Fraction(1, 2), target_abs_err=1e-8)
    want = ZETA3 + 0.5 * ZETA3  # z(2,1) = z(3)
    assert abs(res.value - want) <= res.error_estimate + 1e-12


def test_star_combo_value():
    zc = ZetaCombo(STAR, {Index((5, 1)): 1})
    res = eval_combo(zc, target_abs_err=1e-8)
    want = ZETA2 * ZETA4 - 0.5 * ZETA3**2
    assert abs(res.value - want) < 1e-8
