"""Exact rational mode: grid points, increments, scans, growth."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from holder_forge import (
    BoundReport,
    GapConditionViolated,
    InexactBase,
    RangeTooLarge,
    SeriesParams,
    badic_point,
    eval_exact,
    eval_phi,
    exact_params,
    increment,
    quotient_growth,
    scaled_increments,
    verify_increment_bound,
)
from holder_forge.exact import _scaled_increment_int

EP = exact_params(Fraction(1, 2), 16)


def test_badic_point_canonicalizes():
    q = badic_point(16, 1, 16)
    assert (q.j, q.m) == (1, 0)
    q = badic_point(32, 2, 16)
    assert (q.j, q.m) == (2, 1)
    q = badic_point(5, 2, 16)
    assert (q.j, q.m) == (5, 2)
    assert q.value(16) == Fraction(5, 256)
    with pytest.raises(ValueError):
        badic_point(1, -1, 16)
    with pytest.raises(ValueError):
        badic_point(1, 0, 1)


def test_exact_params_fields():
    assert EP.root == 4
    assert EP.base_pow_alpha == 4
    assert EP.base_pow_gap == 4
    assert EP.increment_m_exact == Fraction(2, 3)
    assert EP.holder_c_exact == Fraction(17, 3)
    ep = exact_params("3/5", 32)
    assert (ep.root, ep.base_pow_alpha, ep.base_pow_gap) == (2, 8, 4)


def test_exact_params_rejects_inexact_combinations():
    # float 0.6 is not 3/5 in binary, so its exact denominator is astronomical
    with pytest.raises(InexactBase):
        exact_params(0.6, 36)
    # 18 is no perfect square
    with pytest.raises(InexactBase):
        exact_params(Fraction(1, 2), 18)
    with pytest.raises(InexactBase):
        exact_params("not a number", 16)


def test_exact_params_gap_check_is_exact():
    # 4**(1/2) = 2 exactly: the float check already rejects it
    with pytest.raises(GapConditionViolated):
        exact_params(Fraction(1, 2), 4)


@pytest.mark.parametrize(
    "j,m,expected",
    [
        (0, 0, Fraction(0)),
        (1, 0, Fraction(1)),
        (1, 1, Fraction(5, 16)),
        (1, 2, Fraction(21, 256)),
        (5, 2, Fraction(41, 256)),
    ],
)
def test_eval_exact_hand_values(j, m, expected):
    assert eval_exact(EP, badic_point(j, m, 16)) == expected


def test_eval_exact_agrees_with_float_path():
    p = SeriesParams(0.5, 16)
    for m in range(4):
        for j in range(0, 16**m + 1, max(1, 16**m // 7)):
            exact = eval_exact(EP, badic_point(j, m, 16))
            approx = eval_phi(p, j / 16**m, 1e-13)
            assert abs(approx - float(exact)) <= 1e-9


def test_increment_telescopes_to_endpoint_difference():
    for m in range(4):
        for j in (0, 1, 3, 16**m - 1, 16**m, 2 * 16**m - 1):
            lhs = increment(EP, m, j)
            rhs = eval_exact(EP, badic_point(j + 1, m, 16)) - eval_exact(
                EP, badic_point(j, m, 16)
            )
            assert lhs == rhs
    assert increment(EP, 1, 0) == Fraction(5, 16)


def test_scaled_increments_match_scalar_loop():
    seen = 0
    for j, s in scaled_increments(EP, 2, 0, 600):
        assert j.dtype == np.int64
        for jj, ss in zip(j, s):
            assert int(ss) == _scaled_increment_int(EP, 2, int(jj))
            assert increment(EP, 2, int(jj)) == Fraction(int(ss), 16**2)
        seen += len(j)
    assert seen == 600


def test_scaled_increments_object_path_agrees():
    # depth 16 pushes base**m past int64, switching to big-integer chunks
    rows = list(scaled_increments(EP, 16, 0, 50))
    assert rows and rows[0][1].dtype == object
    for jj, ss in zip(*rows[0]):
        assert increment(EP, 16, int(jj)) == Fraction(int(ss), 16**16)


def test_scaled_increments_rejects_bad_ranges():
    with pytest.raises(ValueError):
        list(scaled_increments(EP, -1, 0, 4))
    with pytest.raises(ValueError):
        list(scaled_increments(EP, 1, 5, 5))


@pytest.mark.parametrize(
    "m,expected_ratio",
    [
        (0, Fraction(3, 2)),
        (1, Fraction(9, 8)),
        (2, Fraction(33, 32)),
        (3, Fraction(129, 128)),
    ],
)
def test_increment_bound_full_period(m, expected_ratio):
    report = verify_increment_bound(EP, m, 0, 2 * 16**m)
    assert isinstance(report, BoundReport)
    assert report.passed
    assert report.violations == ()
    assert report.checked == 2 * 16**m
    assert report.min_ratio == expected_ratio
    assert report.min_ratio >= 1


def test_increment_bound_budget_guard():
    with pytest.raises(RangeTooLarge):
        verify_increment_bound(EP, 3, 0, 2 * 16**3, budget=100)
    with pytest.raises(ValueError):
        verify_increment_bound(EP, 1, 7, 7)


def test_quotient_growth_unit_beta():
    points = quotient_growth(EP, 1, 5)
    assert [pt.quotient for pt in points] == [1, 5, 21, 85, 341, 1365]
    for m, pt in enumerate(points):
        assert pt.level == m
        assert pt.exact
        assert pt.passed
        assert pt.floor == Fraction(2, 3) * 4**m
        assert pt.quotient >= pt.floor
    assert points[5].quotient / points[1].quotient == 273


def test_quotient_growth_boundary_beta_stays_bounded():
    points = quotient_growth(EP, Fraction(1, 2), 5)
    for pt in points:
        assert pt.floor == Fraction(2, 3)
        assert pt.passed
        assert Fraction(2, 3) <= pt.quotient <= Fraction(17, 3)


def test_quotient_growth_validation():
    with pytest.raises(ValueError):
        quotient_growth(EP, Fraction(1, 4), 3)
    with pytest.raises(ValueError):
        quotient_growth(EP, 1, -1)
    with pytest.raises(RangeTooLarge):
        quotient_growth(EP, 1, 8, budget=1000)
