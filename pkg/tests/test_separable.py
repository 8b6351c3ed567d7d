"""Separable builder, auto bases, evaluation, exponent prediction."""

from __future__ import annotations

import math

import numpy as np
import pytest

from holder_forge import (
    DimensionMismatch,
    DuplicateExponents,
    EmptyActiveSet,
    ExponentOutOfRange,
    GammaMismatch,
    OutOfDomain,
    SeparableFunction,
    TestCurve,
    auto_base,
    build_separable,
    eval_phi,
    eval_separable,
    make_arc,
    make_line,
    predicted_exponent,
)

SQ2 = 1.0 / math.sqrt(2.0)


def test_auto_base_policy():
    assert auto_base(0.5) == 6
    assert auto_base(0.6) == 6
    assert auto_base(0.8) == 34
    for alpha in (0.51, 0.6, 0.75, 0.9):
        b = auto_base(alpha)
        assert b % 2 == 0
        assert b ** (1.0 - alpha) > 2.02
        assert b == 2 or not (b - 2) ** (1.0 - alpha) > 2.02
    with pytest.raises(ExponentOutOfRange):
        auto_base(1.0)


def test_build_with_explicit_and_auto_bases():
    f = build_separable([0.6, 0.8], 1.0, [16, 64])
    assert f.dimension == 2
    assert [c.alpha for c in f.components] == [0.6, 0.8]
    assert [c.base for c in f.components] == [16, 64]
    g = build_separable([0.55, 0.7], 1.0)
    assert [c.base for c in g.components] == [auto_base(0.55), auto_base(0.7)]


def test_exponent_window_is_open():
    # gamma = 1 admits only alpha in (1/2, 1), endpoints excluded
    with pytest.raises(ExponentOutOfRange):
        build_separable([0.5], 1.0, [16])
    with pytest.raises(ExponentOutOfRange):
        build_separable([0.3], 1.0, [16])
    with pytest.raises(ExponentOutOfRange):
        build_separable([0.6], 0.6, [16])  # needs alpha > 1/1.6 = 0.625
    build_separable([0.63], 0.6, [64])


def test_duplicate_and_mismatched_components():
    with pytest.raises(DuplicateExponents):
        build_separable([0.7, 0.7], 1.0, [16, 64])
    with pytest.raises(DimensionMismatch):
        build_separable([0.6, 0.8], 1.0, [16])
    with pytest.raises(ValueError):
        build_separable([], 1.0)
    with pytest.raises(ValueError):
        build_separable([0.7], 0.0, [16])
    with pytest.raises(ValueError):
        build_separable([0.6, 0.8], 1.0, "some")


def test_eval_known_component_values():
    # 32**(3/5) = 8, so the depth-1 grid value comes out in closed form
    f = build_separable([3.0 / 5.0, 4.0 / 5.0], 1.0, [32, 1024])
    assert eval_separable(f, (1.0 / 32.0, 0.0), 1e-12) == pytest.approx(5.0 / 32.0, abs=1e-14)
    assert eval_separable(f, (0.0, 1.0), 1e-12) == pytest.approx(1.0, abs=1e-14)
    assert eval_separable(f, (0.0, 0.0), 1e-12) == 0.0


def test_eval_sums_components_with_split_tolerance():
    f = build_separable([0.6, 0.8], 1.0, [16, 64])
    x = (0.3125, 0.7)
    manual = math.fsum(
        eval_phi(c, xi, 1e-10 / 2) for c, xi in zip(f.components, x)
    )
    assert eval_separable(f, x, 1e-10) == manual
    with pytest.raises(DimensionMismatch):
        eval_separable(f, (0.1, 0.2, 0.3), 1e-10)


def test_predicted_exponent_splits_active_set():
    f = build_separable([0.6, 0.8], 1.0, [16, 64])
    # at s = 0 the arc moves only vertically: first coordinate is stationary
    arc = make_arc((0.0, 0.0), 1.0, 0.0, 1.5)
    pred = predicted_exponent(f, arc, 0.0)
    assert pred.active == (1,)
    assert pred.stationary == (0,)
    assert pred.alpha == 0.8
    line = make_line((0.3, 0.55), (SQ2, SQ2), 1.5)
    pred = predicted_exponent(f, line, 0.2)
    assert pred.active == (0, 1)
    assert pred.stationary == ()
    assert pred.alpha == 0.6


def test_predicted_exponent_guards():
    f = build_separable([0.6, 0.8], 1.0, [16, 64])
    line = make_line((0.0, 0.0), (1.0, 0.0), 1.0)
    with pytest.raises(OutOfDomain):
        predicted_exponent(f, line, 1.0)  # endpoint is not interior
    with pytest.raises(DimensionMismatch):
        predicted_exponent(f, make_line((0.0,), (1.0,), 1.0), 0.0)

    rough_curve = TestCurve(
        (-1.0, 1.0), 2,
        lambda s: np.array([s, 0.0]),
        lambda s: np.array([1.0, 0.0]),
        0.5, 1.0,
    )
    with pytest.raises(GammaMismatch):
        predicted_exponent(f, rough_curve, 0.0)

    frozen = TestCurve(
        (-1.0, 1.0), 2,
        lambda s: np.array([0.5, 0.5]),
        lambda s: np.array([0.0, 0.0]),
        1.0, 0.0,
    )
    with pytest.raises(EmptyActiveSet):
        predicted_exponent(f, frozen, 0.0)


def test_component_validation_happens_at_build():
    with pytest.raises(Exception):
        SeparableFunction((), 1.0)
