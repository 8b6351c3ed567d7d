"""Curve constructors, validation reports, reparameterization."""

from __future__ import annotations

import math

import numpy as np
import pytest

from holder_forge import (
    DegenerateSpeed,
    NotUnitVector,
    OutOfDomain,
    TestCurve,
    coordinate_derivative,
    make_arc,
    make_line,
    reparameterize_unit_speed,
    validate_curve,
)

SQ2 = 1.0 / math.sqrt(2.0)


def test_line_geometry():
    c = make_line((0.3, 0.55), (SQ2, SQ2), 1.5)
    assert c.domain == (-1.5, 1.5)
    assert c.dimension == 2
    assert c.gamma == 1.0 and c.rho == 0.0
    np.testing.assert_allclose(c.position(0.0), [0.3, 0.55])
    np.testing.assert_allclose(c.position(1.0), [0.3 + SQ2, 0.55 + SQ2])
    np.testing.assert_allclose(c.derivative(0.7), [SQ2, SQ2])


def test_line_rejects_non_unit_direction():
    with pytest.raises(NotUnitVector):
        make_line((0.0, 0.0), (1.0, 1.0), 1.0)
    with pytest.raises(ValueError):
        make_line((0.0, 0.0), (1.0, 0.0), 0.0)
    with pytest.raises(ValueError):
        make_line((0.0,), (1.0, 0.0), 1.0)


def test_arc_geometry():
    c = make_arc((1.0, -2.0), 2.0, 0.25, 3.0)
    assert c.domain == (-3.0, 3.0)
    for s in np.linspace(-3.0, 3.0, 11):
        p = c.position(float(s))
        assert np.linalg.norm(p - np.array([1.0, -2.0])) == pytest.approx(2.0, abs=1e-12)
        v = c.derivative(float(s))
        assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-12)
    # speed is exactly arc length: position advances by the parameter
    assert np.linalg.norm(c.position(0.1) - c.position(0.0)) == pytest.approx(0.1, abs=1e-3)


def test_arc_rejects_overlong_and_degenerate():
    with pytest.raises(ValueError):
        make_arc((0.0, 0.0), 1.0, 0.0, math.pi + 0.01)
    with pytest.raises(ValueError):
        make_arc((0.0, 0.0), 0.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        make_arc((0.0, 0.0, 0.0), 1.0, 0.0, 1.0)
    make_arc((0.0, 0.0), 1.0, 0.0, math.pi)  # half circle is allowed


def test_validate_curve_passes_constructors():
    line = make_line((0.0, 0.0), (0.0, 1.0), 2.0)
    arc = make_arc((0.5, 0.5), 0.25, 1.0, 0.6)
    for c in (line, arc):
        report = validate_curve(c)
        assert report.passed
        assert report.unit_speed_ok and report.rho_ok
        assert report.max_speed_error <= 1e-9
    assert validate_curve(arc).rho_hat <= 4.0 * 1.01


def test_validate_curve_flags_bad_speed_and_rho():
    bad_speed = TestCurve(
        (-1.0, 1.0), 2,
        lambda s: np.array([2.0 * s, 0.0]),
        lambda s: np.array([2.0, 0.0]),
        1.0, 0.0,
    )
    report = validate_curve(bad_speed)
    assert not report.passed and not report.unit_speed_ok

    lying_rho = make_arc((0.0, 0.0), 0.5, 0.0, 1.0)
    object.__setattr__(lying_rho, "rho", 0.1)  # true constant is 1/0.5 = 2
    report = validate_curve(lying_rho)
    assert not report.rho_ok and not report.passed

    with pytest.raises(ValueError):
        validate_curve(bad_speed, grid_n=1)


def test_reparameterize_quadratic_graph():
    c = reparameterize_unit_speed(lambda t: (t, t * t), (0.0, 1.0))
    # closed-form arc length of the parabola graph on [0, 1]
    expected = math.sqrt(5.0) / 2.0 + math.asinh(2.0) / 4.0
    assert c.domain[0] == 0.0
    assert c.domain[1] == pytest.approx(expected, abs=1e-6)
    assert c.estimated_regularity
    np.testing.assert_allclose(c.position(0.0), [0.0, 0.0], atol=1e-9)
    np.testing.assert_allclose(c.position(c.domain[1]), [1.0, 1.0], atol=1e-5)
    for s in np.linspace(0.0, c.domain[1], 9):
        assert np.linalg.norm(c.derivative(float(s))) == pytest.approx(1.0, abs=1e-9)
    assert validate_curve(c, grid_n=33, unit_speed_tol=1e-6).unit_speed_ok


def test_reparameterize_rejects_stalling_curve():
    with pytest.raises(DegenerateSpeed):
        reparameterize_unit_speed(lambda t: (t**3, 0.0), (-1.0, 1.0))
    with pytest.raises(ValueError):
        reparameterize_unit_speed(lambda t: (t, 0.0), (1.0, 1.0))


def test_coordinate_derivative_domain_check():
    c = make_line((0.0, 0.0), (1.0, 0.0), 1.0)
    np.testing.assert_allclose(coordinate_derivative(c, 0.5), [1.0, 0.0])
    with pytest.raises(OutOfDomain):
        coordinate_derivative(c, 1.5)
