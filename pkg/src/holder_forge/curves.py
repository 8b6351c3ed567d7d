"""Unit-speed test curves with Hoelder-continuous derivatives.

A test curve carries its parameter domain, coordinate maps, derivative maps,
and declared regularity: gamma for the derivative's Hoelder exponent and rho
for the matching constant.  Lines and circular arcs are exact (gamma = 1,
rho = 0 resp. 1/radius); arbitrary regular maps go through arc-length
reparameterization with the regularity estimated from a grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .errors import DegenerateSpeed, NotUnitVector, OutOfDomain

# Probes never sample within this distance of a domain endpoint.
INTERIOR_MARGIN = 1e-9

# A coordinate derivative below this is treated as stationary.
STATIONARY_TOL = 1e-7

_UNIT_TOL = 1e-12
_SPEED_FLOOR = 1e-8
_QUAD_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class TestCurve:
    """Unit-speed curve on a closed interval with declared C^{1,gamma} data."""

    __test__ = False  # not a pytest item, despite the Test prefix

    domain: tuple[float, float]
    dimension: int
    position: Callable[[float], np.ndarray]
    derivative: Callable[[float], np.ndarray]
    gamma: float
    rho: float
    estimated_regularity: bool = False

    def __post_init__(self) -> None:
        a, b = self.domain
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValueError(f"domain must be a nonempty finite interval, got {self.domain}")
        if not 0.0 < self.gamma <= 1.0:
            raise ValueError(f"gamma must lie in (0, 1], got {self.gamma}")
        if not (math.isfinite(self.rho) and self.rho >= 0.0):
            raise ValueError(f"rho must be finite and nonnegative, got {self.rho}")


def make_line(x0: Sequence[float], direction: Sequence[float], half_len: float) -> TestCurve:
    """Segment s -> x0 + s * direction on [-half_len, half_len]; direction must be unit."""
    x0 = np.array(x0, dtype=float)
    v = np.array(direction, dtype=float)
    if x0.shape != v.shape or x0.ndim != 1 or x0.size == 0:
        raise ValueError("x0 and direction must be 1-d arrays of equal length")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > _UNIT_TOL:
        raise NotUnitVector(f"direction norm {norm!r} differs from 1 by more than {_UNIT_TOL}")
    if not half_len > 0.0:
        raise ValueError(f"half_len must be positive, got {half_len}")

    def position(s: float) -> np.ndarray:
        return x0 + s * v

    def derivative(s: float) -> np.ndarray:
        return v.copy()

    return TestCurve((-float(half_len), float(half_len)), x0.size, position, derivative, 1.0, 0.0)


def make_arc(
    center: Sequence[float], radius: float, phase: float, half_len: float
) -> TestCurve:
    """Circular arc c(s) = center + radius*(cos(s/radius + phase), sin(s/radius + phase)).

    Unit speed by construction; derivative is 1-Lipschitz with constant
    rho = 1/radius.  half_len may not exceed pi * radius (half the circle).
    """
    center = np.array(center, dtype=float)
    if center.shape != (2,):
        raise ValueError("arc center must be a 2-d point")
    if not radius > 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    if not 0.0 < half_len <= math.pi * radius:
        raise ValueError(
            f"half_len must lie in (0, pi*radius] = (0, {math.pi * radius:.6g}], got {half_len}"
        )

    def position(s: float) -> np.ndarray:
        t = s / radius + phase
        return center + radius * np.array([math.cos(t), math.sin(t)])

    def derivative(s: float) -> np.ndarray:
        t = s / radius + phase
        return np.array([-math.sin(t), math.cos(t)])

    return TestCurve(
        (-float(half_len), float(half_len)), 2, position, derivative, 1.0, 1.0 / radius
    )


@dataclass(frozen=True)
class CurveReport:
    """Grid validation outcome for a test curve."""

    unit_speed_ok: bool
    max_speed_error: float
    rho_hat: float
    rho_ok: bool
    passed: bool


def validate_curve(
    curve: TestCurve,
    grid_n: int = 129,
    unit_speed_tol: float = 1e-9,
    *,
    rho_slack: float = 0.01,
) -> CurveReport:
    """Check unit speed and the declared derivative Hoelder constant on a grid.

    rho_hat is the max pairwise ratio ||c'(s2) - c'(s1)|| / |s2 - s1|**gamma;
    the report passes when speeds match 1 within unit_speed_tol and rho_hat
    stays below rho * (1 + rho_slack).
    """
    if grid_n < 2:
        raise ValueError(f"grid_n must be at least 2, got {grid_n}")
    a, b = curve.domain
    grid = np.linspace(a, b, grid_n)
    derivs = np.array([np.asarray(curve.derivative(float(s)), dtype=float) for s in grid])
    speeds = np.linalg.norm(derivs, axis=1)
    max_speed_error = float(np.max(np.abs(speeds - 1.0)))
    diffs = np.linalg.norm(derivs[None, :, :] - derivs[:, None, :], axis=2)
    seps = np.abs(grid[None, :] - grid[:, None])
    iu = np.triu_indices(grid_n, k=1)
    ratios = diffs[iu] / seps[iu] ** curve.gamma
    rho_hat = float(np.max(ratios)) if ratios.size else 0.0
    unit_speed_ok = max_speed_error <= unit_speed_tol
    rho_ok = rho_hat <= curve.rho * (1.0 + rho_slack) + 1e-12
    return CurveReport(
        unit_speed_ok=unit_speed_ok,
        max_speed_error=max_speed_error,
        rho_hat=rho_hat,
        rho_ok=rho_ok,
        passed=unit_speed_ok and rho_ok,
    )


def reparameterize_unit_speed(
    raw_position: Callable[[float], Sequence[float]],
    raw_domain: tuple[float, float],
    grid_n: int = 129,
) -> TestCurve:
    """Arc-length reparameterization of a regular raw curve.

    Speed comes from central differences of raw_position, arc length from
    adaptive quadrature at fixed tolerance, and the inverse map from monotone
    root finding.  The result has exactly unit-norm derivative (normalized
    tangent); gamma and rho are grid estimates and flagged as such.

    Raises DegenerateSpeed when the sampled raw speed falls below 1e-8.
    """
    t0, t1 = float(raw_domain[0]), float(raw_domain[1])
    if not t0 < t1:
        raise ValueError(f"raw domain must be nonempty, got {raw_domain}")
    if grid_n < 3:
        raise ValueError(f"grid_n must be at least 3, got {grid_n}")

    def raw_at(t: float) -> np.ndarray:
        return np.atleast_1d(np.asarray(raw_position(t), dtype=float))

    dim = raw_at(t0).size
    h = (t1 - t0) * 1e-7

    def velocity(t: float) -> np.ndarray:
        lo = max(t - h, t0)
        hi = min(t + h, t1)
        return (raw_at(hi) - raw_at(lo)) / (hi - lo)

    def speed(t: float) -> float:
        return float(np.linalg.norm(velocity(t)))

    grid = np.linspace(t0, t1, grid_n)
    sampled = [speed(float(t)) for t in grid]
    if min(sampled) < _SPEED_FLOOR:
        raise DegenerateSpeed(
            f"raw speed {min(sampled):.3g} below {_SPEED_FLOOR} on the sample grid"
        )
    seg = [
        quad(speed, float(grid[i]), float(grid[i + 1]), epsabs=_QUAD_TOL, epsrel=_QUAD_TOL, limit=200)[0]
        for i in range(grid_n - 1)
    ]
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    total = float(cum[-1])

    def t_of_s(s: float) -> float:
        s = min(max(float(s), 0.0), total)
        i = int(np.searchsorted(cum, s, side="right")) - 1
        i = min(max(i, 0), grid_n - 2)
        lo, hi = float(grid[i]), float(grid[i + 1])
        target = s - float(cum[i])
        if target <= 0.0:
            return lo

        def partial(t: float) -> float:
            return quad(speed, lo, t, epsabs=_QUAD_TOL, epsrel=_QUAD_TOL, limit=200)[0] - target

        if partial(hi) <= 0.0:
            return hi
        return float(brentq(partial, lo, hi, xtol=_QUAD_TOL))

    def position(s: float) -> np.ndarray:
        return raw_at(t_of_s(s))

    def derivative(s: float) -> np.ndarray:
        v = velocity(t_of_s(s))
        return v / np.linalg.norm(v)

    # estimate derivative regularity on the arc-length grid
    s_grid = np.linspace(0.0, total, grid_n)
    tangents = np.array([derivative(float(s)) for s in s_grid])
    diffs = np.linalg.norm(tangents[None, :, :] - tangents[:, None, :], axis=2)
    seps = np.abs(s_grid[None, :] - s_grid[:, None])
    iu = np.triu_indices(grid_n, k=1)
    dd, ss = diffs[iu], seps[iu]
    mask = dd > 1e-12
    if not mask.any():
        gamma_hat, rho_hat = 1.0, 0.0
    else:
        slope = float(np.polyfit(np.log(ss[mask]), np.log(dd[mask]), 1)[0])
        gamma_hat = min(1.0, max(slope, 0.05))
        rho_hat = float(np.max(dd / ss ** gamma_hat)) * 1.05
    return TestCurve(
        (0.0, total), dim, position, derivative, gamma_hat, rho_hat,
        estimated_regularity=True,
    )


def coordinate_derivative(curve: TestCurve, s0: float) -> np.ndarray:
    """Derivative vector c'(s0); raises OutOfDomain outside the closed domain."""
    a, b = curve.domain
    if not a <= s0 <= b:
        raise OutOfDomain(f"s0 = {s0!r} outside domain [{a}, {b}]")
    return np.asarray(curve.derivative(float(s0)), dtype=float)
