"""Separable multivariate roughness: one sawtooth series per coordinate.

f(x) = sum_j series_j(x_j) with pairwise distinct exponents alpha_j.  Along a
unit-speed C^{1,gamma} curve the composite's pointwise Hoelder exponent at an
interior parameter is min alpha_j over the coordinates that actually move
there: stationary coordinates contribute increments of order
|s|^(alpha_j*(1+gamma)), which stay differentiable-small precisely when
alpha_j > 1/(1+gamma).  That window is enforced at construction, so every
component is admissible for curves of the reference gamma or smoother.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .curves import STATIONARY_TOL, TestCurve, coordinate_derivative
from .errors import (
    DimensionMismatch,
    DuplicateExponents,
    EmptyActiveSet,
    ExponentOutOfRange,
    GammaMismatch,
    OutOfDomain,
)
from .sawtooth import SeriesParams, eval_phi, validate_params

# Exponents closer than this are considered duplicates.
MIN_EXPONENT_GAP = 1e-12

# Auto base policy: smallest even base with base**(1-alpha) > 2*(1+margin).
AUTO_BASE_MARGIN = 0.01


@dataclass(frozen=True)
class SeparableFunction:
    """Coordinatewise sum of sawtooth series with distinct exponents."""

    components: tuple[SeriesParams, ...]
    gamma_ref: float

    def __post_init__(self) -> None:
        if not self.components:
            raise ValueError("at least one component is required")
        if not 0.0 < self.gamma_ref <= 1.0:
            raise ValueError(f"gamma_ref must lie in (0, 1], got {self.gamma_ref}")
        alphas = [c.alpha for c in self.components]
        lower = 1.0 / (1.0 + self.gamma_ref)
        for a in alphas:
            if not lower < a < 1.0:
                raise ExponentOutOfRange(
                    f"alpha = {a} outside the open window ({lower:.6g}, 1) "
                    f"for gamma = {self.gamma_ref}"
                )
        srt = sorted(alphas)
        for x, y in zip(srt, srt[1:]):
            if y - x < MIN_EXPONENT_GAP:
                raise DuplicateExponents(
                    f"exponents {x} and {y} closer than {MIN_EXPONENT_GAP}"
                )

    @property
    def dimension(self) -> int:
        return len(self.components)


def auto_base(alpha: float, *, margin: float = AUTO_BASE_MARGIN) -> int:
    """Smallest even base whose gap base**(1-alpha) clears 2*(1+margin)."""
    if not 0.0 < alpha < 1.0:
        raise ExponentOutOfRange(f"alpha must lie in (0, 1), got {alpha}")
    threshold = (2.0 * (1.0 + margin)) ** (1.0 / (1.0 - alpha))
    b = 2 * math.floor(threshold / 2.0) + 2
    while not b ** (1.0 - alpha) > 2.0 * (1.0 + margin):
        b += 2
    return b


def build_separable(
    alphas: Sequence[float],
    gamma: float,
    bases: Sequence[int] | str = "auto",
) -> SeparableFunction:
    """Assemble a separable function, picking bases automatically if asked.

    Args:
        alphas: component exponents, pairwise distinct, each strictly inside
            (1/(1+gamma), 1).
        gamma: reference curve regularity the function is meant to be probed
            with.
        bases: "auto" for the smallest-even-base policy per component, or an
            explicit sequence matching alphas.
    """
    alphas = [float(a) for a in alphas]
    if isinstance(bases, str):
        if bases != "auto":
            raise ValueError(f"bases must be 'auto' or a sequence, got {bases!r}")
        resolved = [auto_base(a) for a in alphas]
    else:
        resolved = [int(b) for b in bases]
        if len(resolved) != len(alphas):
            raise DimensionMismatch(
                f"{len(alphas)} exponents but {len(resolved)} bases"
            )
    components = tuple(validate_params(a, b) for a, b in zip(alphas, resolved))
    return SeparableFunction(components, float(gamma))


def eval_separable(f: SeparableFunction, x: Sequence[float], tol: float) -> float:
    """Sum of component series at x, each within tol / dimension."""
    if len(x) != f.dimension:
        raise DimensionMismatch(
            f"point has {len(x)} coordinates, function expects {f.dimension}"
        )
    per = tol / f.dimension
    return math.fsum(
        eval_phi(c, float(xi), per) for c, xi in zip(f.components, x)
    )


@dataclass(frozen=True)
class PredictedRegularity:
    """Predicted pointwise Hoelder exponent of f composed with a curve."""

    alpha: float
    active: tuple[int, ...]
    stationary: tuple[int, ...]


def predicted_exponent(
    f: SeparableFunction,
    curve: TestCurve,
    s0: float,
    zero_tol: float = STATIONARY_TOL,
) -> PredictedRegularity:
    """Split coordinates into moving/stationary at s0 and take min alpha over the movers.

    Raises GammaMismatch when the curve's gamma is below the function's
    reference gamma (stationary components were only validated down to
    1/(1+gamma_ref)), and EmptyActiveSet when no coordinate moves, which a
    genuine unit-speed curve cannot produce.
    """
    if curve.dimension != f.dimension:
        raise DimensionMismatch(
            f"curve dimension {curve.dimension} != function dimension {f.dimension}"
        )
    a, b = curve.domain
    if not a < s0 < b:
        raise OutOfDomain(f"s0 = {s0!r} not interior to [{a}, {b}]")
    if curve.gamma < f.gamma_ref:
        raise GammaMismatch(
            f"curve gamma {curve.gamma} below reference gamma {f.gamma_ref}"
        )
    velocity = coordinate_derivative(curve, s0)
    active = tuple(i for i, v in enumerate(velocity) if abs(float(v)) > zero_tol)
    stationary = tuple(i for i in range(f.dimension) if i not in active)
    if not active:
        raise EmptyActiveSet(
            f"no coordinate moves at s0 = {s0} (|c'| <= {zero_tol} in every "
            "coordinate); not a unit-speed curve"
        )
    alpha = min(f.components[i].alpha for i in active)
    return PredictedRegularity(alpha=alpha, active=active, stationary=stationary)
