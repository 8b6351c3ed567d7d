"""Empirical regularity probes: oscillation profiles, exponent fits, quotient scans.

All probes treat the target as a black-box evaluable and work on geometric
scale ladders r_m = scale_base**(-m).  Results are one-sided in the usual
direction: a sampled violation certifies roughness, while its absence only
says none was found at the sampled scales.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .curves import INTERIOR_MARGIN, STATIONARY_TOL, TestCurve
from .errors import (
    CurveTooShort,
    EvaluationFailed,
    InsufficientScales,
    OutOfDomain,
)

# Default floor under which an oscillation is considered drowned by eval noise;
# ten times the 1e-12 evaluation tolerance the probes default to.
DEFAULT_DROP_FLOOR = 1e-11

# Sampled membership violations must clear the bound by this absolute slack,
# so float noise at sub-resolution offsets is never reported as an escape.
_VIOLATION_SLACK = 1e-14


def _call(f: Callable[[float], float], y: float) -> float:
    try:
        v = float(f(y))
    except Exception as exc:
        raise EvaluationFailed(f"evaluation failed at y = {y!r}: {exc}") from exc
    if not math.isfinite(v):
        raise EvaluationFailed(f"evaluation returned non-finite value at y = {y!r}")
    return v


@dataclass(frozen=True)
class OscillationProfile:
    """Max sampled |f(y) - f(x0)| per annulus |y - x0| in (r_{m+1}, r_m]."""

    center: float
    scales: tuple[float, ...]
    oscillations: tuple[float, ...]
    levels: tuple[int, ...]
    samples_per_scale: int
    seed: int

    def __post_init__(self) -> None:
        if len(self.scales) != len(self.oscillations) or len(self.scales) != len(self.levels):
            raise ValueError("scales, oscillations, and levels must align")
        arr = np.asarray(self.scales)
        if arr.size == 0 or not (arr > 0).all() or not (np.diff(arr) < 0).all():
            raise ValueError("scales must be positive and strictly decreasing")
        if any(w < 0 for w in self.oscillations):
            raise ValueError("oscillations must be nonnegative")


def _grid_witnesses(x0: float, base: float, level: int) -> list[float]:
    # Bracketing grid points of x0 at the given depth, exactly; they realize
    # the guaranteed grid-increment oscillation when they land in the annulus.
    if base != int(base) or int(base) < 2:
        return []
    scale_den = int(base) ** level
    g = math.floor(Fraction(x0) * scale_den)
    out = []
    for k in (g - 1, g, g + 1, g + 2):
        out.append(float(Fraction(k, scale_den)))
    return out


def _annulus_samples(
    rng: np.random.Generator,
    x0: float,
    r_in: float,
    r_out: float,
    count: int,
    base: float,
    level: int,
) -> list[float]:
    ys = [x0 + r_out, x0 - r_out]
    ys.extend(_grid_witnesses(x0, base, level))
    ys.extend(_grid_witnesses(x0, base, level + 1))
    per_side = max(count // 2, 1)
    edges = np.linspace(r_in, r_out, per_side + 1)
    for sign in (1.0, -1.0):
        offsets = rng.uniform(edges[:-1], edges[1:])
        ys.extend(x0 + sign * float(u) for u in offsets)
    kept = []
    for y in ys:
        d = abs(y - x0)
        if r_in < d <= r_out * (1.0 + 1e-9):
            kept.append(y)
    return kept


def oscillation_profile(
    f: Callable[[float], float],
    x0: float,
    m_range: tuple[int, int],
    samples_per_scale: int = 64,
    seed: int = 0,
    *,
    scale_base: float = 2.0,
) -> OscillationProfile:
    """Sample oscillations of f around x0 on the annulus ladder of scale_base.

    Each annulus (r_{m+1}, r_m], r_m = scale_base**(-m), gets stratified
    uniform offsets on both sides plus deterministic witnesses: the annulus
    edges and the grid points bracketing x0 at depths m and m+1.  Determinism
    given (f, x0, m_range, samples_per_scale, seed) is part of the contract.
    """
    m_lo, m_hi = int(m_range[0]), int(m_range[1])
    if m_lo > m_hi:
        raise ValueError(f"empty m_range {m_range}")
    if samples_per_scale < 16:
        raise ValueError(f"samples_per_scale must be at least 16, got {samples_per_scale}")
    if not scale_base > 1.0:
        raise ValueError(f"scale_base must exceed 1, got {scale_base}")
    x0 = float(x0)
    rng = np.random.default_rng(seed)
    f0 = _call(f, x0)
    scales, oscillations, levels = [], [], []
    for m in range(m_lo, m_hi + 1):
        r_out = scale_base ** -m
        r_in = scale_base ** -(m + 1)
        best = 0.0
        for y in _annulus_samples(rng, x0, r_in, r_out, samples_per_scale, scale_base, m):
            best = max(best, abs(_call(f, y) - f0))
        scales.append(r_out)
        oscillations.append(best)
        levels.append(m)
    return OscillationProfile(
        center=x0,
        scales=tuple(scales),
        oscillations=tuple(oscillations),
        levels=tuple(levels),
        samples_per_scale=samples_per_scale,
        seed=seed,
    )


@dataclass(frozen=True)
class ExponentEstimate:
    """Least-squares slope of log oscillation against log scale."""

    alpha_hat: float
    r_squared: float
    window: tuple[int, int]


def estimate_exponent(
    profile: OscillationProfile,
    drop_floor: float = DEFAULT_DROP_FLOOR,
    *,
    drop_coarsest: int = 2,
) -> ExponentEstimate:
    """Fit the roughness exponent from an oscillation profile.

    The coarsest drop_coarsest scales are excluded (oscillation saturates at
    the series sup once the scale is near 1), as is any scale whose
    oscillation sits below drop_floor, where eval noise or sub-resolution
    sampling dominates.  At least three scales must survive.
    """
    rows = [
        (lvl, r, w)
        for lvl, r, w in zip(profile.levels, profile.scales, profile.oscillations)
    ][drop_coarsest:]
    usable = [(lvl, r, w) for lvl, r, w in rows if w >= drop_floor]
    if len(usable) < 3:
        raise InsufficientScales(
            f"{len(usable)} scales above the floor {drop_floor:g}, need at least 3"
        )
    log_r = np.log([r for _, r, _ in usable])
    log_w = np.log([w for _, _, w in usable])
    slope, intercept = np.polyfit(log_r, log_w, 1)
    fitted = slope * log_r + intercept
    ss_res = float(np.sum((log_w - fitted) ** 2))
    ss_tot = float(np.sum((log_w - np.mean(log_w)) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return ExponentEstimate(
        alpha_hat=float(slope),
        r_squared=r_squared,
        window=(usable[0][0], usable[-1][0]),
    )


@dataclass(frozen=True)
class QuotientReport:
    """First-order difference quotients of f along a curve at ladder scales."""

    center: float
    max_quotient: float
    per_scale: tuple[tuple[int, float, float], ...]  # (m, r_m, max quotient)


def lipschitz_quotient(
    f: Callable[[Sequence[float]], float],
    curve: TestCurve,
    s0: float,
    m_range: tuple[int, int],
    *,
    scale_base: float = 2.0,
) -> QuotientReport:
    """Max sampled |f(c(s)) - f(c(s0))| / |s - s0| per scale, deterministic.

    Samples sit at the exact scale offsets s0 +/- r_m, at the geometric
    midpoints toward the next scale, and at offsets steering each moving
    coordinate of the curve onto its bracketing ladder grid points at depths
    m and m + 1 (where the guaranteed grid increments live).  Unbounded
    growth of the per-scale max as m grows certifies that no Lipschitz
    bound holds at c(s0).
    """
    m_lo, m_hi = int(m_range[0]), int(m_range[1])
    if m_lo > m_hi:
        raise ValueError(f"empty m_range {m_range}")
    if not scale_base > 1.0:
        raise ValueError(f"scale_base must exceed 1, got {scale_base}")
    a, b = curve.domain
    s0 = float(s0)
    r_top = scale_base ** -m_lo
    if s0 - r_top < a + INTERIOR_MARGIN - 1e-15 or s0 + r_top > b - INTERIOR_MARGIN + 1e-15:
        raise OutOfDomain(
            f"scales down to {r_top:g} around s0 = {s0} leave the domain "
            f"[{a}, {b}] (margin {INTERIOR_MARGIN:g})"
        )
    x0 = np.asarray(curve.position(s0), dtype=float)
    v0 = np.asarray(curve.derivative(s0), dtype=float)
    g0 = _call(lambda s: f(curve.position(s)), s0)
    per_scale = []
    best = 0.0
    for m in range(m_lo, m_hi + 1):
        r = scale_base ** -m
        mid = r / math.sqrt(scale_base)
        offsets = [r, -r, mid, -mid]
        for j in range(x0.size):
            if abs(v0[j]) <= STATIONARY_TOL:
                continue
            for level in (m, m + 1):
                for w in _grid_witnesses(float(x0[j]), scale_base, level):
                    offsets.append((w - float(x0[j])) / float(v0[j]))
        level_best = 0.0
        for offset in offsets:
            s = s0 + offset
            if not 0.0 < abs(offset) <= 2.0 * r:
                continue
            if s < a + INTERIOR_MARGIN - 1e-15 or s > b - INTERIOR_MARGIN + 1e-15:
                continue
            q = abs(_call(lambda t: f(curve.position(t)), s) - g0) / abs(offset)
            level_best = max(level_best, q)
        per_scale.append((m, r, level_best))
        best = max(best, level_best)
    return QuotientReport(center=s0, max_quotient=best, per_scale=tuple(per_scale))


@dataclass(frozen=True)
class MembershipResult:
    """One-sided verdict for the sampled Lipschitz-bound membership test.

    satisfied=True means no sampled violation (not a proof of membership);
    satisfied=False certifies the bound fails along this curve, with the
    witnessing scale index, offset, and quotient recorded.
    """

    satisfied: bool
    witness_level: int | None = None
    witness_offset: float | None = None
    witness_quotient: float | None = None


def fn_membership_probe(
    f: Callable[[Sequence[float]], float],
    curves: Sequence[TestCurve],
    n: int,
    *,
    m_max: int = 12,
    samples_per_scale: int = 16,
    seed: int = 0,
    scale_base: float = 2.0,
    scales: Sequence[float] | None = None,
) -> list[MembershipResult]:
    """Test |f(c(s)) - f(c(center))| <= n * |s - center| on sampled offsets.

    Offsets per scale are the exact +/- r_m edges plus stratified uniform
    draws from the annulus below, seeded per curve index, so verdicts are
    deterministic given (curves, n, seed) and, on identical samples, monotone
    in n.  Scales default to r_m = (1/n) * scale_base**(-m) for m <= m_max.

    Raises CurveTooShort when a curve's domain cannot cover [-1/n, 1/n]
    around its midpoint.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if scales is None:
        r0 = (1.0 / n) * (1.0 - 1e-9)  # stay clear of the domain endpoints
        scale_list = [r0 * scale_base ** -m for m in range(m_max + 1)]
    else:
        scale_list = sorted((float(r) for r in scales), reverse=True)
        if not scale_list or scale_list[-1] <= 0:
            raise ValueError("explicit scales must be positive")
    results = []
    for idx, curve in enumerate(curves):
        a, b = curve.domain
        mid = 0.5 * (a + b)
        if (b - a) / 2.0 < (1.0 / n) * (1.0 - 1e-12):
            raise CurveTooShort(
                f"curve {idx}: domain half-length {(b - a) / 2:g} below 1/n = {1.0 / n:g}"
            )
        rng = np.random.default_rng([seed, idx])
        g0 = _call(lambda s: f(curve.position(s)), mid)
        found: MembershipResult | None = None
        for lvl, r in enumerate(scale_list):
            r_next = scale_list[lvl + 1] if lvl + 1 < len(scale_list) else r / scale_base
            offsets = [r, -r]
            strata = np.linspace(r_next, r, max(samples_per_scale // 2, 1) + 1)
            for sign in (1.0, -1.0):
                offsets.extend(
                    sign * float(u) for u in rng.uniform(strata[:-1], strata[1:])
                )
            for offset in offsets:
                s = mid + offset
                if not a <= s <= b:
                    continue
                gap = abs(_call(lambda t: f(curve.position(t)), s) - g0)
                if gap > n * abs(offset) + _VIOLATION_SLACK:
                    found = MembershipResult(
                        satisfied=False,
                        witness_level=lvl,
                        witness_offset=offset,
                        witness_quotient=gap / abs(offset),
                    )
                    break
            if found is not None:
                break
        results.append(found if found is not None else MembershipResult(satisfied=True))
    return results
