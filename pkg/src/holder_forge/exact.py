"""Exact rational series values and increments on base-adic grids.

When alpha = p/q and base = a**q for an even integer a, every weight
base**(-k*alpha) = a**(-p*k) is an exact rational, and at a grid point
j / base**m the series is a finite sum: terms past k = m see an even integer
argument and vanish.  Everything in this module is integer / Fraction
arithmetic with no rounding anywhere.

Scans rely on a scaled form.  Writing A = base**(1-alpha) = a**(q-p), the
increment across one grid step at depth m satisfies

    value((j+1)/base**m) - value(j/base**m) = S / base**m,
    S = sum_{k=0}^{m} d_k * A**k,   d_k integer, |d_k| <= 1,

and the lower-bound check |S| * (A-1) >= (A-2) * A**m is a pure integer
comparison.  The numpy int64 fast path is guarded by a proven bound on all
intermediates; anything larger falls back to Python integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import GapConditionViolated, InexactBase, RangeTooLarge
from .sawtooth import SeriesParams, validate_params

DEFAULT_SCAN_BUDGET = 4_000_000

_INT64_SAFE = 1 << 61
_CHUNK = 1 << 19


@dataclass(frozen=True)
class BAdicPoint:
    """Grid point j / base**m in lowest base-adic terms (base does not divide j unless m = 0)."""

    j: int
    m: int

    def value(self, base: int) -> Fraction:
        return Fraction(self.j, base ** self.m)


def badic_point(j: int, m: int, base: int) -> BAdicPoint:
    """Canonical grid point for j / base**m."""
    if m < 0:
        raise ValueError(f"depth m must be nonnegative, got {m}")
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    while m > 0 and j % base == 0:
        j //= base
        m -= 1
    return BAdicPoint(j, m)


def _integer_root(n: int, k: int):
    # largest-candidate search around the float root; None if no exact root
    if k == 1:
        return n
    if n < 2 or k > n.bit_length():
        return None
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 2 and cand ** k == n:
            return cand
    return None


@dataclass(frozen=True)
class ExactParams:
    """Series parameters restricted to the exactly-representable family.

    alpha = p/q in lowest terms, base = root**q with root even.  Then
    base**alpha = root**p (``base_pow_alpha``) and base**(1-alpha) =
    root**(q-p) (``base_pow_gap``) are integers and all grid values are
    rationals with denominator dividing (base**alpha * base)**m.
    """

    params: SeriesParams
    alpha: Fraction
    root: int
    base_pow_alpha: int
    base_pow_gap: int

    @property
    def base(self) -> int:
        return self.params.base

    @property
    def increment_m_exact(self) -> Fraction:
        A = self.base_pow_gap
        return Fraction(A - 2, A - 1)

    @property
    def holder_c_exact(self) -> Fraction:
        A, B = self.base_pow_gap, self.base_pow_alpha
        return Fraction(A * A, A - 1) + Fraction(1, B - 1)


def exact_params(alpha, base: int) -> ExactParams:
    """Build ExactParams from alpha given as Fraction, 'p/q' string, or number.

    Floats are converted exactly (their binary value), so 0.5 works while
    0.6 does not; pass '3/5' or Fraction(3, 5) instead.
    """
    try:
        frac = Fraction(alpha)
    except (TypeError, ValueError) as exc:
        raise InexactBase(f"alpha {alpha!r} is not a rational number: {exc}") from exc
    params = validate_params(float(frac), base)
    p, q = frac.numerator, frac.denominator
    root = _integer_root(base, q)
    if root is None or root % 2:
        raise InexactBase(
            f"base {base} is not an even integer to the power {q}; exact mode "
            f"needs alpha = p/q with base = a**q and a even (alpha = {frac})"
        )
    if root ** (q - p) <= 2:
        # validate_params already checks this in float; repeat exactly
        raise GapConditionViolated(
            f"base**(1-alpha) = {root ** (q - p)} must exceed 2 (alpha={frac}, base={base})"
        )
    return ExactParams(params, frac, root, root ** p, root ** (q - p))


def _phi_fraction(x: Fraction) -> Fraction:
    # distance from a rational to the nearest even integer
    y = x - 2 * math.floor(x / 2)
    return min(y, 2 - y)


def eval_exact(ep: ExactParams, pt: BAdicPoint) -> Fraction:
    """Exact series value at j / base**m.

    Terms past k = m vanish (their argument is an even integer), so the full
    series equals the finite sum through k = m.
    """
    pt = badic_point(pt.j, pt.m, ep.base)
    b = ep.base
    total = Fraction(0)
    for k in range(pt.m + 1):
        phi = _phi_fraction(Fraction(pt.j, b ** (pt.m - k)))
        total += Fraction(phi, ep.base_pow_alpha ** k)
    return total


def increment(ep: ExactParams, m: int, j: int) -> Fraction:
    """Exact difference value((j+1)/base**m) - value(j/base**m).

    Computed as the telescoped finite sum over k <= m: terms past m are
    identical at both endpoints (even-integer shift of a 2-periodic wave)
    and cancel exactly, so no subtraction of two full evaluations happens.
    """
    if m < 0:
        raise ValueError(f"depth m must be nonnegative, got {m}")
    b = ep.base
    total = Fraction(0)
    for k in range(m + 1):
        den = b ** (m - k)
        diff = _phi_fraction(Fraction(j + 1, den)) - _phi_fraction(Fraction(j, den))
        total += Fraction(diff, ep.base_pow_alpha ** k)
    return total


def _scaled_increment_int(ep: ExactParams, m: int, j: int) -> int:
    # S with increment == S / base**m; pure Python integers, any size
    b, A = ep.base, ep.base_pow_gap
    s = 0
    for k in range(m + 1):
        pp = b ** (m - k)
        two_p = 2 * pp
        r0 = j % two_p
        r1 = (j + 1) % two_p
        s += (min(r1, two_p - r1) - min(r0, two_p - r0)) * A ** k
    return s


def _int64_scan_ok(ep: ExactParams, m: int) -> bool:
    A = ep.base_pow_gap
    return ep.base ** m < _INT64_SAFE and A ** (m + 1) < _INT64_SAFE


def scaled_increments(
    ep: ExactParams, m: int, j_lo: int, j_hi: int
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (j, S) chunk pairs with increment(ep, m, j) == S / base**m.

    int64 numpy fast path when all intermediates provably fit, otherwise a
    Python big-integer loop delivering object arrays.
    """
    if m < 0:
        raise ValueError(f"depth m must be nonnegative, got {m}")
    if j_lo >= j_hi:
        raise ValueError(f"empty scan range [{j_lo}, {j_hi})")
    b, A = ep.base, ep.base_pow_gap
    if _int64_scan_ok(ep, m):
        for lo in range(j_lo, j_hi, _CHUNK):
            hi = min(lo + _CHUNK, j_hi)
            j = np.arange(lo, hi, dtype=np.int64)
            s = np.zeros_like(j)
            for k in range(m + 1):
                two_p = 2 * b ** (m - k)
                r0 = j % two_p
                r1 = (j + 1) % two_p
                phi0 = np.minimum(r0, two_p - r0)
                phi1 = np.minimum(r1, two_p - r1)
                s += (phi1 - phi0) * A ** k
            yield j, s
    else:
        for lo in range(j_lo, j_hi, _CHUNK):
            hi = min(lo + _CHUNK, j_hi)
            j = np.arange(lo, hi, dtype=object)
            s = np.array([_scaled_increment_int(ep, m, int(jj)) for jj in j], dtype=object)
            yield j, s


@dataclass(frozen=True)
class BoundReport:
    """Outcome of an exhaustive increment lower-bound check at one depth."""

    level: int
    j_lo: int
    j_hi: int
    checked: int
    min_ratio: Fraction
    argmin_j: int
    violations: tuple[int, ...]
    passed: bool


def verify_increment_bound(
    ep: ExactParams,
    m: int,
    j_lo: int,
    j_hi: int,
    *,
    budget: int = DEFAULT_SCAN_BUDGET,
) -> BoundReport:
    """Check |increment| >= increment_m * base**(-alpha*m) for every j in [j_lo, j_hi).

    Exact: the comparison is the integer inequality |S|*(A-1) >= (A-2)*A**m.
    Returns the minimum ratio |increment| / bound over the range along with
    any violating j (there should be none).
    """
    if j_lo >= j_hi:
        raise ValueError(f"empty range [{j_lo}, {j_hi})")
    count = j_hi - j_lo
    if count > budget:
        raise RangeTooLarge(
            f"{count} intervals exceed the scan budget of {budget}; "
            "raise the budget to proceed"
        )
    A = ep.base_pow_gap
    rhs = (A - 2) * A ** m
    best = None
    best_j = j_lo
    violations: list[int] = []
    for j, s in scaled_increments(ep, m, j_lo, j_hi):
        mag = abs(s)
        i = int(np.argmin(mag))
        if best is None or int(mag[i]) < best:
            best = int(mag[i])
            best_j = int(j[i])
        bad = mag * (A - 1) < rhs
        if bad.any():
            violations.extend(int(v) for v in j[bad])
    min_ratio = Fraction(best * (A - 1), rhs)
    return BoundReport(
        level=m,
        j_lo=j_lo,
        j_hi=j_hi,
        checked=count,
        min_ratio=min_ratio,
        argmin_j=best_j,
        violations=tuple(violations),
        passed=not violations,
    )


@dataclass(frozen=True)
class GrowthPoint:
    """Scaled max increment Q_m = max_j |increment| * base**(beta*m) at one depth.

    quotient and floor are exact Fractions when base**(beta*m) is an exact
    integer power of the root (always so for beta = 1), floats otherwise;
    ``passed`` is decided by the beta-free exact inequality either way.
    """

    level: int
    quotient: Fraction | float
    floor: Fraction | float
    argmax_j: int
    exact: bool
    passed: bool


def quotient_growth(
    ep: ExactParams,
    beta,
    m_max: int,
    *,
    budget: int = DEFAULT_SCAN_BUDGET,
) -> list[GrowthPoint]:
    """Max scaled increments over one full period for m = 0 .. m_max.

    For beta > alpha the floor increment_m * base**((beta-alpha)*m) grows
    without bound, witnessing that no beta-Hoelder bound can hold; beta =
    alpha is allowed as the boundary case with constant floor.
    """
    beta = Fraction(beta)
    if beta < ep.alpha:
        raise ValueError(f"beta = {beta} must be >= alpha = {ep.alpha}")
    if m_max < 0:
        raise ValueError(f"m_max must be nonnegative, got {m_max}")
    A = ep.base_pow_gap
    a_root = ep.root
    q = ep.alpha.denominator
    p = ep.alpha.numerator
    out: list[GrowthPoint] = []
    for m in range(m_max + 1):
        count = 2 * ep.base ** m
        if count > budget:
            raise RangeTooLarge(
                f"period at depth {m} has {count} intervals, over the budget "
                f"of {budget}"
            )
        smax = None
        arg = 0
        for j, s in scaled_increments(ep, m, 0, count):
            mag = abs(s)
            i = int(np.argmax(mag))
            if smax is None or int(mag[i]) > smax:
                smax = int(mag[i])
                arg = int(j[i])
        rhs = (A - 2) * A ** m
        passed = smax * (A - 1) >= rhs
        # Q_m = smax * base**((beta-1)*m), floor = M * base**((beta-alpha)*m);
        # both are exact when q*beta*m is an integer.
        e_q = (beta - 1) * q * m
        e_f = beta * q * m - p * m
        if e_q.denominator == 1:
            quotient = Fraction(smax) * Fraction(a_root) ** int(e_q)
            floor = ep.increment_m_exact * Fraction(a_root) ** int(e_f)
            exact = True
        else:
            quotient = smax * float(a_root) ** float(e_q)
            floor = float(ep.increment_m_exact) * float(a_root) ** float(e_f)
            exact = False
        out.append(
            GrowthPoint(
                level=m,
                quotient=quotient,
                floor=floor,
                argmax_j=arg,
                exact=exact,
                passed=passed,
            )
        )
    return out
