"""Sawtooth series with certified evaluation error.

The building block is the sawtooth wave ``sawtooth(x)``: the distance from x
to the nearest even integer.  It is even, 2-periodic, 1-Lipschitz, and takes
values in [0, 1].  Rescaled copies are summed into

    value(x) = sum_{k>=0} base**(-k*alpha) * sawtooth(base**k * x)

for an even integer ``base`` and an exponent ``0 < alpha < 1``.  The sum is
bounded and alpha-Hoelder with the explicit constant ``holder_c``; when the
gap condition ``base**(1-alpha) > 2`` holds, grid increments at every depth m
stay above ``increment_m * base**(-alpha*m)``, so the function is as rough as
the Hoelder bound allows and in particular nowhere differentiable.

Evaluation truncates the series at the smallest depth whose geometric tail
bound is below the requested tolerance.  Arguments are reduced exactly: a
float is a dyadic rational n / 2**t, and because the base is even,
``base**k * x mod 2`` is plain integer arithmetic.  No precision is lost to
argument folding, so the returned certificate is honest down to roundoff.
A convenient corollary of the even base: once the reduced numerator hits 0
every later term vanishes exactly, and the loop stops early.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import AlphaOutOfRange, BaseNotEven, GapConditionViolated, TolTooSmall

# Hard cap on summed terms; tolerances needing more depth raise TolTooSmall.
MAX_SERIES_TERMS = 4096

_UNIT_ROUNDOFF = 2.0 ** -53


@dataclass(frozen=True)
class SeriesParams:
    """Validated (alpha, base) pair with cached roughness constants.

    holder_c bounds |value(x) - value(y)| / |x - y|**alpha from above for
    x, y in [0, 1]; increment_m bounds grid increments from below:
    |value((j+1)/base**m) - value(j/base**m)| >= increment_m * base**(-alpha*m).
    """

    alpha: float
    base: int
    holder_c: float = field(init=False)
    increment_m: float = field(init=False)

    def __post_init__(self) -> None:
        alpha = self.alpha
        if not isinstance(alpha, (int, float)) or isinstance(alpha, bool):
            raise AlphaOutOfRange(f"alpha must be a real number, got {alpha!r}")
        if not (math.isfinite(alpha) and 0.0 < alpha < 1.0):
            raise AlphaOutOfRange(f"alpha must lie strictly in (0, 1), got {alpha!r}")
        base = self.base
        if isinstance(base, bool) or not isinstance(base, int):
            raise BaseNotEven(f"base must be an even integer, got {base!r}")
        if base < 2 or base % 2:
            raise BaseNotEven(f"base must be an even integer >= 2, got {base}")
        gap = base ** (1.0 - alpha)
        if not gap > 2.0:
            raise GapConditionViolated(
                f"base**(1-alpha) = {gap:.6g} must exceed 2 strictly "
                f"(alpha={alpha}, base={base})"
            )
        holder_c = gap / (1.0 - base ** -(1.0 - alpha)) + base ** -alpha / (
            1.0 - base ** -alpha
        )
        object.__setattr__(self, "holder_c", holder_c)
        object.__setattr__(self, "increment_m", 1.0 - 1.0 / (gap - 1.0))


def validate_params(alpha: float, base: int) -> SeriesParams:
    """Validate an (alpha, base) pair and return it with cached constants."""
    if not isinstance(alpha, (int, float)) or isinstance(alpha, bool):
        # Fraction and Decimal inputs are fine for the float path.
        try:
            alpha = float(alpha)
        except (TypeError, ValueError):
            raise AlphaOutOfRange(f"alpha must be a real number, got {alpha!r}")
    return SeriesParams(float(alpha), base)


def sawtooth(x: float) -> float:
    """Distance from x to the nearest even integer."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"sawtooth requires a finite argument, got {x!r}")
    # fmod is exact for floats; evenness of the wave lets us fold the sign.
    y = abs(math.fmod(x, 2.0))
    return min(y, 2.0 - y)


def series_sup(params: SeriesParams) -> float:
    """Upper bound sum_k base**(-k*alpha) on the whole series."""
    return 1.0 / (1.0 - params.base ** -params.alpha)


def tail_bound(params: SeriesParams, depth: int) -> float:
    """Geometric bound on the tail after summing terms k = 0 .. depth.

    Every sawtooth factor is at most 1, so the tail is at most
    base**(-(depth+1)*alpha) / (1 - base**(-alpha)).  Strictly decreasing in
    depth with limit 0.
    """
    if not isinstance(depth, int) or isinstance(depth, bool) or depth < 0:
        raise ValueError(f"depth must be a nonnegative integer, got {depth!r}")
    b, a = params.base, params.alpha
    return b ** (-(depth + 1) * a) / (1.0 - b ** -a)


def _needed_depth(params: SeriesParams, tol: float) -> int:
    # smallest depth with tail_bound <= tol; closed form plus a float-safe nudge
    b, a = params.base, params.alpha
    est = -math.log(tol * (1.0 - b ** -a)) / (a * math.log(b)) - 1.0
    k = max(0, math.ceil(est) - 2)
    while tail_bound(params, k) > tol:
        k += 1
    while k > 0 and tail_bound(params, k - 1) <= tol:
        k -= 1
    return k


@lru_cache(maxsize=128)
def _weights(base: int, alpha: float, depth: int) -> tuple[float, ...]:
    return tuple(base ** (-k * alpha) for k in range(depth + 1))


def _fold_unit(x: float) -> tuple[int, int]:
    # Exact reduction of |x| mod 2 into [0, 1] by evenness: returns (n, d)
    # with the folded value n/d and d a power of two.
    n, d = abs(x).as_integer_ratio()
    n %= 2 * d
    if n > d:
        n = 2 * d - n
    return n, d


@dataclass(frozen=True)
class EvalCertificate:
    """Evaluation result with its truncation depth and error budget."""

    value: float
    depth: int
    tail: float
    rounding: float

    @property
    def error_bound(self) -> float:
        return self.tail + self.rounding


def eval_phi_info(
    params: SeriesParams,
    x: float,
    tol: float,
    *,
    max_terms: int = MAX_SERIES_TERMS,
) -> EvalCertificate:
    """Evaluate the series at x and return the value with its certificate.

    The partial sum runs through the smallest depth whose tail bound is at
    most tol; the certified error is that tail plus a roundoff allowance of
    (depth+1) * u * series_sup (u = unit roundoff), which the exact argument
    reduction makes a generous overestimate.

    Raises TolTooSmall when the needed depth exceeds max_terms, and
    ValueError for non-finite x or nonpositive tol.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"series argument must be finite, got {x!r}")
    if not (isinstance(tol, (int, float)) and tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    depth = _needed_depth(params, tol)
    if depth > max_terms:
        raise TolTooSmall(
            f"tol={tol:g} needs {depth} series terms, over the budget of {max_terms}"
        )
    n, d = _fold_unit(x)
    two_d = 2 * d
    b = params.base
    weights = _weights(b, params.alpha, depth)
    terms = []
    r = n
    for k in range(depth + 1):
        if r == 0:
            break  # base**k * x is an even integer from here on: all terms 0
        terms.append(weights[k] * (min(r, two_d - r) / d))
        r = (r * b) % two_d
    value = math.fsum(terms)
    rounding = (depth + 1) * _UNIT_ROUNDOFF * series_sup(params)
    return EvalCertificate(value, depth, tail_bound(params, depth), rounding)


def eval_phi(
    params: SeriesParams,
    x: float,
    tol: float,
    *,
    max_terms: int = MAX_SERIES_TERMS,
) -> float:
    """Series value at x, within tol plus accumulated rounding."""
    return eval_phi_info(params, x, tol, max_terms=max_terms).value


def eval_phi_batch(
    params: SeriesParams,
    points,
    tol: float,
    *,
    max_terms: int = MAX_SERIES_TERMS,
) -> list[float]:
    """Evaluate the series at each point, preserving order.

    Per-point failures are re-raised with the offending index.  The depth /
    tolerance check happens once up front since it does not depend on x.
    """
    if not (isinstance(tol, (int, float)) and tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    if _needed_depth(params, tol) > max_terms:
        raise TolTooSmall(
            f"tol={tol:g} exceeds the term budget of {max_terms}"
        )
    out = []
    for i, x in enumerate(points):
        try:
            out.append(eval_phi(params, x, tol, max_terms=max_terms))
        except ValueError as exc:
            raise type(exc)(f"point index {i}: {exc}") from exc
    return out
