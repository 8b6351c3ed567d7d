"""JSON document parsing shared by the CLI: functions, curves, domains, experiments."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Sequence

import numpy as np

from .category import BoxDomain, FamilySpec, SmoothBaseline
from .curves import TestCurve, make_arc, make_line, reparameterize_unit_speed
from .errors import HolderForgeError
from .sawtooth import SeriesParams, eval_phi, validate_params
from .separable import SeparableFunction, build_separable, eval_separable


def parse_rational(value) -> Fraction:
    """Accept 'p/q' strings, decimal strings, and plain numbers, exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, (int, float)):
        return Fraction(value)
    raise HolderForgeError(f"cannot interpret {value!r} as a rational")


def _require(doc: dict, key: str) -> Any:
    if key not in doc:
        raise HolderForgeError(f"document is missing the '{key}' field")
    return doc[key]


def parse_function_spec(doc: dict) -> SeriesParams | SeparableFunction:
    """{"type": "sawtooth_series", ...} or {"type": "separable", ...}."""
    kind = _require(doc, "type")
    if kind == "sawtooth_series":
        alpha = float(parse_rational(_require(doc, "alpha")))
        return validate_params(alpha, int(_require(doc, "base")))
    if kind == "separable":
        comps = _require(doc, "components")
        if not isinstance(comps, list) or not comps:
            raise HolderForgeError("'components' must be a nonempty list")
        alphas = [float(parse_rational(_require(c, "alpha"))) for c in comps]
        raw_bases = [c.get("base", "auto") for c in comps]
        if all(b == "auto" for b in raw_bases):
            bases: Sequence[int] | str = "auto"
        else:
            from .separable import auto_base

            bases = [
                auto_base(a) if b == "auto" else int(b)
                for a, b in zip(alphas, raw_bases)
            ]
        return build_separable(alphas, float(_require(doc, "gamma")), bases)
    raise HolderForgeError(f"unknown function spec type {kind!r}")


def function_dimension(fn: SeriesParams | SeparableFunction) -> int:
    return 1 if isinstance(fn, SeriesParams) else fn.dimension


def scalar_callable(
    fn: SeriesParams | SeparableFunction, tol: float
) -> Callable[[float], float]:
    """1-d evaluable view of a function spec (series, or 1-component separable)."""
    if isinstance(fn, SeriesParams):
        return lambda x: eval_phi(fn, x, tol)
    if fn.dimension == 1:
        return lambda x: eval_separable(fn, [x], tol)
    raise HolderForgeError(
        f"need a 1-d function for this probe, got dimension {fn.dimension}"
    )


def point_callable(
    fn: SeriesParams | SeparableFunction, tol: float
) -> Callable[[Sequence[float]], float]:
    """Point-evaluable view; a bare series acts on 1-d points."""
    if isinstance(fn, SeriesParams):
        def call(point):
            point = np.atleast_1d(np.asarray(point, dtype=float))
            if point.size != 1:
                raise HolderForgeError(f"series expects 1-d points, got {point.size}")
            return eval_phi(fn, float(point[0]), tol)

        return call
    return lambda point: eval_separable(fn, np.atleast_1d(np.asarray(point, float)), tol)


def probe_scale_base(fn: SeriesParams | SeparableFunction) -> float:
    """Default probe ladder: the function's own base, else 2.

    For separable functions the base of the smallest exponent drives the
    fastest-growing quotients, so that is the one the ladder follows.
    """
    if isinstance(fn, SeriesParams):
        return float(fn.base)
    lead = min(fn.components, key=lambda c: c.alpha)
    return float(lead.base)


def parse_curve_spec(doc: dict) -> TestCurve:
    """{"type": "line" | "arc" | "raw_table", ...}."""
    kind = _require(doc, "type")
    if kind == "line":
        return make_line(
            _require(doc, "x0"), _require(doc, "v"), float(_require(doc, "half_len"))
        )
    if kind == "arc":
        return make_arc(
            _require(doc, "center"),
            float(_require(doc, "radius")),
            float(_require(doc, "phase")),
            float(_require(doc, "half_len")),
        )
    if kind == "raw_table":
        s = np.asarray(_require(doc, "s"), dtype=float)
        pts = np.asarray(_require(doc, "points"), dtype=float)
        if s.ndim != 1 or pts.ndim != 2 or pts.shape[0] != s.size or s.size < 4:
            raise HolderForgeError(
                "raw_table needs >= 4 sorted s values and a matching points table"
            )
        from scipy.interpolate import CubicSpline

        spline = CubicSpline(s, pts, axis=0)
        return reparameterize_unit_speed(
            lambda t: spline(t), (float(s[0]), float(s[-1])), int(doc.get("grid_n", 129))
        )
    raise HolderForgeError(f"unknown curve spec type {kind!r}")


def curve_spec_of(curve_kind: str, **fields) -> dict:
    """Round-trippable curve document (inverse of parse_curve_spec for line/arc)."""
    return {"type": curve_kind, **fields}


def parse_domain_spec(doc: dict) -> BoxDomain:
    return BoxDomain(tuple(_require(doc, "lo")), tuple(_require(doc, "hi")))


def parse_family_spec(doc: dict) -> FamilySpec:
    return FamilySpec(
        n=int(_require(doc, "n")),
        gamma=float(_require(doc, "gamma")),
        domain=parse_domain_spec(_require(doc, "domain")),
    )


def parse_baseline_spec(doc: dict, domain: BoxDomain) -> SmoothBaseline:
    return SmoothBaseline(
        constant=float(doc.get("constant", 0.0)),
        linear=tuple(_require(doc, "linear")),
        quadratic=tuple(_require(doc, "quadratic")),
        domain=domain,
    )


def parse_experiment_spec(doc: dict) -> dict:
    """Resolve a perturbation experiment document into constructed pieces."""
    family = parse_family_spec(_require(doc, "family"))
    baseline = parse_baseline_spec(_require(doc, "baseline"), family.domain)
    fn = parse_function_spec(_require(doc, "function"))
    if not isinstance(fn, SeparableFunction):
        raise HolderForgeError("experiment 'function' must be a separable spec")
    if "seed" not in doc:
        raise HolderForgeError("experiment document must pin a 'seed'")
    return {
        "baseline": baseline,
        "function": fn,
        "delta": float(_require(doc, "delta")),
        "family": family,
        "count": int(_require(doc, "count")),
        "seed": int(doc["seed"]),
    }
