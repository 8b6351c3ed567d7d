"""Acceptance gate: one pass/fail line per criterion.

Each test prints "[criterion N] PASS" or "[criterion N] FAIL" before
asserting, so the summary survives in captured output either way.  Run with
-s (or read the failure report) to see every line.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from holder_forge import (
    BoxDomain,
    FamilySpec,
    SeriesParams,
    SmoothBaseline,
    badic_point,
    build_separable,
    estimate_exponent,
    eval_exact,
    eval_phi,
    eval_separable,
    exact_params,
    make_arc,
    make_line,
    oscillation_profile,
    perturbation_experiment,
    predicted_exponent,
    quotient_growth,
    verify_increment_bound,
)

EP = exact_params(Fraction(1, 2), 16)
P = SeriesParams(0.5, 16)


def _report(criterion: int, ok: bool, detail: str = "") -> bool:
    tag = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"[criterion {criterion}] {tag}{suffix}")
    return ok


def test_criterion_1_exhaustive_increment_lower_bound():
    # exact |increment| >= (2/3) * 4**-m over one full period, every m <= 5
    ok = True
    worst = None
    for m in range(6):
        report = verify_increment_bound(EP, m, 0, 2 * 16**m)
        ok = ok and report.passed and report.min_ratio >= 1
        if worst is None or report.min_ratio < worst:
            worst = report.min_ratio
    assert _report(1, ok, f"min ratio {worst}")


def test_criterion_2_holder_upper_bound_random_pairs():
    rng = np.random.default_rng(2)
    xs = rng.uniform(0.0, 1.0, 100_000)
    ys = rng.uniform(0.0, 1.0, 100_000)
    c = 17.0 / 3.0
    violations = 0
    for x, y in zip(xs, ys):
        gap = abs(eval_phi(P, float(x), 1e-10) - eval_phi(P, float(y), 1e-10))
        if gap > c * abs(x - y) ** 0.5 + 2e-9:
            violations += 1
    assert _report(2, violations == 0, f"{violations} violations in 100000 pairs")


def test_criterion_3_exponent_recovery_three_configurations():
    results = []
    all_ok = True
    for alpha, base in ((0.5, 16), (0.6, 6), (0.75, 256)):
        params = SeriesParams(alpha, base)
        fn = lambda x: eval_phi(params, x, 1e-13)
        centers = np.random.default_rng(0).uniform(0.0, 1.0, 20)
        good = 0
        for x0 in centers:
            prof = oscillation_profile(
                fn, float(x0), (0, 7), samples_per_scale=256, seed=0,
                scale_base=float(base),
            )
            est = estimate_exponent(prof, drop_floor=1e-12)
            if (
                abs(est.alpha_hat - alpha) <= 0.05
                and est.r_squared >= 0.95
                and 2 <= est.window[0]
                and est.window[1] <= 7
            ):
                good += 1
        results.append(f"({alpha},{base}) {good}/20")
        all_ok = all_ok and good == 20
    assert _report(3, all_ok, "; ".join(results))


def test_criterion_4_composite_exponents_match_predictions():
    f = build_separable([0.6, 0.8], 1.0, [16, 64])
    call = lambda p: eval_separable(f, p, 1e-12)

    arc = make_arc((0.0, 0.0), 1.0, 0.0, 1.5)
    pred_arc = predicted_exponent(f, arc, 0.0)
    prof = oscillation_profile(
        lambda s: call(arc.position(s)), 0.0, (0, 7),
        samples_per_scale=256, seed=11, scale_base=64.0,
    )
    est_arc = estimate_exponent(prof)

    sq2 = 1.0 / math.sqrt(2.0)
    line = make_line((0.3, 0.55), (sq2, sq2), 1.5)
    pred_line = predicted_exponent(f, line, 0.0)
    prof = oscillation_profile(
        lambda s: call(line.position(s)), 0.0, (0, 7),
        samples_per_scale=256, seed=12, scale_base=16.0,
    )
    est_line = estimate_exponent(prof)

    ok = (
        pred_arc.alpha == 0.8
        and pred_arc.stationary == (0,)
        and 0.73 <= est_arc.alpha_hat <= 0.87
        and abs(est_arc.alpha_hat - pred_arc.alpha) <= 0.07
        and pred_line.alpha == 0.6
        and pred_line.active == (0, 1)
        and 0.53 <= est_line.alpha_hat <= 0.67
        and abs(est_line.alpha_hat - pred_line.alpha) <= 0.07
    )
    assert _report(
        4, ok, f"arc {est_arc.alpha_hat:.4f} vs 0.8; line {est_line.alpha_hat:.4f} vs 0.6"
    )


def test_criterion_5_difference_quotient_divergence():
    points = quotient_growth(EP, 1, 5)
    floors_ok = all(
        pt.passed and pt.exact and pt.quotient >= Fraction(2, 3) * 4**pt.level
        for pt in points
    )
    ratio = points[5].quotient / points[1].quotient
    ok = floors_ok and ratio >= 4**4
    assert _report(5, ok, f"Q5/Q1 = {ratio}")


def test_criterion_6_perturbation_escape_and_smooth_control():
    domain = BoxDomain((0.0, 0.0), (1.0, 1.0))
    baseline = SmoothBaseline(0.0, (0.0, 0.0), (1.0, 1.0), domain)
    rough = build_separable([0.6, 0.8], 1.0, [16, 64])
    spec = FamilySpec(n=10, gamma=1.0, domain=domain)

    perturbed = perturbation_experiment(baseline, rough, 0.01, spec, 100, 42)
    control = perturbation_experiment(baseline, rough, 0.0, spec, 100, 42)
    levels_ok = all(
        o.escape_level is not None and o.escape_level <= 12 for o in perturbed.outcomes
    )
    ok = (
        spec.n >= baseline.gradient_bound
        and perturbed.escape_fraction == 1.0
        and levels_ok
        and control.escape_fraction == 0.0
    )
    assert _report(
        6, ok,
        f"escape {perturbed.escape_fraction:.2f}, control {control.escape_fraction:.2f}",
    )


def test_criterion_7_float_vs_exact_agreement():
    worst = 0.0
    seen = set()
    for m in range(5):
        den = 16**m
        for j in np.linspace(0, den, min(den + 1, 140), dtype=np.int64):
            pt = badic_point(int(j), m, 16)
            if (pt.j, pt.m) in seen:
                continue
            seen.add((pt.j, pt.m))
            exact = eval_exact(EP, pt)
            approx = eval_phi(P, int(j) / den, 1e-12)
            worst = max(worst, abs(approx - float(exact)))
    assert len(seen) >= 400
    assert _report(7, worst <= 1e-9, f"worst gap {worst:.3g} over {len(seen)} points")
