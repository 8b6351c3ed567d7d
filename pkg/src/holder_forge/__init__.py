"""Sawtooth lacunary series with certified roughness.

Exact evaluation and increment bounds for the one-dimensional series, a
separable multivariate extension, curve-restricted regularity prediction,
sampling-based exponent probes, and curve-family perturbation experiments.
"""

from .category import (
    BoxDomain,
    CurveOutcome,
    ExperimentReport,
    FamilyCheck,
    FamilySpec,
    SmoothBaseline,
    check_family_membership,
    perturbation_experiment,
    sample_family,
)
from .curves import (
    CurveReport,
    TestCurve,
    coordinate_derivative,
    make_arc,
    make_line,
    reparameterize_unit_speed,
    validate_curve,
)
from .errors import (
    AlphaOutOfRange,
    BaseNotEven,
    CurveTooShort,
    DegenerateSpeed,
    DimensionMismatch,
    DuplicateExponents,
    EmptyActiveSet,
    EmptyMargin,
    EvaluationFailed,
    ExponentOutOfRange,
    GammaMismatch,
    GapConditionViolated,
    HolderForgeError,
    InexactBase,
    InsufficientScales,
    NotUnitVector,
    OutOfDomain,
    RangeTooLarge,
    RetryExhausted,
    TolTooSmall,
)
from .exact import (
    BAdicPoint,
    BoundReport,
    ExactParams,
    GrowthPoint,
    badic_point,
    eval_exact,
    exact_params,
    increment,
    quotient_growth,
    scaled_increments,
    verify_increment_bound,
)
from .probe import (
    ExponentEstimate,
    MembershipResult,
    OscillationProfile,
    QuotientReport,
    estimate_exponent,
    fn_membership_probe,
    lipschitz_quotient,
    oscillation_profile,
)
from .sawtooth import (
    EvalCertificate,
    SeriesParams,
    eval_phi,
    eval_phi_batch,
    eval_phi_info,
    sawtooth,
    series_sup,
    tail_bound,
    validate_params,
)
from .separable import (
    PredictedRegularity,
    SeparableFunction,
    auto_base,
    build_separable,
    eval_separable,
    predicted_exponent,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaOutOfRange",
    "BAdicPoint",
    "BaseNotEven",
    "BoundReport",
    "BoxDomain",
    "CurveOutcome",
    "CurveReport",
    "CurveTooShort",
    "DegenerateSpeed",
    "DimensionMismatch",
    "DuplicateExponents",
    "EmptyActiveSet",
    "EmptyMargin",
    "EvalCertificate",
    "EvaluationFailed",
    "ExactParams",
    "ExperimentReport",
    "ExponentEstimate",
    "ExponentOutOfRange",
    "FamilyCheck",
    "FamilySpec",
    "GammaMismatch",
    "GapConditionViolated",
    "GrowthPoint",
    "HolderForgeError",
    "InexactBase",
    "InsufficientScales",
    "MembershipResult",
    "NotUnitVector",
    "OscillationProfile",
    "OutOfDomain",
    "PredictedRegularity",
    "QuotientReport",
    "RangeTooLarge",
    "RetryExhausted",
    "SeparableFunction",
    "SeriesParams",
    "SmoothBaseline",
    "TestCurve",
    "TolTooSmall",
    "auto_base",
    "badic_point",
    "build_separable",
    "check_family_membership",
    "coordinate_derivative",
    "estimate_exponent",
    "eval_exact",
    "eval_phi",
    "eval_phi_batch",
    "eval_phi_info",
    "eval_separable",
    "exact_params",
    "fn_membership_probe",
    "increment",
    "lipschitz_quotient",
    "make_arc",
    "make_line",
    "oscillation_profile",
    "perturbation_experiment",
    "predicted_exponent",
    "quotient_growth",
    "scaled_increments",
    "reparameterize_unit_speed",
    "sample_family",
    "sawtooth",
    "series_sup",
    "tail_bound",
    "validate_curve",
    "validate_params",
    "verify_increment_bound",
    "__version__",
]
