"""Exception types shared across the package."""


class HolderForgeError(ValueError):
    """Base class for all validation and contract errors raised here."""


# --- series parameters ---------------------------------------------------

class AlphaOutOfRange(HolderForgeError):
    """Exponent alpha must lie strictly inside (0, 1)."""


class BaseNotEven(HolderForgeError):
    """Series base must be an even integer >= 2."""


class GapConditionViolated(HolderForgeError):
    """base**(1 - alpha) must exceed 2 strictly for increments to stay large."""


class TolTooSmall(HolderForgeError):
    """Requested tolerance needs more series terms than the depth budget allows."""


# --- exact grid arithmetic -----------------------------------------------

class InexactBase(HolderForgeError):
    """Exact mode needs alpha = p/q and base = a**q with a even."""


class RangeTooLarge(HolderForgeError):
    """Exhaustive scan would exceed the interval budget."""


# --- curves ----------------------------------------------------------------

class NotUnitVector(HolderForgeError):
    """Line direction must have norm 1."""


class DegenerateSpeed(HolderForgeError):
    """Raw curve speed fell below the reparameterization threshold."""


class OutOfDomain(HolderForgeError):
    """Requested parameter value lies outside the curve's domain."""


# --- separable functions ---------------------------------------------------

class ExponentOutOfRange(HolderForgeError):
    """Component exponent outside the admissible open window."""


class DuplicateExponents(HolderForgeError):
    """Component exponents must be pairwise distinct."""


class DimensionMismatch(HolderForgeError):
    """Point / curve / function dimensions disagree."""


class EmptyActiveSet(HolderForgeError):
    """No coordinate of the curve moves at the probe parameter (broken unit speed)."""


class GammaMismatch(HolderForgeError):
    """Curve regularity gamma is below the function's reference gamma."""


# --- regularity probes -------------------------------------------------------

class InsufficientScales(HolderForgeError):
    """Fewer than three usable scales survive for the log-log fit."""


class EvaluationFailed(HolderForgeError):
    """Function evaluation raised or returned a non-finite value during a probe."""


class CurveTooShort(HolderForgeError):
    """Curve domain does not cover the probe window around its center."""


# --- curve-family experiments ------------------------------------------------

class EmptyMargin(HolderForgeError):
    """Margin set of the domain is empty at this n."""


class RetryExhausted(HolderForgeError):
    """Rejection sampling failed to place a curve within the retry budget."""
