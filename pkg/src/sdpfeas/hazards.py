"""Hazard-curve families for manually tested software.

Six families are supported. Four of them are power laws and therefore
special cases of the general power-law (Weibull-type) hazard z(t) = K*t^m:

    weibull   z(t) = K * t**m          (K > 0, m > -1)
    nld       z(t) = K / sqrt(t)       non-linearly decreasing (= m = -1/2)
    ld        z(t) = K - m*t           linearly decreasing, valid on (0, K/m]
    nli       z(t) = K * t**2          non-linearly increasing (= m = 2)
    li        z(t) = K * t             linearly increasing (= m = 1)
    constant  z(t) = lambda

Reliability is R(t) = exp(-H(t)) with H(t) the cumulative hazard
(integral of z over [0, t]); every family has a closed form for H. The
ratio H(t)/t is the threshold at which a reliability comparison between
two systems reduces to a hazard-level comparison, and is what the bound
engine consumes.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass

from .errors import DomainError, InvalidInputError, ParseError

__all__ = [
    "HazardFamily",
    "HazardModel",
    "hazard_at",
    "cumulative_hazard",
    "reliability_at",
    "reliability_tail_threshold",
    "model_from_descriptor",
    "model_from_json",
]


class HazardFamily(str, enum.Enum):
    WEIBULL = "weibull"
    NONLINEAR_DECREASING = "nld"
    LINEAR_DECREASING = "ld"
    NONLINEAR_INCREASING = "nli"
    LINEAR_INCREASING = "li"
    CONSTANT = "constant"


#: which parameters each family requires in a JSON descriptor
_REQUIRED_FIELDS = {
    HazardFamily.WEIBULL: ("K", "m"),
    HazardFamily.NONLINEAR_DECREASING: ("K",),
    HazardFamily.LINEAR_DECREASING: ("K", "m"),
    HazardFamily.NONLINEAR_INCREASING: ("K",),
    HazardFamily.LINEAR_INCREASING: ("K",),
    HazardFamily.CONSTANT: ("lambda",),
}


@dataclass(frozen=True)
class HazardModel:
    """One hazard-curve family with its parameters.

    ``K`` is the rate scale (unused by the constant family), ``m`` the
    exponent (weibull) or slope (ld), ``lam`` the constant rate.
    """

    family: HazardFamily
    K: float | None = None
    m: float | None = None
    lam: float | None = None

    def __post_init__(self):
        fam = self.family
        if fam is HazardFamily.CONSTANT:
            if self.lam is None or not self.lam > 0:
                raise InvalidInputError(f"constant hazard requires lambda > 0, got {self.lam!r}")
            return
        if self.K is None or not self.K > 0:
            raise InvalidInputError(f"{fam.value} hazard requires K > 0, got {self.K!r}")
        if fam is HazardFamily.WEIBULL:
            if self.m is None or not self.m > -1:
                raise InvalidInputError(f"weibull hazard requires m > -1, got {self.m!r}")
        elif fam is HazardFamily.LINEAR_DECREASING:
            if self.m is None or not self.m > 0:
                raise InvalidInputError(f"ld hazard requires slope m > 0, got {self.m!r}")

    @property
    def max_time(self) -> float:
        """Upper end of the valid time domain (inf unless linearly decreasing)."""
        if self.family is HazardFamily.LINEAR_DECREASING:
            return self.K / self.m
        return math.inf

    def to_descriptor(self) -> dict:
        d = {"family": self.family.value}
        if self.K is not None:
            d["K"] = self.K
        if self.m is not None:
            d["m"] = self.m
        if self.lam is not None:
            d["lambda"] = self.lam
        return d


def _check_time(model: HazardModel, t: float, positive: bool) -> None:
    if not math.isfinite(t):
        raise DomainError(f"time must be finite, got {t!r}")
    if t < 0:
        raise DomainError(f"time must be >= 0, got {t!r}")
    if positive and t == 0:
        raise DomainError(f"{model.family.value} evaluation requires t > 0")
    if t > model.max_time:
        raise DomainError(
            f"ld hazard is negative beyond t = K/m = {model.max_time!r}; got t = {t!r}"
        )


def hazard_at(model: HazardModel, t: float) -> float:
    """Instantaneous hazard rate z(t)."""
    fam = model.family
    # t = 0 is singular for nld and for weibull with m < 0
    singular_at_zero = fam is HazardFamily.NONLINEAR_DECREASING or (
        fam is HazardFamily.WEIBULL and model.m < 0
    )
    _check_time(model, t, positive=singular_at_zero)
    if fam is HazardFamily.WEIBULL:
        return model.K * t**model.m
    if fam is HazardFamily.NONLINEAR_DECREASING:
        return model.K / math.sqrt(t)
    if fam is HazardFamily.LINEAR_DECREASING:
        return model.K - model.m * t
    if fam is HazardFamily.NONLINEAR_INCREASING:
        return model.K * t**2
    if fam is HazardFamily.LINEAR_INCREASING:
        return model.K * t
    return model.lam


def cumulative_hazard(model: HazardModel, t: float) -> float:
    """Accumulated hazard H(t) = integral of z over [0, t], in closed form.

    Defined at t = 0 (where it is 0) even for families whose hazard is
    singular there, because the singularity is integrable.
    """
    _check_time(model, t, positive=False)
    fam = model.family
    if fam is HazardFamily.WEIBULL:
        return model.K * t ** (model.m + 1) / (model.m + 1)
    if fam is HazardFamily.NONLINEAR_DECREASING:
        return 2.0 * model.K * math.sqrt(t)
    if fam is HazardFamily.LINEAR_DECREASING:
        return model.K * t - model.m * t**2 / 2.0
    if fam is HazardFamily.NONLINEAR_INCREASING:
        return model.K * t**3 / 3.0
    if fam is HazardFamily.LINEAR_INCREASING:
        return model.K * t**2 / 2.0
    return model.lam * t


def reliability_at(model: HazardModel, t: float) -> float:
    """Survival probability R(t) = exp(-H(t)); R(0) = 1."""
    return math.exp(-cumulative_hazard(model, t))


def reliability_tail_threshold(model: HazardModel, t: float) -> float:
    """c(t) = H(t)/t, the hazard-level threshold equivalent to a reliability
    comparison at time t.

    Per family: weibull K*t^m/(m+1); nld 2K/sqrt(t); ld K - m*t/2;
    nli K*t^2/3; li K*t/2; constant lambda.
    """
    _check_time(model, t, positive=True)
    fam = model.family
    if fam is HazardFamily.WEIBULL:
        return model.K * t**model.m / (model.m + 1)
    if fam is HazardFamily.NONLINEAR_DECREASING:
        return 2.0 * model.K / math.sqrt(t)
    if fam is HazardFamily.LINEAR_DECREASING:
        return model.K - model.m * t / 2.0
    if fam is HazardFamily.NONLINEAR_INCREASING:
        return model.K * t**2 / 3.0
    if fam is HazardFamily.LINEAR_INCREASING:
        return model.K * t / 2.0
    return model.lam


def model_from_descriptor(payload: dict) -> HazardModel:
    """Build a model from the JSON descriptor form
    ``{"family": "...", "K": num, "m": num, "lambda": num}``.

    Only the family-appropriate fields are accepted; extras are rejected.
    """
    if not isinstance(payload, dict):
        raise ParseError(f"model descriptor must be an object, got {type(payload).__name__}")
    if "family" not in payload:
        raise ParseError("model descriptor missing 'family'")
    try:
        family = HazardFamily(payload["family"])
    except ValueError:
        valid = ", ".join(f.value for f in HazardFamily)
        raise ParseError(f"unknown hazard family {payload['family']!r}; expected one of: {valid}") from None
    required = _REQUIRED_FIELDS[family]
    missing = set(required) - payload.keys()
    if missing:
        raise ParseError(f"{family.value} descriptor missing fields: {sorted(missing)}")
    extra = payload.keys() - {"family", *required}
    if extra:
        raise ParseError(f"{family.value} descriptor has extraneous fields: {sorted(extra)}")
    kwargs = {}
    if "K" in required:
        kwargs["K"] = float(payload["K"])
    if "m" in required:
        kwargs["m"] = float(payload["m"])
    if "lambda" in required:
        kwargs["lam"] = float(payload["lambda"])
    return HazardModel(family=family, **kwargs)


def model_from_json(text: str) -> HazardModel:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return model_from_descriptor(payload)
