"""The failure model of software tested with a defect-prediction classifier.

Out of l modules predicted clean, each is independently misclassified
with probability p, so the failure count X is Binomial(l, p) with mean
l*p. In the Y-variant each misclassified module contributes a power-law
hazard Khat*t^mhat instead of a single failure, making Y a scaled
binomial at any fixed t.

The expected reliability of the X-variant system is bounded above by
exp(l*p*(exp(-t) - 1)); the exact product form is also exposed because
verification needs it. The Y-variant bound carries a ``corrected`` sign
flag: the published form uses exp(+Khat*t^(mhat+1)) inside the outer
exponent, which contradicts the per-module reliability exp(-Y*t) and can
exceed 1. The corrected form flips that inner sign; only the corrected
form is consistent with simulation. Both are kept, clearly labelled.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .confusion import FailureProbability, counts_from_json, false_omission_rate
from .errors import DomainError, InvalidInputError, ParseError, WrongVariantError

__all__ = [
    "WeibullInjection",
    "SdpOutcome",
    "expected_hazard_x",
    "expected_hazard_y",
    "expected_reliability_bound_x",
    "expected_reliability_bound_y",
    "exact_expected_reliability_x",
    "exact_expected_reliability_y",
    "outcome_from_descriptor",
]


@dataclass(frozen=True)
class WeibullInjection:
    """Per-module hazard parameters for the Y-variant: each misclassified
    module injects hazard Khat * t**mhat."""

    K_hat: float
    m_hat: float

    def __post_init__(self):
        if not self.K_hat > 0:
            raise InvalidInputError(f"injection requires K_hat > 0, got {self.K_hat!r}")
        if not self.m_hat > -1:
            raise InvalidInputError(f"injection requires m_hat > -1, got {self.m_hat!r}")

    def scale_at(self, t: float) -> float:
        """Khat * t**mhat, the common per-module hazard at time t."""
        if t <= 0 and self.m_hat < 0:
            raise DomainError(f"injection hazard singular at t = {t!r} with m_hat < 0")
        if t < 0:
            raise DomainError(f"time must be >= 0, got {t!r}")
        return self.K_hat * t**self.m_hat

    def cumulative_at(self, t: float) -> float:
        """Khat * t**(mhat+1): the per-module cumulative exponent Y_i * t."""
        if t < 0:
            raise DomainError(f"time must be >= 0, got {t!r}")
        return self.K_hat * t ** (self.m_hat + 1)


@dataclass(frozen=True)
class SdpOutcome:
    """(l, p) description of the predicted-clean modules.

    ``n`` (total developed modules) is reporting metadata only; the math
    uses just l and p. ``injection`` switches the outcome to the
    Y-variant.
    """

    l: int
    p: FailureProbability
    injection: WeibullInjection | None = None
    n: int | None = None

    def __post_init__(self):
        if not isinstance(self.l, int) or isinstance(self.l, bool) or self.l < 1:
            raise InvalidInputError(f"module count l must be an integer >= 1, got {self.l!r}")
        if isinstance(self.p, float):
            object.__setattr__(self, "p", FailureProbability.from_float(self.p))
        if self.n is not None and self.n < self.l:
            raise InvalidInputError(f"total module count n={self.n} cannot be below l={self.l}")

    @property
    def p_value(self) -> float:
        return self.p.p

    @property
    def mean_failures(self) -> float:
        return self.l * self.p.p


def _require_variant(outcome: SdpOutcome, injected: bool) -> None:
    if injected and outcome.injection is None:
        raise WrongVariantError("operation requires the per-module injection (Y) variant")
    if not injected and outcome.injection is not None:
        raise WrongVariantError("operation requires the single-failure (X) variant")


def expected_hazard_x(outcome: SdpOutcome) -> float:
    """Expected failure count of the X-variant: l * p."""
    _require_variant(outcome, injected=False)
    return outcome.mean_failures


def expected_hazard_y(outcome: SdpOutcome, t: float) -> float:
    """Expected hazard of the Y-variant at time t: l * p * Khat * t**mhat."""
    _require_variant(outcome, injected=True)
    return outcome.mean_failures * outcome.injection.scale_at(t)


def expected_reliability_bound_x(outcome: SdpOutcome, t: float) -> float:
    """Upper bound exp(l*p*(exp(-t) - 1)) on the expected reliability
    E[exp(-X*t)]; strictly inside (0, 1) for t > 0."""
    _require_variant(outcome, injected=False)
    if t <= 0:
        raise DomainError(f"reliability bound requires t > 0, got {t!r}")
    return math.exp(outcome.mean_failures * math.expm1(-t))


def exact_expected_reliability_x(outcome: SdpOutcome, t: float) -> float:
    """The exact expectation E[exp(-X*t)] = (p*(exp(-t)-1) + 1)**l.

    Always strictly below ``expected_reliability_bound_x``; exposed so the
    verification layer can check the bound against truth.
    """
    _require_variant(outcome, injected=False)
    if t <= 0:
        raise DomainError(f"reliability expectation requires t > 0, got {t!r}")
    return (outcome.p_value * math.expm1(-t) + 1.0) ** outcome.l


def expected_reliability_bound_y(outcome: SdpOutcome, t: float, corrected: bool = True) -> float:
    """Upper bound on the Y-variant expected reliability E[exp(-Y*t)].

    corrected=True  -> exp(l*p*(exp(-Khat*t^(mhat+1)) - 1)), in (0, 1)
    corrected=False -> exp(l*p*(exp(+Khat*t^(mhat+1)) - 1)), the published
                       form, which can exceed 1 and is retained only for
                       fidelity to the printed result.
    """
    _require_variant(outcome, injected=True)
    if t <= 0:
        raise DomainError(f"reliability bound requires t > 0, got {t!r}")
    exponent = outcome.injection.cumulative_at(t)
    if corrected:
        exponent = -exponent
    return math.exp(outcome.mean_failures * math.expm1(exponent))


def exact_expected_reliability_y(outcome: SdpOutcome, t: float, corrected: bool = True) -> float:
    """Exact product form of the Y-variant expected reliability,
    (p*(exp(±Khat*t^(mhat+1)) - 1) + 1)**l, sign per ``corrected``."""
    _require_variant(outcome, injected=True)
    if t <= 0:
        raise DomainError(f"reliability expectation requires t > 0, got {t!r}")
    exponent = outcome.injection.cumulative_at(t)
    if corrected:
        exponent = -exponent
    return (outcome.p_value * math.expm1(exponent) + 1.0) ** outcome.l


def outcome_from_descriptor(payload: dict) -> SdpOutcome:
    """Build an outcome from the JSON descriptor form.

    Either ``{"l": int, "p": num}`` or ``{"l": int, "confusion": {...}}``
    (p derived as the false omission rate), plus optional
    ``"injection": {"K_hat": num, "m_hat": num}`` and ``"n": int``.
    """
    if not isinstance(payload, dict):
        raise ParseError(f"outcome descriptor must be an object, got {type(payload).__name__}")
    allowed = {"l", "p", "confusion", "injection", "n"}
    extra = payload.keys() - allowed
    if extra:
        raise ParseError(f"outcome descriptor has unknown fields: {sorted(extra)}")
    if "l" not in payload:
        raise ParseError("outcome descriptor missing 'l'")
    if ("p" in payload) == ("confusion" in payload):
        raise ParseError("outcome descriptor needs exactly one of 'p' or 'confusion'")
    if "p" in payload:
        p = FailureProbability.from_float(float(payload["p"]))
    else:
        p = false_omission_rate(counts_from_json(json.dumps(payload["confusion"])))
    injection = None
    if "injection" in payload:
        inj = payload["injection"]
        if not isinstance(inj, dict) or inj.keys() != {"K_hat", "m_hat"}:
            raise ParseError("injection descriptor must be {'K_hat': num, 'm_hat': num}")
        injection = WeibullInjection(K_hat=float(inj["K_hat"]), m_hat=float(inj["m_hat"]))
    return SdpOutcome(l=int(payload["l"]), p=p, injection=injection, n=payload.get("n"))
