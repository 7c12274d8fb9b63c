"""Independent verification layer: exact binomial tails and seeded
Monte-Carlo simulation.

Strictness convention, stated once and relied on everywhere: for an
integer-valued X and integral threshold k, Pr[X < k] = CDF(k - 1). An
off-by-one here would silently invalidate every soundness check, so the
tail helpers centralise it.

The Monte-Carlo sampler uses the Philox counter-based generator, so a
(seed, trials, query) triple maps to a bit-reproducible estimate
regardless of how the trials are scheduled.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .bounds import BoundResult, Regime
from .errors import InvalidInputError

__all__ = [
    "TailMethod",
    "TailQuery",
    "TailEstimate",
    "VerificationRecord",
    "exact_binomial_tail",
    "exact_scaled_tail_y",
    "exact_reliability_tail",
    "mc_tail",
    "verify_bound",
]

#: above this l the MC sampler switches from CDF inversion to Bernoulli sums
BERNOULLI_CUTOFF = 100_000


class TailMethod(str, enum.Enum):
    EXACT = "exact"
    MONTE_CARLO = "monte-carlo"


@dataclass(frozen=True)
class TailQuery:
    """The event Pr[X < threshold] for X ~ Binomial(l, p), strict '<'."""

    l: int
    p: float
    threshold: float

    def __post_init__(self):
        if not isinstance(self.l, int) or isinstance(self.l, bool) or self.l < 1:
            raise InvalidInputError(f"l must be an integer >= 1, got {self.l!r}")
        if not 0.0 < self.p < 1.0:
            raise InvalidInputError(f"p must lie strictly in (0, 1), got {self.p!r}")
        if not math.isfinite(self.threshold):
            raise InvalidInputError(f"threshold must be finite, got {self.threshold!r}")

    def describe(self) -> str:
        return f"Pr[X < {self.threshold!r}], X ~ Binomial(l={self.l}, p={self.p!r})"


@dataclass(frozen=True)
class TailEstimate:
    """A tail probability with its provenance; MC entries carry trials,
    standard error and the seed that reproduces them."""

    value: float
    method: TailMethod
    trials: int | None = None
    stderr: float | None = None
    seed: int | None = None


def _strict_upper_index(threshold: float, l: int) -> int:
    """Largest k with Pr[X <= k] contributing to Pr[X < threshold];
    -1 means the event is empty, >= l means it is certain."""
    if threshold <= 0:
        return -1
    if threshold > l:
        return l
    if float(threshold).is_integer():
        return int(threshold) - 1
    return math.floor(threshold)


def exact_binomial_tail(query: TailQuery) -> TailEstimate:
    """Pr[X < threshold] for X ~ Binomial(l, p), computed exactly.

    Terms are accumulated in log space: log binomial coefficients via
    log-gamma, then a max-shifted exponentiation of the partial sum. Holds
    relative accuracy ~1e-10 up to l = 1e6.
    """
    k_star = _strict_upper_index(query.threshold, query.l)
    if k_star < 0:
        return TailEstimate(value=0.0, method=TailMethod.EXACT)
    if k_star >= query.l:
        return TailEstimate(value=1.0, method=TailMethod.EXACT)
    l, p = query.l, query.p
    ks = np.arange(k_star + 1)
    log_terms = (
        gammaln(l + 1)
        - gammaln(ks + 1)
        - gammaln(l - ks + 1)
        + ks * math.log(p)
        + (l - ks) * math.log1p(-p)
    )
    shift = log_terms.max()
    value = float(math.exp(shift) * np.exp(log_terms - shift).sum())
    return TailEstimate(value=min(value, 1.0), method=TailMethod.EXACT)


def exact_scaled_tail_y(l: int, p: float, scale: float, threshold: float) -> TailEstimate:
    """Pr[Y < threshold] where Y = scale * Binomial(l, p) at a fixed time.

    ``scale`` is the common per-module hazard Khat * t**mhat.
    """
    if not scale > 0:
        raise InvalidInputError(f"scale must be > 0, got {scale!r}")
    return exact_binomial_tail(TailQuery(l=l, p=p, threshold=threshold / scale))


def exact_reliability_tail(l: int, p: float, t: float, r_threshold: float) -> TailEstimate:
    """Pr[exp(-X*t) > r_threshold], transformed to the equivalent
    lower-tail event Pr[X < -ln(r_threshold)/t]."""
    if not 0.0 < r_threshold < 1.0:
        raise InvalidInputError(f"r_threshold must lie strictly in (0, 1), got {r_threshold!r}")
    if not t > 0:
        raise InvalidInputError(f"t must be > 0, got {t!r}")
    return exact_binomial_tail(TailQuery(l=l, p=p, threshold=-math.log(r_threshold) / t))


def _sample_binomial_inversion(rng: np.random.Generator, l: int, p: float, trials: int) -> np.ndarray:
    """Inversion on the exact CDF: one uniform per trial."""
    ks = np.arange(l + 1)
    log_pmf = (
        gammaln(l + 1)
        - gammaln(ks + 1)
        - gammaln(l - ks + 1)
        + ks * math.log(p)
        + (l - ks) * math.log1p(-p)
    )
    cdf = np.cumsum(np.exp(log_pmf))
    cdf[-1] = 1.0
    u = rng.random(trials)
    return np.searchsorted(cdf, u, side="right")


def _sample_binomial_bernoulli(rng: np.random.Generator, l: int, p: float, trials: int) -> np.ndarray:
    """Sum of l Bernoulli draws per trial, chunked to bound memory."""
    out = np.empty(trials, dtype=np.int64)
    chunk = max(1, 10_000_000 // l)
    for start in range(0, trials, chunk):
        stop = min(start + chunk, trials)
        draws = rng.random((stop - start, l)) < p
        out[start:stop] = draws.sum(axis=1)
    return out


def sample_binomial(rng: np.random.Generator, l: int, p: float, trials: int) -> np.ndarray:
    if l <= BERNOULLI_CUTOFF:
        return _sample_binomial_inversion(rng, l, p, trials)
    return _sample_binomial_bernoulli(rng, l, p, trials)


def mc_tail(query: TailQuery, trials: int, seed: int) -> TailEstimate:
    """Monte-Carlo estimate of Pr[X < threshold] from ``trials`` seeded
    Binomial(l, p) draws; reruns with the same (seed, trials, query) are
    bit-identical."""
    if not isinstance(trials, int) or trials < 1:
        raise InvalidInputError(f"trials must be an integer >= 1, got {trials!r}")
    rng = np.random.Generator(np.random.Philox(key=seed))
    samples = sample_binomial(rng, query.l, query.p, trials)
    hits = int((samples < query.threshold).sum())
    value = hits / trials
    stderr = math.sqrt(value * (1.0 - value) / trials)
    return TailEstimate(
        value=value,
        method=TailMethod.MONTE_CARLO,
        trials=trials,
        stderr=stderr,
        seed=seed,
    )


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of checking one bound against one oracle estimate."""

    event: str
    bound: float
    oracle: float
    method: TailMethod
    holds: bool
    slack: float
    ratio: float
    seed: int | None = None
    #: MC only: the point estimate alone exceeds the bound even though the
    #: 3-sigma test passed
    advisory: bool = False

    def to_dict(self) -> dict:
        payload = {
            "event": self.event,
            "bound": self.bound,
            "oracle": self.oracle,
            "method": self.method.value,
            "holds": self.holds,
            "slack": self.slack,
            "ratio": self.ratio,
        }
        if self.seed is not None:
            payload["seed"] = self.seed
        if self.advisory:
            payload["advisory"] = True
        return payload


def verify_bound(bound: BoundResult, oracle: TailEstimate, event: str = "") -> VerificationRecord:
    """Check the strict inequality oracle < bound.

    Exact oracles are compared directly; MC oracles pass when the point
    estimate minus three standard errors stays below the bound, with an
    advisory flag when the point estimate alone does not.
    """
    if not isinstance(bound, BoundResult):
        raise InvalidInputError(
            f"verification needs a computed BoundResult, got {type(bound).__name__}"
        )
    if bound.regime not in (Regime.VALID, Regime.TRIVIAL):
        raise InvalidInputError(f"cannot verify a bound in regime {bound.regime!r}")
    advisory = False
    if oracle.method is TailMethod.EXACT:
        holds = oracle.value < bound.bound
    else:
        holds = oracle.value - 3.0 * oracle.stderr < bound.bound
        advisory = holds and not (oracle.value < bound.bound)
    return VerificationRecord(
        event=event,
        bound=bound.bound,
        oracle=oracle.value,
        method=oracle.method,
        holds=holds,
        slack=bound.bound - oracle.value,
        ratio=oracle.value / bound.bound if bound.bound > 0 else math.inf,
        seed=oracle.seed,
        advisory=advisory,
    )
