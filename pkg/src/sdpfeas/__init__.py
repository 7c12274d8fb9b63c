"""Feasibility analysis of replacing manual software testing with a
binary defect-prediction model, via Chernoff lower-tail bounds on hazard
rate and reliability, verified against exact binomial and Monte-Carlo
oracles."""

__version__ = "0.1.0"

from .bounds import (
    BoundKind,
    BoundResult,
    OutOfRegime,
    Regime,
    Variant,
    bound_sweep,
    chernoff_lower_tail,
    hazard_bound,
    hazard_bound_y,
    reliability_bound,
    reliability_bound_y,
)
from .confusion import (
    ConfusionMatrix,
    FailureProbability,
    confusion_from_counts,
    confusion_from_records,
    false_omission_rate,
)
from .errors import (
    AssumptionViolationError,
    DomainError,
    InvalidInputError,
    OutOfRegimeError,
    ParseError,
    SdpFeasError,
    WrongVariantError,
)
from .hazards import (
    HazardFamily,
    HazardModel,
    cumulative_hazard,
    hazard_at,
    model_from_descriptor,
    reliability_at,
    reliability_tail_threshold,
)
from .oracle import (
    TailEstimate,
    TailMethod,
    TailQuery,
    VerificationRecord,
    exact_binomial_tail,
    exact_reliability_tail,
    exact_scaled_tail_y,
    mc_tail,
    verify_bound,
)
from .outcome import (
    SdpOutcome,
    WeibullInjection,
    exact_expected_reliability_x,
    exact_expected_reliability_y,
    expected_hazard_x,
    expected_hazard_y,
    expected_reliability_bound_x,
    expected_reliability_bound_y,
    outcome_from_descriptor,
)
from .report import FeasibilityReport, ScenarioConfig, build_report, run_sweep, sweep_to_csv
