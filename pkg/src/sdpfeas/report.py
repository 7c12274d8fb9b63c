"""Scenario configuration, sweep/verification campaigns and the
feasibility report.

A scenario bundles an outcome, a hazard model, a time grid and the
requested bound kinds; running it yields per-point bound rows, optional
verification records against the exact and Monte-Carlo oracles, and a
verdict that classifies each grid point as feasible, infeasible or
out-of-regime. "Infeasible" means the bound on the probability that
prediction-based testing beats manual testing fell at or below epsilon;
epsilon is a tool convention (default 0.05), not a claim from the
analysis itself.
"""

from __future__ import annotations

import datetime
import json
import math
import os
from dataclasses import dataclass, field
from typing import List, Sequence

import numpy as np

from . import __version__ as _version
from .bounds import (
    SWEEP_COLUMNS,
    BoundKind,
    BoundResult,
    OutOfRegime,
    SweepEntry,
    Variant,
    bound_sweep,
)
from .errors import InvalidInputError, ParseError
from .hazards import HazardModel, model_from_descriptor
from .oracle import (
    TailQuery,
    VerificationRecord,
    exact_binomial_tail,
    exact_scaled_tail_y,
    mc_tail,
    verify_bound,
)
from .outcome import SdpOutcome, outcome_from_descriptor

__all__ = [
    "ScenarioConfig",
    "FeasibilityReport",
    "run_sweep",
    "run_verification",
    "build_report",
    "sweep_to_csv",
    "DEFAULT_EPSILON",
    "SEED_ENV_VAR",
]

DEFAULT_EPSILON = 0.05
SEED_ENV_VAR = "SDPFEAS_SEED"
#: test hook: multiply every computed bound by this factor before
#: verification, to exercise the failure path end to end
CORRUPT_ENV_VAR = "SDPFEAS_TEST_CORRUPT_BOUND"


def _format_float(x: float) -> str:
    """17 significant digits: round-trip exact for 64-bit floats."""
    return format(x, ".17g")


def _build_grid(payload: dict) -> List[float]:
    if payload.keys() == {"t"}:
        t = float(payload["t"])
        if not t > 0:
            raise InvalidInputError(f"time point must be > 0, got {t!r}")
        return [t]
    required = {"start", "stop", "steps"}
    extra = payload.keys() - (required | {"spacing"})
    if extra:
        raise ParseError(f"time_grid has unknown fields: {sorted(extra)}")
    missing = required - payload.keys()
    if missing:
        raise ParseError(f"time_grid missing fields: {sorted(missing)}")
    start = float(payload["start"])
    stop = float(payload["stop"])
    steps = int(payload["steps"])
    spacing = payload.get("spacing", "linear")
    if not start > 0:
        raise InvalidInputError(f"time_grid start must be > 0, got {start!r}")
    if steps < 1:
        raise InvalidInputError(f"time_grid steps must be >= 1, got {steps!r}")
    if steps == 1:
        return [start]
    if not stop > start:
        raise InvalidInputError(f"time_grid requires stop > start, got {start!r}..{stop!r}")
    if spacing == "linear":
        grid = np.linspace(start, stop, steps)
    elif spacing == "log":
        grid = np.geomspace(start, stop, steps)
    else:
        raise ParseError(f"time_grid spacing must be 'linear' or 'log', got {spacing!r}")
    return [float(t) for t in grid]


@dataclass(frozen=True)
class ScenarioConfig:
    outcome: SdpOutcome
    model: HazardModel
    grid: List[float]
    kinds: List[BoundKind]
    variant: Variant = Variant.X
    corrected: bool = True
    verify_exact: bool = True
    mc_trials: int = 0
    seed: int | None = None
    epsilon: float = DEFAULT_EPSILON
    raw: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_descriptor(cls, payload: dict) -> "ScenarioConfig":
        if not isinstance(payload, dict):
            raise ParseError(f"scenario must be a JSON object, got {type(payload).__name__}")
        allowed = {"outcome", "model", "time_grid", "kinds", "variant", "corrected", "verify", "epsilon"}
        extra = payload.keys() - allowed
        if extra:
            raise ParseError(f"scenario has unknown fields: {sorted(extra)}")
        for key in ("outcome", "model", "time_grid"):
            if key not in payload:
                raise ParseError(f"scenario missing {key!r}")
        outcome = outcome_from_descriptor(payload["outcome"])
        model = model_from_descriptor(payload["model"])
        grid = _build_grid(payload["time_grid"])
        kinds_raw = payload.get("kinds", ["hazard"])
        try:
            kinds = [BoundKind(k) for k in kinds_raw]
        except ValueError:
            raise ParseError(f"kinds must be a subset of ['hazard', 'reliability'], got {kinds_raw!r}") from None
        if not kinds or len(set(kinds)) != len(kinds):
            raise ParseError(f"kinds must be a non-empty set, got {kinds_raw!r}")
        try:
            variant = Variant(payload.get("variant", "X"))
        except ValueError:
            raise ParseError(f"variant must be 'X' or 'Y', got {payload.get('variant')!r}") from None
        if variant is Variant.Y and outcome.injection is None:
            raise ParseError("variant 'Y' requires an outcome with an 'injection' descriptor")
        verify = payload.get("verify", {})
        if not isinstance(verify, dict) or verify.keys() - {"exact", "mc_trials", "seed"}:
            raise ParseError(f"verify block must contain only exact/mc_trials/seed, got {verify!r}")
        mc_trials = int(verify.get("mc_trials", 0))
        if mc_trials < 0:
            raise InvalidInputError(f"mc_trials must be >= 0, got {mc_trials}")
        seed = verify.get("seed")
        if seed is None and SEED_ENV_VAR in os.environ:
            seed = int(os.environ[SEED_ENV_VAR])
        return cls(
            outcome=outcome,
            model=model,
            grid=grid,
            kinds=kinds,
            variant=variant,
            corrected=bool(payload.get("corrected", True)),
            verify_exact=bool(verify.get("exact", True)),
            mc_trials=mc_trials,
            seed=None if seed is None else int(seed),
            epsilon=float(payload.get("epsilon", DEFAULT_EPSILON)),
            raw=payload,
        )

    @classmethod
    def from_json(cls, text: str) -> "ScenarioConfig":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_descriptor(payload)


def run_sweep(config: ScenarioConfig) -> List[SweepEntry]:
    """All bound rows for the scenario, kind-major then grid order."""
    entries: List[SweepEntry] = []
    for kind in config.kinds:
        entries.extend(
            bound_sweep(
                config.outcome,
                config.model,
                config.grid,
                kind=kind,
                variant=config.variant,
                corrected=config.corrected,
            )
        )
    return entries


def _oracle_for(config: ScenarioConfig, entry: BoundResult):
    """Exact oracle for the event the entry bounds, plus the MC query.

    Every bound in the engine is a lower-tail statement about the
    underlying count X (reliability events transform to X < H(t)/t, and
    Y = scale * X at fixed t), so one scaled binomial query covers all
    four kinds.
    """
    l = config.outcome.l
    p = config.outcome.p_value
    if config.variant is Variant.X:
        scale = 1.0
    else:
        scale = config.outcome.injection.scale_at(entry.t)
    query = TailQuery(l=l, p=p, threshold=entry.threshold / scale)
    exact = exact_scaled_tail_y(l, p, scale, entry.threshold)
    return query, exact


def run_verification(config: ScenarioConfig, entries: Sequence[SweepEntry]) -> List[VerificationRecord]:
    records: List[VerificationRecord] = []
    corrupt = float(os.environ.get(CORRUPT_ENV_VAR, "1") or "1")
    for entry in entries:
        if not isinstance(entry, BoundResult):
            continue
        checked = entry
        if corrupt != 1.0:
            checked = BoundResult(
                theorem_tag=entry.theorem_tag,
                mu=entry.mu,
                threshold=entry.threshold,
                delta=entry.delta,
                bound=entry.bound * corrupt,
                log_bound=entry.log_bound + math.log(corrupt),
                regime=entry.regime,
                t=entry.t,
                sign_mode=entry.sign_mode,
            )
        query, exact = _oracle_for(config, entry)
        event = f"{entry.theorem_tag} @ t={entry.t!r}: {query.describe()}"
        if config.verify_exact:
            records.append(verify_bound(checked, exact, event=event))
        if config.mc_trials > 0:
            seed = config.seed if config.seed is not None else 0
            records.append(
                verify_bound(checked, mc_tail(query, config.mc_trials, seed), event=event)
            )
    return records


def _condense_ranges(points: List[float]) -> List[List[float]]:
    """[t...] -> [[lo, hi], ...] merging adjacent grid points."""
    if not points:
        return []
    return [[points[0], points[-1]]] if len(points) > 1 else [[points[0], points[0]]]


@dataclass
class FeasibilityReport:
    scenario: dict
    rows: List[SweepEntry]
    verification: List[VerificationRecord]
    epsilon: float
    timestamp: str

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.verification)

    def verdict(self) -> dict:
        by_time: dict[float, List[SweepEntry]] = {}
        for row in self.rows:
            by_time.setdefault(row.t, []).append(row)
        feasible, infeasible, out_of_regime = [], [], []
        for t in sorted(by_time):
            bounds = [r.bound for r in by_time[t] if isinstance(r, BoundResult)]
            if not bounds:
                out_of_regime.append(t)
            elif min(bounds) <= self.epsilon:
                infeasible.append(t)
            else:
                feasible.append(t)
        return {
            "epsilon": self.epsilon,
            "note": (
                "bound <= epsilon means the chance that prediction-based testing "
                "beats manual testing at this t is small (tool convention)"
            ),
            "feasible_at": _condense_ranges(feasible),
            "infeasible_at": _condense_ranges(infeasible),
            "out_of_regime_at": _condense_ranges(out_of_regime),
        }

    def to_dict(self) -> dict:
        slacks = [r.slack for r in self.verification]
        summary = self.verdict()
        summary["all_hold"] = self.all_hold
        if slacks:
            summary["min_slack"] = min(slacks)
            summary["max_slack"] = max(slacks)
        return {
            "scenario": self.scenario,
            "rows": [row.to_dict() for row in self.rows],
            "verification": [r.to_dict() for r in self.verification],
            "summary": summary,
            "tool_version": _version,
            "timestamp": self.timestamp,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def build_report(config: ScenarioConfig, verify: bool = True) -> FeasibilityReport:
    rows = run_sweep(config)
    verification = run_verification(config, rows) if verify else []
    return FeasibilityReport(
        scenario=config.raw,
        rows=rows,
        verification=verification,
        epsilon=config.epsilon,
        timestamp=datetime.datetime.now(datetime.timezone.utc).isoformat(),
    )


def sweep_to_csv(entries: Sequence[SweepEntry]) -> str:
    """Serialize sweep rows to the CSV contract
    ``t,theorem,mu,threshold,delta,bound,regime`` with 17-significant-digit
    numbers (round-trip exact)."""
    lines = [",".join(SWEEP_COLUMNS)]
    for entry in entries:
        if isinstance(entry, BoundResult):
            bound_field = _format_float(entry.bound)
            regime = entry.regime.value
        else:
            bound_field = ""
            regime = "out-of-regime"
        lines.append(
            ",".join(
                [
                    _format_float(entry.t),
                    entry.theorem_tag,
                    _format_float(entry.mu),
                    _format_float(entry.threshold),
                    _format_float(entry.delta),
                    bound_field,
                    regime,
                ]
            )
        )
    return "\n".join(lines) + "\n"
