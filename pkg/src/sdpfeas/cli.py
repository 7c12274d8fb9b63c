"""Command-line surface: metrics, bound, sweep, verify.

Exit-code contract (total, nothing else is returned):

    0  success
    1  usage error or I/O failure
    2  failure-model assumption violated (e.g. no false negatives)
    3  bound out of regime (the theorem is inapplicable; a finding, not
       an error)
    4  verification failure (an oracle value met or exceeded its bound)
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .bounds import BoundResult
from .confusion import counts_from_json, false_omission_rate, records_from_csv
from .errors import (
    AssumptionViolationError,
    InvalidInputError,
    OutOfRegimeError,
    ParseError,
    SdpFeasError,
)
from .report import ScenarioConfig, build_report, run_sweep, sweep_to_csv

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ASSUMPTION = 2
EXIT_OUT_OF_REGIME = 3
EXIT_VERIFICATION = 4


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from exc


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from exc


def _load_config(args) -> ScenarioConfig:
    config = ScenarioConfig.from_json(_read_text(args.config))
    overrides = {}
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if getattr(args, "trials", None) is not None:
        overrides["mc_trials"] = args.trials
    if getattr(args, "corrected", None) is not None:
        overrides["corrected"] = args.corrected
    if getattr(args, "epsilon", None) is not None:
        overrides["epsilon"] = args.epsilon
    if overrides:
        config = dataclasses.replace(config, **overrides)
    return config


def cmd_metrics(args) -> int:
    """Print the false omission rate and full confusion summary as JSON."""
    if args.counts is not None:
        matrix = counts_from_json(_read_text(args.counts))
    else:
        matrix = records_from_csv(_read_text(args.records))
    p = false_omission_rate(matrix)
    payload = {"p": p.p, "fraction": p.fraction, "confusion": matrix.to_dict()}
    _write_output(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_bound(args) -> int:
    """Compute a single bound at one time point."""
    config = _load_config(args)
    if len(config.grid) != 1 or len(config.kinds) != 1:
        print("error: 'bound' needs a single-point time grid and exactly one kind", file=sys.stderr)
        return EXIT_USAGE
    entry = run_sweep(config)[0]
    _write_output(json.dumps(entry.to_dict(), indent=2) + "\n", args.out)
    return EXIT_OK if isinstance(entry, BoundResult) else EXIT_OUT_OF_REGIME


def cmd_sweep(args) -> int:
    """Evaluate the configured bounds over the time grid."""
    config = _load_config(args)
    entries = run_sweep(config)
    if args.format == "json":
        text = json.dumps([e.to_dict() for e in entries], indent=2) + "\n"
    else:
        text = sweep_to_csv(entries)
    _write_output(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    """Run the sweep plus oracle verification and emit a feasibility report."""
    config = _load_config(args)
    report = build_report(config, verify=True)
    _write_output(report.to_json() + "\n", args.out)
    return EXIT_OK if report.all_hold else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sdpfeas", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    metrics = sub.add_parser("metrics", help="false omission rate from counts or records")
    group = metrics.add_mutually_exclusive_group(required=True)
    group.add_argument("--counts", help="path to counts JSON ('-' for stdin)")
    group.add_argument("--records", help="path to records CSV ('-' for stdin)")
    metrics.add_argument("--out", help="output path (default stdout)")
    metrics.set_defaults(func=cmd_metrics)

    def add_scenario_args(p, with_format=False):
        p.add_argument("--config", required=True, help="path to scenario JSON ('-' for stdin)")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--seed", type=int, help="RNG seed (overrides config and SDPFEAS_SEED)")
        p.add_argument("--trials", type=int, help="Monte-Carlo trial count override")
        p.add_argument("--epsilon", type=float, help="feasibility cutoff override")
        sign = p.add_mutually_exclusive_group()
        sign.add_argument("--corrected", dest="corrected", action="store_true", default=None)
        sign.add_argument("--as-published", dest="corrected", action="store_false", default=None)
        if with_format:
            p.add_argument("--format", choices=("csv", "json"), default="csv")

    bound = sub.add_parser("bound", help="single bound at one time point")
    add_scenario_args(bound)
    bound.set_defaults(func=cmd_bound)

    sweep = sub.add_parser("sweep", help="bounds over a time grid")
    add_scenario_args(sweep, with_format=True)
    sweep.set_defaults(func=cmd_sweep)

    verify = sub.add_parser("verify", help="sweep plus oracle verification report")
    add_scenario_args(verify)
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    except AssumptionViolationError as exc:
        print(
            f"error: assumption {exc.assumption} violated "
            f"(at least one false negative and one true negative required): {exc}",
            file=sys.stderr,
        )
        return EXIT_ASSUMPTION
    except OutOfRegimeError as exc:
        print(f"finding: {exc}", file=sys.stderr)
        return EXIT_OUT_OF_REGIME
    except (ParseError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SdpFeasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
