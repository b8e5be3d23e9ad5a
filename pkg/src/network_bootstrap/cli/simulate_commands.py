"""CLI commands for simulated datasets and Monte Carlo coverage studies."""

from __future__ import annotations

import argparse
from pathlib import Path

from ..config import Settings
from ..services import SimulationService
from .common import emit_json


def attach_simulate_subparsers(subparsers: argparse._SubParsersAction) -> None:
    simulate_parser = subparsers.add_parser("simulate", help="Draw one dataset from a TOML/JSON config")
    simulate_parser.add_argument("--config", type=Path, required=True, help="Run config (.toml or .json)")
    simulate_parser.add_argument("--seed", type=int, default=None, help="Master seed (overrides config)")
    simulate_parser.add_argument("--data-output", type=Path, default=None, help="Write the data matrix as CSV")
    simulate_parser.add_argument("--edges-output", type=Path, default=None, help="Write the network edge list")
    simulate_parser.add_argument("--output", type=Path, default=None, help="Write JSON to this file")

    coverage_parser = subparsers.add_parser("coverage", help="Monte Carlo coverage of the bootstrap ball")
    coverage_parser.add_argument("--config", type=Path, required=True, help="Run config (.toml or .json)")
    coverage_parser.add_argument("--seed", type=int, default=None, help="Master seed (overrides config)")
    coverage_parser.add_argument("--scheme", choices=["block", "dwb"], default=None, help="Resampling scheme")
    coverage_parser.add_argument("--radius", type=float, default=None, help="Bootstrap radius s_n")
    coverage_parser.add_argument("--reps", type=int, default=None, help="Bootstrap replicates per dataset")
    coverage_parser.add_argument("--alpha", type=float, default=None, help="Nominal non-coverage level")
    coverage_parser.add_argument("--mc-reps", type=int, default=None, help="Monte Carlo datasets")
    coverage_parser.add_argument("--records", type=Path, default=None, help="Write per-rep records (JSON lines)")
    coverage_parser.add_argument("--threads", type=int, default=None, help="Worker threads")
    coverage_parser.add_argument("--output", type=Path, default=None, help="Write JSON to this file")


def handle_simulate_command(args, settings: Settings) -> int:
    service = SimulationService(settings)

    if args.command == "simulate":
        summary = service.simulate(args.config, args.seed, args.data_output, args.edges_output)
        emit_json(summary.to_dict(), args.output)
        return 0

    overrides = {
        "scheme": args.scheme,
        "radius": args.radius,
        "reps": args.reps,
        "alpha": args.alpha,
        "mc_reps": args.mc_reps,
    }
    payload = service.coverage(args.config, args.seed, overrides, args.threads, args.records)
    emit_json(payload, args.output)
    return 0


__all__ = ["attach_simulate_subparsers", "handle_simulate_command"]
