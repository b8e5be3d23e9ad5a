"""CLI commands for bootstrap runs and replicate quantiles."""

from __future__ import annotations

import argparse
from pathlib import Path

from ..config import Settings
from ..errors import UsageError
from ..services import BootstrapService, NetworkService
from .common import add_graph_arguments, add_runtime_arguments, emit_json


def attach_bootstrap_subparser(subparsers: argparse._SubParsersAction) -> None:
    bootstrap_parser = subparsers.add_parser("bootstrap", help="Network block or dependent wild bootstrap")
    scheme_sub = bootstrap_parser.add_subparsers(dest="scheme", help="Resampling scheme")

    for scheme, help_text in (
        ("block", "Network block bootstrap (resample neighborhood blocks)"),
        ("dwb", "Network dependent wild bootstrap (correlated Gaussian weights)"),
    ):
        scheme_parser = scheme_sub.add_parser(scheme, help=help_text)
        add_graph_arguments(scheme_parser)
        add_runtime_arguments(scheme_parser)
        scheme_parser.add_argument("--data", type=Path, required=True, help="CSV data matrix, n rows x v columns")
        scheme_parser.add_argument("--header", action="store_true", help="Skip one header line in --data")
        scheme_parser.add_argument("--radius", type=float, required=True, help="Bootstrap radius s_n > 0")
        scheme_parser.add_argument("--reps", type=int, default=None, help="Replicates B (default: NETBOOT_REPS)")
        scheme_parser.add_argument("--seed", type=int, default=None, help="Master seed (required)")
        scheme_parser.add_argument(
            "--phi",
            default=None,
            help="Smooth function for T2: identity, l2norm or poly:c0,c1,...",
        )
        scheme_parser.add_argument(
            "--alpha",
            type=float,
            action="append",
            default=None,
            help="Significance level; repeat for several (default: NETBOOT_ALPHAS)",
        )
        scheme_parser.add_argument(
            "--dump-replicates", type=Path, default=None, help="Write the T1 replicates, one per line"
        )

    quantile_parser = subparsers.add_parser("quantiles", help="Empirical quantiles of dumped replicates")
    quantile_parser.add_argument("--replicates", type=Path, required=True, help="File of replicate values")
    quantile_parser.add_argument(
        "--alpha", type=float, action="append", default=None, help="Quantile level; repeatable"
    )
    quantile_parser.add_argument(
        "--compare", type=Path, default=None, help="Second replicate file for the Kolmogorov distance"
    )
    quantile_parser.add_argument("--output", type=Path, default=None, help="Write JSON to this file")


def handle_bootstrap_command(args, settings: Settings) -> int:
    service = BootstrapService(settings)

    if args.command == "quantiles":
        emit_json(service.quantiles(args.replicates, args.alpha, args.compare), args.output)
        return 0

    if args.scheme is None:
        raise UsageError("bootstrap requires a scheme: block or dwb")

    _, dist = NetworkService(settings).load_graph(args.edges, args.nodes, args.weights, args.threads)
    summary = service.run(
        args.scheme,
        dist,
        args.data,
        args.radius,
        args.seed,
        reps=args.reps,
        phi=args.phi,
        alphas=args.alpha,
        header=args.header,
        threads=args.threads,
        dump_path=args.dump_replicates,
    )
    emit_json(summary.to_dict(), args.output)
    return 0


__all__ = ["attach_bootstrap_subparser", "handle_bootstrap_command"]
