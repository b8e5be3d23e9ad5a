"""CLI commands for graph-level quantities: distances, denseness, HAC, diagnostics."""

from __future__ import annotations

import argparse
from pathlib import Path

from ..config import Settings
from ..services import NetworkService
from .common import add_graph_arguments, add_runtime_arguments, emit_json

GRAPH_COMMANDS = ("distances", "denseness", "hac", "diagnose")


def attach_graph_subparsers(subparsers: argparse._SubParsersAction) -> None:
    distances_parser = subparsers.add_parser("distances", help="All-pairs shortest-path distances")
    add_graph_arguments(distances_parser)
    add_runtime_arguments(distances_parser, output_help="Write the dense distance matrix to this file")

    denseness_parser = subparsers.add_parser("denseness", help="Denseness measures at radius s")
    add_graph_arguments(denseness_parser)
    add_runtime_arguments(denseness_parser)
    denseness_parser.add_argument("--s", type=float, required=True, help="Radius s >= 0")
    denseness_parser.add_argument("--k", type=float, default=1.0, help="Moment order k >= 1")
    denseness_parser.add_argument(
        "--profile", type=int, default=None, metavar="S_MAX", help="Also report radii 0..S_MAX"
    )

    hac_parser = subparsers.add_parser("hac", help="Network HAC estimate of Var(sqrt(n) Ybar)")
    add_graph_arguments(hac_parser)
    add_runtime_arguments(hac_parser)
    hac_parser.add_argument("--data", type=Path, required=True, help="CSV data matrix, n rows x v columns")
    hac_parser.add_argument("--header", action="store_true", help="Skip one header line in --data")
    hac_parser.add_argument("--bandwidth", type=float, required=True, help="Bandwidth b_n >= 0")
    hac_parser.add_argument(
        "--kernel",
        choices=["truncated", "bartlett", "parzen"],
        default=None,
        help="Kernel (default: NETBOOT_HAC_KERNEL)",
    )
    hac_parser.add_argument("--repair", action="store_true", help="Also report the eigenvalue-floored estimate")
    hac_parser.add_argument("--floor", type=float, default=None, help="Eigenvalue floor c_n for --repair")

    diagnose_parser = subparsers.add_parser("diagnose", help="Finite-n values of the network conditions")
    add_graph_arguments(diagnose_parser)
    add_runtime_arguments(diagnose_parser)
    diagnose_parser.add_argument("--radius", type=float, required=True, help="Bootstrap radius s_n > 0")
    diagnose_parser.add_argument("--gamma", type=Path, required=True, help="File of 's gamma_s' lines")
    diagnose_parser.add_argument("--r", type=float, default=None, help="Moment order r > 2")
    diagnose_parser.add_argument("--p", type=float, default=None, help="Moment order p > 2")
    diagnose_parser.add_argument(
        "--tail-policy",
        choices=["error", "zero", "hold"],
        default=None,
        help="How to extend gamma beyond its last radius (default: NETBOOT_GAMMA_TAIL)",
    )
    diagnose_parser.add_argument(
        "--weight-norm3", type=float, default=None, help="Scalar third-moment norm of the wild weights"
    )


def handle_graph_command(args, settings: Settings) -> int:
    service = NetworkService(settings)
    net, dist = service.load_graph(args.edges, args.nodes, args.weights, args.threads)

    if args.command == "distances":
        emit_json(service.distances(net, dist, args.output).to_dict())
        return 0

    if args.command == "denseness":
        payload = service.denseness(dist, args.s, args.k, args.profile)
    elif args.command == "hac":
        payload = service.hac(
            args.data,
            dist,
            args.bandwidth,
            kernel=args.kernel,
            header=args.header,
            repair=args.repair,
            floor=args.floor,
        ).to_dict()
    else:
        payload = service.diagnose(
            dist,
            args.radius,
            args.gamma,
            r=args.r,
            p=args.p,
            tail_policy=args.tail_policy,
            weight_norm3=args.weight_norm3,
        )
    emit_json(payload, args.output)
    return 0


__all__ = ["GRAPH_COMMANDS", "attach_graph_subparsers", "handle_graph_command"]
