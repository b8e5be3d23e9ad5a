"""CLI entry-point for the network bootstrap toolkit."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from dotenv import load_dotenv

from .config import Settings
from .cli import (
    GRAPH_COMMANDS,
    attach_bootstrap_subparser,
    attach_graph_subparsers,
    attach_simulate_subparsers,
    handle_bootstrap_command,
    handle_graph_command,
    handle_simulate_command,
)
from .errors import ConfigurationError, NetworkBootstrapError, UsageError


class _ArgumentParser(argparse.ArgumentParser):
    """Reports usage problems as ``usage_error`` instead of exiting from inside argparse."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="network-bootstrap",
        description="Bootstrap inference for means of processes indexed by the nodes of a network.",
    )
    parser.add_argument(
        "--log-level",
        default="INFO",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Logging verbosity",
    )

    subparsers = parser.add_subparsers(dest="command", help="Sub-commands")
    attach_graph_subparsers(subparsers)
    attach_bootstrap_subparser(subparsers)
    attach_simulate_subparsers(subparsers)
    return parser


def _report_error(exc: NetworkBootstrapError) -> int:
    sys.stderr.write(json.dumps(exc.to_dict(), sort_keys=True) + "\n")
    return 2


def _dispatch(args, settings: Settings) -> int:
    if args.command in GRAPH_COMMANDS:
        return handle_graph_command(args, settings)
    if args.command in {"bootstrap", "quantiles"}:
        return handle_bootstrap_command(args, settings)
    return handle_simulate_command(args, settings)


def main(argv: list[str] | None = None) -> int:
    # Load environment variables from .env file
    load_dotenv()

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _report_error(exc)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return _report_error(UsageError("a sub-command is required"))

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s [%(name)s] %(message)s",
        stream=sys.stderr,
    )

    try:
        settings = Settings()
        settings.validate()
    except ValueError as exc:
        return _report_error(ConfigurationError(f"Configuration error: {exc}"))

    try:
        return _dispatch(args, settings)
    except NetworkBootstrapError as exc:
        logging.debug("Command %s failed with %s", args.command, exc.code)
        return _report_error(exc)
    except Exception:  # pragma: no cover - top-level guard
        logging.exception("Failed to complete %s", args.command)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
