"""Shared argument helpers and JSON emission for CLI commands."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path


def add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--edges", type=Path, required=True, help="Edge list file (1-based 'i j [w]' lines)")
    parser.add_argument("--nodes", type=int, default=None, help="Node count (default: largest label)")
    parser.add_argument(
        "--weights",
        choices=["unit", "intensity"],
        default="unit",
        help="Edge weight mode; intensity weights in (0, 1] give edge length 1/w",
    )


def add_runtime_arguments(parser: argparse.ArgumentParser, output_help: str = "Write JSON to this file") -> None:
    parser.add_argument("--threads", type=int, default=None, help="Worker threads (default: NETBOOT_THREADS)")
    parser.add_argument("--output", type=Path, default=None, help=output_help)


def emit_json(payload: dict, output: Path | None = None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


__all__ = ["add_graph_arguments", "add_runtime_arguments", "emit_json"]
