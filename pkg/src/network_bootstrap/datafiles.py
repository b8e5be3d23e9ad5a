"""Readers and writers for the plain-text file formats used by the CLI.

Edge lists are whitespace separated ``i j [w]`` lines with 1-based node labels;
``#`` starts a comment. Matrices are written with ``%.17g`` so they re-read
bit-identically.
"""

from __future__ import annotations

import json
import logging
import tomllib
from pathlib import Path
from typing import Any, Dict, List, Sequence

import numpy as np

from .errors import DataFileError
from .graph.distances import DistanceMatrix
from .graph.network import Network, build_network

logger = logging.getLogger(__name__)

_FLOAT_FORMAT = "%.17g"


def _content_lines(path: Path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFileError(f"Cannot read {path}: {exc.strerror or exc}", code="file_not_found") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def read_edge_list(
    path: Path,
    node_count: int | None = None,
    weight_mode: str = "unit",
) -> Network:
    """Parse a 1-based edge list into a Network with 0-based nodes.

    Without ``node_count`` the largest label seen sets the node count.
    """
    edges: List[Sequence[float]] = []
    largest = 0
    for lineno, line in _content_lines(path):
        fields = line.split()
        if len(fields) not in (2, 3):
            raise DataFileError(f"{path}:{lineno}: expected 'i j [w]', got '{line}'")
        try:
            i, j = int(fields[0]), int(fields[1])
            w = float(fields[2]) if len(fields) == 3 else 1.0
        except ValueError as exc:
            raise DataFileError(f"{path}:{lineno}: {exc}") from exc
        largest = max(largest, i, j)
        edges.append((i - 1, j - 1, w))

    count = node_count if node_count is not None else largest
    if count < 1:
        raise DataFileError(f"{path}: no edges and no node count given")
    net = build_network(count, edges, weight_mode=weight_mode)
    logger.info("Read %d edges on %d nodes from %s", net.edge_count, count, path)
    return net


def read_data_matrix(path: Path, header: bool = False) -> np.ndarray:
    """CSV with ``n`` rows and ``v`` columns; ``header`` skips the first line."""
    try:
        data = np.loadtxt(path, delimiter=",", ndmin=2, skiprows=1 if header else 0, dtype=float)
    except OSError as exc:
        raise DataFileError(f"Cannot read {path}: {exc}", code="file_not_found") from exc
    except ValueError as exc:
        raise DataFileError(f"{path}: {exc}") from exc
    if data.size == 0:
        raise DataFileError(f"{path}: data matrix is empty")
    logger.debug("Read %dx%d data matrix from %s", data.shape[0], data.shape[1], path)
    return data


def write_edge_list(net: Network, path: Path) -> None:
    """Write 1-based ``i j`` lines, with a weight column for intensity networks."""
    lines = []
    for i, j, w in net.edges:
        if net.weight_mode == "unit":
            lines.append(f"{i + 1} {j + 1}")
        else:
            lines.append(f"{i + 1} {j + 1} {w:.17g}")
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def write_data_matrix(data: np.ndarray, path: Path) -> None:
    arr = np.asarray(data, dtype=float)
    if arr.ndim == 1:
        arr = arr[:, None]
    np.savetxt(path, arr, fmt=_FLOAT_FORMAT, delimiter=",")


def write_distance_matrix(dist: DistanceMatrix, path: Path) -> None:
    np.savetxt(path, dist.values, fmt=_FLOAT_FORMAT)


def read_distance_matrix(path: Path) -> DistanceMatrix:
    try:
        values = np.loadtxt(path, ndmin=2, dtype=float)
    except OSError as exc:
        raise DataFileError(f"Cannot read {path}: {exc}", code="file_not_found") from exc
    except ValueError as exc:
        raise DataFileError(f"{path}: {exc}") from exc
    return DistanceMatrix(values)


def read_gamma(path: Path) -> Dict[int, float]:
    """``s gamma_s`` pairs, one per line."""
    gamma: Dict[int, float] = {}
    for lineno, line in _content_lines(path):
        fields = line.split()
        if len(fields) != 2:
            raise DataFileError(f"{path}:{lineno}: expected 's gamma_s', got '{line}'")
        try:
            s, value = int(fields[0]), float(fields[1])
        except ValueError as exc:
            raise DataFileError(f"{path}:{lineno}: {exc}") from exc
        if s in gamma:
            raise DataFileError(f"{path}:{lineno}: radius {s} listed twice")
        gamma[s] = value
    if not gamma:
        raise DataFileError(f"{path}: no gamma values")
    return gamma


def write_replicates(values: Sequence[float], path: Path) -> None:
    np.savetxt(path, np.asarray(values, dtype=float), fmt=_FLOAT_FORMAT)


def read_replicates(path: Path) -> np.ndarray:
    values: List[float] = []
    for lineno, line in _content_lines(path):
        try:
            values.append(float(line))
        except ValueError as exc:
            raise DataFileError(f"{path}:{lineno}: not a number: '{line}'") from exc
    if not values:
        raise DataFileError(f"{path}: no replicate values", code="empty_input")
    return np.asarray(values)


def load_run_config(path: Path) -> Dict[str, Any]:
    """Simulation config from a ``.toml`` or ``.json`` file."""
    path = Path(path)
    suffix = path.suffix.lower()
    try:
        if suffix == ".toml":
            with path.open("rb") as handle:
                return tomllib.load(handle)
        if suffix == ".json":
            with path.open("r", encoding="utf-8") as handle:
                loaded = json.load(handle)
            if not isinstance(loaded, dict):
                raise DataFileError(f"{path}: top level must be an object")
            return loaded
    except OSError as exc:
        raise DataFileError(f"Cannot read {path}: {exc}", code="file_not_found") from exc
    except (tomllib.TOMLDecodeError, json.JSONDecodeError) as exc:
        raise DataFileError(f"{path}: {exc}") from exc
    raise DataFileError(f"{path}: config must be .toml or .json")


__all__ = [
    "read_edge_list",
    "read_data_matrix",
    "write_edge_list",
    "write_data_matrix",
    "write_distance_matrix",
    "read_distance_matrix",
    "read_gamma",
    "write_replicates",
    "read_replicates",
    "load_run_config",
]
