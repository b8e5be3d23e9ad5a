"""Synthetic network families for simulation studies."""

from __future__ import annotations

import logging
import math
from typing import List, Tuple

import numpy as np

from ..errors import ParameterError
from ..graph.network import Network, build_network

logger = logging.getLogger(__name__)

NETWORK_KINDS = ("line", "cycle", "star", "lattice2d", "erdos_renyi", "edgeless")


def _line_edges(n: int) -> List[Tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def _cycle_edges(n: int) -> List[Tuple[int, int]]:
    return _line_edges(n) + [(0, n - 1)]


def _star_edges(n: int) -> List[Tuple[int, int]]:
    return [(0, leaf) for leaf in range(1, n)]


def _lattice_edges(n: int) -> List[Tuple[int, int]]:
    # Row-major placement on a grid ceil(sqrt(n)) nodes wide; the last row may be partial.
    width = math.ceil(math.sqrt(n))
    edges = []
    for node in range(n):
        if (node + 1) % width and node + 1 < n:
            edges.append((node, node + 1))
        if node + width < n:
            edges.append((node, node + width))
    return edges


def _erdos_renyi_edges(n: int, p: float, rng: np.random.Generator) -> List[Tuple[int, int]]:
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.size) < p
    return list(zip(rows[keep].tolist(), cols[keep].tolist()))


def gen_network(
    kind: str,
    n: int,
    rng: np.random.Generator | None = None,
    p: float | None = None,
) -> Network:
    """Build a unit-weight network of the given family on ``n`` nodes.

    Only ``erdos_renyi`` consumes randomness; it requires ``rng`` and ``p``.
    """
    if kind not in NETWORK_KINDS:
        raise ParameterError(
            f"Unknown network kind '{kind}'. Valid options: {', '.join(NETWORK_KINDS)}."
        )
    if n < 2:
        raise ParameterError(f"Networks need n >= 2 nodes, got {n}")

    if kind == "line":
        edges = _line_edges(n)
    elif kind == "cycle":
        if n < 3:
            raise ParameterError("A cycle needs n >= 3 nodes")
        edges = _cycle_edges(n)
    elif kind == "star":
        edges = _star_edges(n)
    elif kind == "lattice2d":
        edges = _lattice_edges(n)
    elif kind == "edgeless":
        edges = []
    else:
        if p is None or not (0.0 < p < 1.0):
            raise ParameterError(f"erdos_renyi needs an edge probability p in (0, 1), got {p}")
        if rng is None:
            raise ParameterError("erdos_renyi needs a random generator", code="missing_seed")
        edges = _erdos_renyi_edges(n, p, rng)

    net = build_network(n, edges)
    logger.debug("Generated %s network: n=%d, edges=%d", kind, n, net.edge_count)
    return net


__all__ = ["NETWORK_KINDS", "gen_network"]
