"""Weighted undirected networks with validated edge lists."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ..errors import NetworkValidationError

logger = logging.getLogger(__name__)

WEIGHT_MODES = ("unit", "intensity")

Edge = Tuple[int, int, float]


@dataclass(frozen=True)
class Network:
    """Undirected graph on nodes ``0..node_count-1``.

    Edges are stored canonically as ``(i, j, w)`` with ``i < j``, sorted. The
    weight ``w`` is a connection intensity in (0, 1]; an edge has length ``1/w``.
    """

    node_count: int
    edges: Tuple[Edge, ...]
    weight_mode: str = "unit"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.node_count, dtype=np.int64)
        for i, j, _ in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def adjacency(self) -> np.ndarray:
        """Dense symmetric weight matrix (zero diagonal)."""
        adj = np.zeros((self.node_count, self.node_count), dtype=float)
        for i, j, w in self.edges:
            adj[i, j] = w
            adj[j, i] = w
        return adj

    def edge_lengths(self) -> List[Edge]:
        return [(i, j, 1.0 / w) for i, j, w in self.edges]


def _normalize_edge(raw: Sequence[float]) -> Tuple[int, int, float]:
    if len(raw) == 2:
        i, j = raw
        w = 1.0
    elif len(raw) == 3:
        i, j, w = raw
    else:
        raise NetworkValidationError(f"Edge must be (i, j) or (i, j, w), got {tuple(raw)!r}")
    if int(i) != i or int(j) != j:
        raise NetworkValidationError(f"Edge endpoints must be integers, got {tuple(raw)!r}",
                                     code="index_out_of_range")
    return int(i), int(j), float(w)


def build_network(
    node_count: int,
    edges: Iterable[Sequence[float]],
    weight_mode: str = "unit",
) -> Network:
    """Validate an edge list (0-based endpoints) and return a canonical Network."""
    if node_count < 1:
        raise NetworkValidationError("node_count must be >= 1", code="invalid_parameter")
    if weight_mode not in WEIGHT_MODES:
        raise NetworkValidationError(
            f"Unsupported weight_mode '{weight_mode}'. Valid options: unit, intensity.",
            code="invalid_parameter",
        )

    seen: set[tuple[int, int]] = set()
    canonical: List[Edge] = []
    for raw in edges:
        i, j, w = _normalize_edge(raw)
        if not (0 <= i < node_count and 0 <= j < node_count):
            raise NetworkValidationError(
                f"Edge ({i}, {j}) references a node outside 0..{node_count - 1}",
                code="index_out_of_range",
            )
        if i == j:
            raise NetworkValidationError(f"Self-loop at node {i}", code="self_loop")
        if not math.isfinite(w) or not (0.0 < w <= 1.0):
            raise NetworkValidationError(
                f"Edge ({i}, {j}) has weight {w}; weights must lie in (0, 1]",
                code="invalid_weight",
            )
        if weight_mode == "unit" and w != 1.0:
            raise NetworkValidationError(
                f"Edge ({i}, {j}) has weight {w}; unit mode requires weight 1",
                code="invalid_weight",
            )
        key = (min(i, j), max(i, j))
        if key in seen:
            raise NetworkValidationError(f"Duplicate edge {key}", code="duplicate_edge")
        seen.add(key)
        canonical.append((key[0], key[1], w))

    canonical.sort()
    logger.debug("Built network with %d nodes and %d edges", node_count, len(canonical))
    return Network(node_count=node_count, edges=tuple(canonical), weight_mode=weight_mode)


__all__ = ["Network", "Edge", "WEIGHT_MODES", "build_network"]
