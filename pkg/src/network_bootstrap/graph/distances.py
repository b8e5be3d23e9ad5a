"""Shortest-path distances and open neighborhoods."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import FrozenSet, List

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from ..errors import DimensionMismatchError, ParameterError
from .network import Network

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DistanceMatrix:
    """Read-only ``n x n`` matrix of graph distances.

    Off-diagonal entries are ``>= 1``; disconnected pairs hold ``numpy.inf``.
    Comparisons such as ``d < s`` are strict and use no tolerance.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=float, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionMismatchError(f"Distance matrix must be square, got shape {arr.shape}")
        if np.any(np.diag(arr) != 0.0) or not np.array_equal(arr, arr.T):
            raise ParameterError("Distance matrix must be symmetric with a zero diagonal")
        off_diagonal = arr[~np.eye(arr.shape[0], dtype=bool)]
        if np.any(np.isnan(off_diagonal)) or np.any(off_diagonal < 1.0):
            raise ParameterError("Off-diagonal distances must be >= 1 (or inf when disconnected)")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    @property
    def diameter(self) -> float:
        """Largest finite distance (0 for a graph without edges)."""
        finite = self.values[np.isfinite(self.values)]
        return float(finite.max()) if finite.size else 0.0

    def within(self, s: float) -> np.ndarray:
        """Boolean mask ``M[i, j] = d(i, j) < s`` (open neighborhoods of radius ``s``)."""
        return self.values < s

    def neighborhood_sizes(self, s: float) -> np.ndarray:
        return self.within(s).sum(axis=1)

    def _check_node(self, i: int) -> None:
        if not (0 <= i < self.n):
            raise ParameterError(f"Node index {i} outside 0..{self.n - 1}", code="index_out_of_range")


def _single_source_block(lengths: csr_matrix, sources: np.ndarray) -> np.ndarray:
    return dijkstra(lengths, directed=False, indices=sources)


def distance_matrix(net: Network, threads: int = 1) -> DistanceMatrix:
    """All-pairs shortest paths on edge lengths ``1/W(e)``."""
    n = net.node_count
    if not net.edges:
        values = np.full((n, n), np.inf)
        np.fill_diagonal(values, 0.0)
        return DistanceMatrix(values)

    rows = np.array([i for i, _, _ in net.edges], dtype=np.int64)
    cols = np.array([j for _, j, _ in net.edges], dtype=np.int64)
    lengths = np.array([1.0 / w for _, _, w in net.edges], dtype=float)
    graph = csr_matrix((lengths, (rows, cols)), shape=(n, n))

    if threads <= 1 or n < 2 * threads:
        values = dijkstra(graph, directed=False)
    else:
        source_blocks = np.array_split(np.arange(n), threads)
        with ThreadPoolExecutor(max_workers=threads) as executor:
            parts = list(executor.map(lambda src: _single_source_block(graph, src), source_blocks))
        values = np.vstack(parts)

    # Dijkstra sums in path order; mirror the upper triangle so d[i, j] == d[j, i] exactly.
    upper = np.triu(values, k=1)
    values = upper + upper.T
    logger.debug("Computed %dx%d distance matrix", n, n)
    return DistanceMatrix(values)


def neighborhood(dist: DistanceMatrix, i: int, s: float) -> FrozenSet[int]:
    """Open neighborhood ``N(i; s) = {j : d(i, j) < s}``; empty for ``s = 0``."""
    dist._check_node(i)
    if s < 0:
        raise ParameterError(f"Radius must be >= 0, got {s}")
    return frozenset(np.flatnonzero(dist.values[i] < s).tolist())


def boundary_neighborhood(dist: DistanceMatrix, i: int, s: float) -> FrozenSet[int]:
    """``N(i; s+1) \\ N(i; s)``: nodes at distance in ``[s, s+1)``."""
    dist._check_node(i)
    if s < 0:
        raise ParameterError(f"Radius must be >= 0, got {s}")
    row = dist.values[i]
    return frozenset(np.flatnonzero((row < s + 1) & ~(row < s)).tolist())


def boundary_mask(dist: DistanceMatrix, s: float) -> np.ndarray:
    """Boolean mask of ``j in N^boundary(i; s)`` for all ``i`` at once."""
    return dist.within(s + 1) & ~dist.within(s)


def neighborhoods(dist: DistanceMatrix, s: float) -> List[np.ndarray]:
    """Sorted member arrays of ``N(i; s)`` for every node ``i``."""
    mask = dist.within(s)
    return [np.flatnonzero(mask[i]) for i in range(dist.n)]


__all__ = [
    "DistanceMatrix",
    "distance_matrix",
    "neighborhood",
    "boundary_neighborhood",
    "boundary_mask",
    "neighborhoods",
]
