"""Denseness measures of a network at a given radius.

All quantities are literal finite-n evaluations over the neighborhood sizes
``|N(i; s+1)|`` and the boundary sizes ``|N(i; s+1) \\ N(i; s)|``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass
from typing import Dict, List, Tuple

import numpy as np

from ..errors import ParameterError
from .distances import DistanceMatrix, boundary_mask

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DensenessReport:
    s: float
    k: float
    delta: float
    delta_boundary: float
    d_max: int
    d_max_boundary: int
    delta_central: float

    def to_dict(self) -> dict:
        return asdict(self)


def _check_radius(s: float, name: str = "s") -> None:
    if s < 0 or math.isnan(s):
        raise ParameterError(f"{name} must be >= 0, got {s}")


def average_block_size(dist: DistanceMatrix, s: float) -> float:
    """``delta_n(s) = n^-1 sum_i |N(i; s+1)|``."""
    return float(dist.neighborhood_sizes(s + 1).sum()) / dist.n


def denseness(dist: DistanceMatrix, s: float, k: float = 1) -> DensenessReport:
    _check_radius(s)
    if k < 1:
        raise ParameterError(f"Moment order k must be >= 1, got {k}")

    sizes = dist.neighborhood_sizes(s + 1).astype(float)
    boundary = boundary_mask(dist, s).sum(axis=1).astype(float)
    center = float(sizes.mean())
    return DensenessReport(
        s=s,
        k=k,
        delta=float(np.mean(sizes**k)),
        delta_boundary=float(np.mean(boundary**k)),
        d_max=int(sizes.max()),
        d_max_boundary=int(boundary.max()),
        delta_central=float(np.mean(np.abs(sizes - center) ** k)),
    )


def denseness_profile(dist: DistanceMatrix, k: float, s_max: int) -> List[DensenessReport]:
    return [denseness(dist, s, k) for s in range(int(s_max) + 1)]


def _corner_weight(indicator: np.ndarray, mask: np.ndarray) -> float:
    """``sum M_ij M_kl F_ik F_jk F_il F_jl`` over all ``(i, j, k, l)``.

    Evaluated one ``k`` at a time on the rows ``{i: F_ik}`` and the columns
    ``{l: M_kl}``, so the work is ``sum_k |F_.k|^2 |M_k.|``.
    """
    total = 0.0
    for k in range(indicator.shape[1]):
        rows = np.flatnonzero(indicator[:, k])
        cols = np.flatnonzero(mask[k])
        if rows.size == 0 or cols.size == 0:
            continue
        sub = indicator[np.ix_(rows, cols)].astype(float)
        total += float(np.sum((sub @ sub.T) * mask[np.ix_(rows, rows)]))
    return total


def _separated_pairs(values: np.ndarray, mask: np.ndarray, t: float) -> int:
    """Ordered pairs of admissible pairs whose set distance is ``>= t`` (infinite included).

    ``mask`` and ``values`` must be symmetric. When few distances fall below
    ``t`` the count is expanded over the complement ``N = [D < t]``:
    ``P^2 - 4 r'Nr + 4 r'diag(NMN) + 2 <M, NMN> - 4 <N, MN * NM> + corner(N)``.
    """
    far = values >= t
    near = ~far
    weights = mask.astype(float)
    row_sums = weights.sum(axis=1)
    direct_cost = float(np.sum(far.sum(axis=0).astype(float) ** 2 * row_sums))
    near_cost = float(np.sum(near.sum(axis=0).astype(float) ** 2 * row_sums)) + 3.0 * values.shape[0] ** 3
    if direct_cost <= near_cost:
        return int(round(_corner_weight(far, mask)))

    n_mat = near.astype(float)
    mn = weights @ n_mat
    nmn = n_mat @ mn
    total = row_sums.sum() ** 2
    total -= 4.0 * float(row_sums @ n_mat @ row_sums)
    total += 4.0 * float(row_sums @ np.diag(nmn))
    total += 2.0 * float(np.sum(weights * nmn))
    total -= 4.0 * float(np.sum(n_mat * mn * mn.T))
    total += _corner_weight(near, mask)
    return int(round(total))


def _floor_distance_counts(values: np.ndarray, mask: np.ndarray) -> np.ndarray:
    """Histogram of ``floor(d({i,j},{k,l}))`` over ordered pairs of admissible pairs.

    ``(i, j)`` and ``(k, l)`` both range over ``mask``. Infinite set distances are
    dropped. Set distances only take floors of entries of ``values``, so the tail
    count is evaluated at those floors alone.
    """
    if not mask.any():
        return np.zeros(1, dtype=np.int64)
    finite = values[np.isfinite(values)]
    floors = np.unique(np.floor(finite)).astype(np.int64)
    thresholds = np.append(floors, floors[-1] + 1)
    admissible = int(mask.sum())
    tails = [admissible**2 if t <= 0 else _separated_pairs(values, mask, float(t)) for t in thresholds]
    counts = np.zeros(int(floors[-1]) + 1, dtype=np.int64)
    for index, s in enumerate(floors):
        counts[s] = tails[index] - tails[index + 1]
    return counts


def quadruple_histogram(dist: DistanceMatrix, m: float) -> Dict[int, int]:
    """``{s: |H_n(s, m)|}`` for every ``s`` with a nonzero count.

    ``m = inf`` leaves ``j`` and ``l`` unconstrained.
    """
    _check_radius(m, "m")
    if math.isinf(m):
        mask = np.ones((dist.n, dist.n), dtype=bool)
    else:
        mask = dist.within(m + 1)
    counts = _floor_distance_counts(dist.values, mask)
    return {int(s): int(c) for s, c in enumerate(counts) if c}


def quadruple_count(dist: DistanceMatrix, s: int, m: float) -> int:
    """Exact ``|H_n(s, m)|``."""
    _check_radius(s)
    return quadruple_histogram(dist, m).get(int(s), 0)


def local_denseness_profile(dist: DistanceMatrix, m: float, s_max: int) -> Tuple[np.ndarray, np.ndarray]:
    """Local boundary density and local quadruple density for ``s = 0..s_max``.

    Both are maxima over ``i`` of averages taken inside ``A = N(i; m)``. The
    ``s = 0`` entries equal one by construction.
    """
    _check_radius(m, "m")
    s_max = int(s_max)
    delta_loc = np.zeros(s_max + 1)
    h_loc = np.zeros(s_max + 1)
    delta_loc[0] = 1.0
    h_loc[0] = 1.0

    local_mask = dist.within(m)
    boundaries = [boundary_mask(dist, s) for s in range(1, s_max + 1)]
    for i in range(dist.n):
        members = np.flatnonzero(local_mask[i])
        size = members.size
        if size == 0:
            continue
        sub = np.ix_(members, members)
        for s, bmask in enumerate(boundaries, start=1):
            delta_loc[s] = max(delta_loc[s], bmask[sub].sum() / size)

        counts = _floor_distance_counts(dist.values[sub], np.ones((size, size), dtype=bool))
        upper = min(counts.size, s_max + 1)
        if upper > 1:
            h_loc[1:upper] = np.maximum(h_loc[1:upper], counts[1:upper] / float(size) ** 3)
    return delta_loc, h_loc


def local_denseness(dist: DistanceMatrix, s: int, m: float) -> Tuple[float, float]:
    """``(delta_loc_boundary(s, m), h_loc(s, m))``."""
    _check_radius(s)
    delta_loc, h_loc = local_denseness_profile(dist, m, int(s))
    return float(delta_loc[int(s)]), float(h_loc[int(s)])


def overlap_weights(dist: DistanceMatrix, s_n: float) -> np.ndarray:
    """``omega(i, j) = |N(i; s_n+1) & N(j; s_n+1)| / delta_n(s_n)``; PSD by construction."""
    _check_radius(s_n, "s_n")
    members = dist.within(s_n + 1).astype(float)
    delta = members.sum() / dist.n
    omega = (members @ members.T) / delta
    logger.debug("Overlap weights at radius %s: delta=%.6g", s_n, delta)
    return omega


__all__ = [
    "DensenessReport",
    "average_block_size",
    "denseness",
    "denseness_profile",
    "quadruple_histogram",
    "quadruple_count",
    "local_denseness_profile",
    "local_denseness",
    "overlap_weights",
]
