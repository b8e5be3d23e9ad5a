"""Finite-n magnitudes of the network conditions behind bootstrap consistency.

Nothing here issues a verdict. Each field is the value of the corresponding
expression for the given graph, radius and dependence coefficients ``gamma``;
users judge the decay by recomputing across growing networks.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import List, Mapping

import numpy as np

from ..errors import GammaCoverageError, ParameterError
from ..graph.denseness import (
    denseness,
    local_denseness_profile,
    overlap_weights,
    quadruple_histogram,
)
from ..graph.distances import DistanceMatrix, boundary_mask

logger = logging.getLogger(__name__)

TAIL_POLICIES = ("error", "zero", "hold")

# E|Z|^3 for a standard normal Z.
_GAUSSIAN_ABS_THIRD = 2.0 * math.sqrt(2.0 / math.pi)


@dataclass(frozen=True)
class DiagnosticsReport:
    s_n: float
    lln_condition: float
    bb1_a: float
    bb1_b: float
    bb1_c: float
    bb2_a: float
    bb2_b: float
    bb4: float
    dwb2_a: float
    dwb2_b: float
    dwb_third_moment: float
    omega_max_offdiag: float
    pseudo_sample_bound: float
    bb1_c_by_radius: List[float] = field(default_factory=list)
    dwb2_b_by_radius: List[float] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def gamma_series(gamma, length: int, tail_policy: str = "error") -> np.ndarray:
    """Expand ``gamma`` (a sequence indexed by ``s`` or a ``{s: value}`` mapping) to ``length`` values."""
    if tail_policy not in TAIL_POLICIES:
        raise ParameterError(
            f"Unsupported gamma tail policy '{tail_policy}'. Valid options: {', '.join(TAIL_POLICIES)}."
        )
    if isinstance(gamma, Mapping):
        keys = sorted(int(s) for s in gamma)
        if keys != list(range(len(keys))):
            raise ParameterError("gamma must be given for every radius 0, 1, 2, ... without gaps")
        values = np.array([float(gamma[s]) for s in keys], dtype=float)
    else:
        values = np.asarray(list(gamma), dtype=float)

    if values.ndim != 1 or values.size == 0:
        raise ParameterError("gamma must be a nonempty sequence")
    if not np.all(np.isfinite(values)) or np.any(values < 0):
        raise ParameterError("gamma values must be finite and >= 0")

    if values.size >= length:
        return values[:length]
    if tail_policy == "error":
        raise GammaCoverageError(
            f"gamma covers radii 0..{values.size - 1} but the network needs 0..{length - 1}; "
            "extend it or choose the 'zero' or 'hold' tail policy"
        )
    fill = 0.0 if tail_policy == "zero" else float(values[-1])
    return np.concatenate([values, np.full(length - values.size, fill)])


def _weighted_omega_deviation(
    dist: DistanceMatrix,
    omega: np.ndarray,
    gamma: np.ndarray,
    s_max: int,
) -> List[float]:
    """``n^-1 sum_i sum_{j in boundary(i; s)} |omega(i, j) - 1| gamma_s`` for ``s = 1..s_max``."""
    deviation = np.abs(omega - 1.0)
    values = []
    for s in range(1, s_max + 1):
        mask = boundary_mask(dist, s)
        values.append(float(deviation[mask].sum()) * float(gamma[s]) / dist.n)
    return values


def third_moment_sum(dist: DistanceMatrix, s_n: float, weight_norms: np.ndarray) -> float:
    """``n^-3/2 sum_i sum_{j in B_i} sum_{k in B_i | B_j} w_i w_j w_k`` with ``B_i = N(i; s_n+1)``."""
    members = dist.within(s_n + 1)
    w = np.asarray(weight_norms, dtype=float)
    total = 0.0
    for i in range(dist.n):
        block = np.flatnonzero(members[i])
        union = members[block] | members[i]
        total += w[i] * float(w[block] @ (union @ w))
    return total / dist.n**1.5


def gaussian_weight_norms(omega: np.ndarray) -> np.ndarray:
    """``||W_l||_3`` for centered Gaussian weights with variances ``omega(l, l)``."""
    return np.sqrt(np.clip(np.diag(omega), 0.0, None)) * _GAUSSIAN_ABS_THIRD ** (1.0 / 3.0)


def diagnostics(
    dist: DistanceMatrix,
    s_n: float,
    gamma,
    r: float = 4.0,
    p: float = 4.0,
    tail_policy: str = "error",
    weight_norm3: float | None = None,
) -> DiagnosticsReport:
    """Evaluate every condition at radius ``s_n`` for the supplied ``gamma``.

    ``weight_norm3`` replaces the per-node third-moment norm of the wild bootstrap
    weights by a scalar; by default the Gaussian value implied by the overlap
    weights is used.
    """
    if not s_n > 0:
        raise ParameterError(f"s_n must be > 0, got {s_n}")
    if not (r > 2 and p > 2):
        raise ParameterError(f"Moment orders r and p must exceed 2, got r={r}, p={p}")

    n = dist.n
    s_max = int(math.floor(dist.diameter))
    gam = gamma_series(gamma, s_max + 1, tail_policy)
    gam_r = gam ** (1.0 - 2.0 / r)
    gam_p = gam ** (1.0 - 2.0 / p)

    at_radius_1 = denseness(dist, s_n, 1)
    at_radius_2 = denseness(dist, s_n, 2)
    delta = at_radius_1.delta
    d_max = at_radius_1.d_max

    boundary_means = np.array(
        [float(boundary_mask(dist, s).sum()) / n for s in range(s_max + 1)]
    )
    lln = float(np.sum(boundary_means[1:] * gam[1:])) / n

    omega = overlap_weights(dist, s_n)
    block_members = dist.within(s_n + 1)
    diag_excess = np.diag(omega) - 1.0
    bb1_b = float(np.max(np.abs(block_members.astype(float) @ diag_excess))) / math.sqrt(n)
    by_radius = _weighted_omega_deviation(dist, omega, gam, s_max)
    worst = max(by_radius) if by_radius else 0.0

    bb2_a = float(np.sum(boundary_means[1:] * gam_r[1:]))
    histogram = quadruple_histogram(dist, 2 * s_n + 1)
    bb2_b = sum(count * gam_r[s] for s, count in histogram.items() if s <= s_max) / n**2

    delta_loc, h_loc = local_denseness_profile(dist, s_n, s_max)
    bb4 = (delta / n) ** (1.0 / 3.0) * float(np.sum(delta_loc * gam_p)) + (
        delta**2.5 / n
    ) ** (2.0 / 3.0) * float(np.sum(h_loc * gam_p))

    if weight_norm3 is None:
        norms = gaussian_weight_norms(omega)
    else:
        if weight_norm3 < 0:
            raise ParameterError(f"weight_norm3 must be >= 0, got {weight_norm3}")
        norms = np.full(n, float(weight_norm3))

    off_diagonal = omega[~np.eye(n, dtype=bool)]
    report = DiagnosticsReport(
        s_n=s_n,
        lln_condition=lln,
        bb1_a=at_radius_2.delta_central / delta + d_max / math.sqrt(delta * n),
        bb1_b=bb1_b,
        bb1_c=worst,
        bb2_a=bb2_a,
        bb2_b=float(bb2_b),
        bb4=bb4,
        dwb2_a=at_radius_1.delta_central / delta + d_max / n,
        dwb2_b=worst,
        dwb_third_moment=third_moment_sum(dist, s_n, norms),
        omega_max_offdiag=float(off_diagonal.max()) if off_diagonal.size else 0.0,
        pseudo_sample_bound=math.sqrt(at_radius_2.delta_central) / delta,
        bb1_c_by_radius=list(by_radius),
        dwb2_b_by_radius=list(by_radius),
    )
    logger.info("Diagnostics at s_n=%s over radii 0..%d for n=%d", s_n, s_max, n)
    return report


def dependence_transform_rate(p: float, tau: float, c4_zero: bool) -> float:
    """Rate ``r`` of the weak-dependence coefficients after a smooth transformation.

    ``(p - tau)/(p - 1)`` when ``c4 = 0``, otherwise ``(p - tau)/(p + tau - 2)``.
    """
    if not p > 1:
        raise ParameterError(f"p must be > 1, got {p}")
    if tau < 1:
        raise ParameterError(f"tau must be >= 1, got {tau}")
    if tau >= p:
        raise ParameterError(f"tau must be < p, got tau={tau}, p={p}")
    if c4_zero:
        return (p - tau) / (p - 1)
    return (p - tau) / (p + tau - 2)


__all__ = [
    "TAIL_POLICIES",
    "DiagnosticsReport",
    "gamma_series",
    "third_moment_sum",
    "gaussian_weight_norms",
    "diagnostics",
    "dependence_transform_rate",
]
