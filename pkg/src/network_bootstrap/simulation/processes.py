"""Network-dependent processes with known mean, variance and dependence coefficients.

Every process is linear in iid standard normal innovations ``u``: ``Y = G u``.
The mixing matrix ``G`` fixes the truth, ``Var(sqrt(n) Ybar) = n^-1 sum_ij [G G^T]_ij``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Mapping

import numpy as np
from scipy import linalg

from ..errors import ConfigurationError, CovarianceError, NetworkBootstrapError, ParameterError
from ..graph.distances import DistanceMatrix, distance_matrix
from ..graph.network import Network
from .networks import NETWORK_KINDS

logger = logging.getLogger(__name__)

PROCESS_KINDS = ("iid_normal", "ma_neighborhood", "cliff_ord", "constant")

# E|u| for a standard normal innovation.
ABS_MEAN_NORMAL = math.sqrt(2.0 / math.pi)

# Relative slack for summation noise when checking that gamma is nonincreasing.
_GAMMA_MONOTONE_TOL = 1e-12


@dataclass(frozen=True)
class DGPSpec:
    network_kind: str
    n: int
    process: str = "iid_normal"
    network_p: float | None = None
    q: int = 0
    lam: float = 0.0
    seed: int | None = None

    def validate(self) -> None:
        if self.network_kind not in NETWORK_KINDS:
            raise ConfigurationError(
                f"Unknown network kind '{self.network_kind}'. Valid options: {', '.join(NETWORK_KINDS)}."
            )
        if self.process not in PROCESS_KINDS:
            raise ConfigurationError(
                f"Unknown process '{self.process}'. Valid options: {', '.join(PROCESS_KINDS)}."
            )
        if self.n < 2:
            raise ConfigurationError(f"n must be >= 2, got {self.n}")
        if self.network_kind == "erdos_renyi" and (
            self.network_p is None or not (0.0 < self.network_p < 1.0)
        ):
            raise ConfigurationError("erdos_renyi requires network.p in (0, 1)")
        if self.q < 0:
            raise ConfigurationError(f"q must be >= 0, got {self.q}")
        if not (-1.0 < self.lam < 1.0):
            raise ConfigurationError(f"lambda must lie in (-1, 1), got {self.lam}")
        if self.seed is None:
            raise ConfigurationError("A seed is required", code="missing_seed")
        if self.seed < 0:
            raise ConfigurationError(f"seed must be >= 0, got {self.seed}")

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any]) -> "DGPSpec":
        """Read the ``[network]``/``[process]`` tables and the top-level ``seed``."""
        network = raw.get("network") or {}
        process = raw.get("process") or {}
        try:
            spec = cls(
                network_kind=str(network.get("kind", "")),
                n=int(network.get("n", 0)),
                network_p=None if network.get("p") is None else float(network["p"]),
                process=str(process.get("kind", "iid_normal")),
                q=int(process.get("q", 0)),
                lam=float(process.get("lambda", 0.0)),
                seed=None if raw.get("seed") is None else int(raw["seed"]),
            )
        except (TypeError, ValueError) as exc:
            raise ConfigurationError(f"Invalid simulation config: {exc}") from exc
        spec.validate()
        return spec


def spectral_radius(A, tol: float = 1e-10, max_iter: int = 5000) -> float:
    """Largest eigenvalue of a nonnegative symmetric matrix by power iteration.

    Iterates with ``A + I`` so bipartite graphs (eigenvalues ``+-rho``) converge,
    and falls back to a dense symmetric eigensolver if the gap is too small.
    """
    arr = np.asarray(A, dtype=float)
    n = arr.shape[0]
    if n == 0 or not np.any(arr):
        return 0.0
    shifted = arr + np.eye(n)
    x = np.ones(n) / math.sqrt(n)
    estimate = 0.0
    for _ in range(max_iter):
        y = shifted @ x
        updated = float(x @ y)
        x = y / np.linalg.norm(y)
        if abs(updated - estimate) <= tol * abs(updated):
            return updated - 1.0
        estimate = updated
    logger.debug("Power iteration did not converge in %d steps; using eigvalsh", max_iter)
    return float(linalg.eigvalsh(arr, subset_by_index=[n - 1, n - 1])[0])


@dataclass(frozen=True)
class ProcessModel:
    """Linear process ``Y = G u`` on a fixed network."""

    kind: str
    mixing: np.ndarray
    true_mean: float = 0.0
    gamma: np.ndarray | None = None
    system: Any = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return int(self.mixing.shape[0])

    @property
    def true_variance(self) -> float:
        """``Var(sqrt(n) Ybar) = n^-1 sum_ij [G G^T]_ij``."""
        # Var(sum_i Y_i) = ||G^T 1||^2.
        column_mass = self.mixing.sum(axis=0)
        return float(column_mass @ column_mass) / self.n

    def draw(self, rng: np.random.Generator) -> np.ndarray:
        u = rng.standard_normal(self.n)
        if self.system is None:
            return self.true_mean + self.mixing @ u
        lu_piv, operator = self.system
        eps = linalg.lu_solve(lu_piv, u)
        residual = float(np.linalg.norm(operator @ eps - u))
        if residual > 1e-8 * float(np.linalg.norm(u)):
            raise CovarianceError(
                f"Linear solve residual {residual:.3g} too large; the system is near singular",
                code="singular_system",
            )
        return eps


def _as_distances(graph: Network | DistanceMatrix) -> DistanceMatrix:
    return graph if isinstance(graph, DistanceMatrix) else distance_matrix(graph)


def neighborhood_ma_model(graph: Network | DistanceMatrix, q: int) -> ProcessModel:
    """``Y_i = |N(i; q+1)|^-1/2 sum_{j in N(i; q+1)} u_j``."""
    if q < 0:
        raise ParameterError(f"q must be >= 0, got {q}")
    dist = _as_distances(graph)
    members = dist.within(q + 1).astype(float)
    mixing = members / np.sqrt(members.sum(axis=1))[:, None]
    return ProcessModel(kind="ma_neighborhood", mixing=mixing)


def cliff_ord_gamma(dist: DistanceMatrix, C: np.ndarray) -> np.ndarray:
    """``gamma_s = E|u| max_i sum_{j : d(i, j) >= s+1} |C_ij|`` for ``s = 0..floor(diameter)``."""
    magnitude = np.abs(C)
    s_max = int(math.floor(dist.diameter))
    gamma = np.empty(s_max + 1)
    for s in range(s_max + 1):
        far = ~dist.within(s + 1)
        gamma[s] = ABS_MEAN_NORMAL * float((magnitude * far).sum(axis=1).max())
    rise = np.diff(gamma)
    if np.any(rise > _GAMMA_MONOTONE_TOL * max(float(gamma[0]), 1.0)):
        s = int(np.argmax(rise)) + 1
        raise NetworkBootstrapError(
            f"Dependence coefficients increase at s={s}: {gamma[s - 1]:.6g} -> {gamma[s]:.6g}",
            code="non_monotone",
        )
    return gamma


def cliff_ord_model(net: Network, lam: float, dist: DistanceMatrix | None = None) -> ProcessModel:
    """``eps = lam W~ eps + u`` with ``W~ = A / rho(A)``; ``C = (I - lam W~)^-1``."""
    if not (-1.0 < lam < 1.0):
        raise ParameterError(f"lambda must lie in (-1, 1), got {lam}")
    dist = dist if dist is not None else distance_matrix(net)
    adjacency = net.adjacency()
    rho = spectral_radius(adjacency)
    normalized = adjacency / rho if rho > 0 else adjacency
    operator = np.eye(net.node_count) - lam * normalized
    lu_piv = linalg.lu_factor(operator)
    C = linalg.lu_solve(lu_piv, np.eye(net.node_count))
    logger.debug("Cliff-Ord model: n=%d, rho(A)=%.6g, lambda=%s", net.node_count, rho, lam)
    return ProcessModel(
        kind="cliff_ord",
        mixing=C,
        gamma=cliff_ord_gamma(dist, C),
        system=(lu_piv, operator),
    )


def build_process(spec: DGPSpec, net: Network, dist: DistanceMatrix) -> ProcessModel:
    n = net.node_count
    if spec.process == "iid_normal":
        return ProcessModel(kind="iid_normal", mixing=np.eye(n))
    if spec.process == "constant":
        return ProcessModel(kind="constant", mixing=np.zeros((n, n)))
    if spec.process == "ma_neighborhood":
        return neighborhood_ma_model(dist, spec.q)
    return cliff_ord_model(net, spec.lam, dist)


def gen_cliff_ord(net: Network, lam: float, rng: np.random.Generator):
    """One draw ``eps`` and the dependence coefficients ``gamma_s``."""
    model = cliff_ord_model(net, lam)
    return model.draw(rng), model.gamma


def gen_ma_neighborhood(graph: Network | DistanceMatrix, q: int, rng: np.random.Generator) -> np.ndarray:
    return neighborhood_ma_model(graph, q).draw(rng)


def true_variance(model: ProcessModel) -> float:
    return model.true_variance


__all__ = [
    "PROCESS_KINDS",
    "ABS_MEAN_NORMAL",
    "DGPSpec",
    "ProcessModel",
    "spectral_radius",
    "neighborhood_ma_model",
    "cliff_ord_gamma",
    "cliff_ord_model",
    "build_process",
    "gen_cliff_ord",
    "gen_ma_neighborhood",
    "true_variance",
]
