"""Data schemas for the JSON payloads emitted by the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np


def _matrix(values) -> List[List[float]]:
    return [[float(x) for x in row] for row in np.atleast_2d(np.asarray(values, dtype=float))]


def _vector(values) -> List[float]:
    return [float(x) for x in np.atleast_1d(np.asarray(values, dtype=float))]


@dataclass
class DistanceSummary:
    node_count: int
    edge_count: int
    diameter: float
    connected: bool
    matrix_path: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "diameter": self.diameter,
            "connected": self.connected,
            "matrix_path": self.matrix_path,
        }


@dataclass
class HacSummary:
    kernel: str
    bandwidth: float
    estimate: np.ndarray
    min_eigenvalue: float
    repaired: Optional[np.ndarray] = None
    repair_floor: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "kernel": self.kernel,
            "bandwidth": self.bandwidth,
            "v": int(self.estimate.shape[0]),
            "estimate": _matrix(self.estimate),
            "min_eigenvalue": self.min_eigenvalue,
            "repaired": None if self.repaired is None else _matrix(self.repaired),
            "repair_floor": self.repair_floor,
        }


@dataclass
class BootstrapSummary:
    scheme: str
    n: int
    v: int
    s_n: float
    reps: int
    seed: int
    sample_mean: np.ndarray
    center: np.ndarray
    sigma_star: np.ndarray
    summary: Dict[str, object]
    phi: Optional[str] = None
    phi_at_mean: Optional[float] = None
    delta_method_variance: Optional[float] = None
    extras: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        payload = {
            "scheme": self.scheme,
            "n": self.n,
            "v": self.v,
            "radius": self.s_n,
            "reps": self.reps,
            "seed": self.seed,
            "sample_mean": _vector(self.sample_mean),
            "center": _vector(self.center),
            "sigma_star": _matrix(self.sigma_star),
            "phi": self.phi,
            "phi_at_mean": self.phi_at_mean,
            "delta_method_variance": self.delta_method_variance,
        }
        payload.update(self.summary)
        for key, value in self.extras.items():
            payload[key] = _matrix(value) if isinstance(value, np.ndarray) else value
        return payload


@dataclass
class SimulationSummary:
    network_kind: str
    process: str
    n: int
    edge_count: int
    seed: int
    true_mean: float
    true_variance: float
    sample_mean: float
    gamma: Optional[np.ndarray] = None
    data_path: Optional[str] = None
    edges_path: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "network_kind": self.network_kind,
            "process": self.process,
            "n": self.n,
            "edge_count": self.edge_count,
            "seed": self.seed,
            "true_mean": self.true_mean,
            "true_variance": self.true_variance,
            "sample_mean": self.sample_mean,
            "gamma": None if self.gamma is None else _vector(self.gamma),
            "data_path": self.data_path,
            "edges_path": self.edges_path,
        }
