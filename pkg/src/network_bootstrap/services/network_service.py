"""Orchestration for graph-level commands: distances, denseness, HAC, diagnostics."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Tuple

import numpy as np

from ..api.schemas import DistanceSummary, HacSummary
from ..config import Settings
from ..covariance import (
    KernelSpec,
    default_repair_floor,
    hac_estimate,
    min_eigenvalue,
    psd_repair,
)
from ..datafiles import read_data_matrix, read_edge_list, read_gamma, write_distance_matrix
from ..graph.denseness import average_block_size, denseness, denseness_profile
from ..graph.distances import DistanceMatrix, distance_matrix
from ..graph.network import Network
from ..inference.diagnostics import diagnostics

logger = logging.getLogger(__name__)


class NetworkService:
    """High-level operations behind the graph CLI commands."""

    def __init__(self, settings: Settings) -> None:
        self._settings = settings

    def load_graph(
        self,
        edges_path: Path,
        node_count: int | None = None,
        weight_mode: str = "unit",
        threads: int | None = None,
    ) -> Tuple[Network, DistanceMatrix]:
        net = read_edge_list(edges_path, node_count=node_count, weight_mode=weight_mode)
        workers = threads or self._settings.runtime.threads
        return net, distance_matrix(net, threads=workers)

    def distances(
        self,
        net: Network,
        dist: DistanceMatrix,
        matrix_path: Path | None = None,
    ) -> DistanceSummary:
        if matrix_path is not None:
            write_distance_matrix(dist, matrix_path)
            logger.info("Distance matrix written to %s", matrix_path)
        return DistanceSummary(
            node_count=net.node_count,
            edge_count=net.edge_count,
            diameter=dist.diameter,
            connected=bool(np.all(np.isfinite(dist.values))),
            matrix_path=None if matrix_path is None else str(matrix_path),
        )

    def denseness(self, dist: DistanceMatrix, s: float, k: float, s_max: int | None = None) -> Dict[str, object]:
        payload: Dict[str, object] = denseness(dist, s, k).to_dict()
        payload["average_block_size"] = average_block_size(dist, s)
        if s_max is not None:
            payload["profile"] = [report.to_dict() for report in denseness_profile(dist, k, s_max)]
        return payload

    def hac(
        self,
        data_path: Path,
        dist: DistanceMatrix,
        bandwidth: float,
        kernel: str | None = None,
        header: bool = False,
        repair: bool = False,
        floor: float | None = None,
    ) -> HacSummary:
        data = read_data_matrix(data_path, header=header)
        spec = KernelSpec(kernel or self._settings.covariance.kernel)
        estimate = hac_estimate(data, dist, spec, bandwidth)
        tol = self._settings.covariance.symmetry_tol
        smallest = min_eigenvalue(estimate, tol)
        repaired = None
        c_n = None
        if repair:
            c_n = floor if floor is not None else default_repair_floor(
                estimate, self._settings.covariance.repair_floor_scale
            )
            repaired = psd_repair(estimate, c_n, tol)
        return HacSummary(
            kernel=spec.kind,
            bandwidth=bandwidth,
            estimate=estimate,
            min_eigenvalue=smallest,
            repaired=repaired,
            repair_floor=c_n,
        )

    def diagnose(
        self,
        dist: DistanceMatrix,
        s_n: float,
        gamma_path: Path,
        r: float | None = None,
        p: float | None = None,
        tail_policy: str | None = None,
        weight_norm3: float | None = None,
    ) -> Dict[str, object]:
        config = self._settings.diagnostics
        report = diagnostics(
            dist,
            s_n,
            read_gamma(gamma_path),
            r=r if r is not None else config.moment_r,
            p=p if p is not None else config.moment_p,
            tail_policy=tail_policy or config.gamma_tail,
            weight_norm3=weight_norm3,
        )
        return report.to_dict()


__all__ = ["NetworkService"]
