"""Monte Carlo coverage of bootstrap confidence sets on simulated processes."""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Dict, List

import numpy as np

from ..bootstrap.block import bb_run
from ..bootstrap.dwb import DWBWeights, dwb_run
from ..bootstrap.streams import check_replicate_count, run_chunked, substream
from ..errors import ParameterError
from ..graph.distances import DistanceMatrix, distance_matrix
from ..graph.network import Network
from ..inference.statistics import SCHEMES, confidence_set
from .networks import gen_network
from .processes import DGPSpec, ProcessModel, build_process

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimulatedDataset:
    network: Network
    distances: DistanceMatrix
    model: ProcessModel
    data: np.ndarray


@dataclass(frozen=True)
class CoverageReport:
    scheme: str
    alpha: float
    s_n: float
    B: int
    mc_reps: int
    covered: int
    coverage: float
    standard_error: float
    nominal_standard_error: float
    mean_sigma_star: float
    true_variance: float
    mean_radius: float
    records: List[Dict[str, float]] = field(default_factory=list)

    def to_dict(self, include_records: bool = False) -> dict:
        payload = asdict(self)
        if not include_records:
            payload.pop("records")
        return payload


def realize_network(spec: DGPSpec) -> Network:
    """The network draw is keyed by the bare seed; data and replicates use keyed substreams."""
    spec.validate()
    return gen_network(spec.network_kind, spec.n, rng=substream(spec.seed), p=spec.network_p)


def simulate(spec: DGPSpec, rep: int = 0) -> SimulatedDataset:
    """One realization of the process on the configured network, drawn from stream ``(rep, 0)``."""
    net = realize_network(spec)
    dist = distance_matrix(net)
    model = build_process(spec, net, dist)
    data = model.draw(substream(spec.seed, rep, 0))
    return SimulatedDataset(network=net, distances=dist, model=model, data=data)


def run_coverage(
    spec: DGPSpec,
    scheme: str,
    s_n: float,
    B: int,
    alpha: float,
    mc_reps: int,
    threads: int = 1,
    chunk_size: int = 16,
    keep_records: bool = False,
) -> CoverageReport:
    """Fraction of ``mc_reps`` datasets whose ``1 - alpha`` confidence ball covers the true mean.

    Repetition ``r`` draws its data from stream ``(r, 0)`` and its bootstrap
    replicates from ``(r, 1, b)``; tallies are reduced in repetition order.
    """
    if scheme not in SCHEMES:
        raise ParameterError(f"Unknown scheme '{scheme}'. Valid options: {', '.join(SCHEMES)}.")
    if not (0.0 < alpha < 1.0):
        raise ParameterError(f"alpha must lie in (0, 1), got {alpha}")
    if not s_n > 0:
        raise ParameterError(f"s_n must be > 0, got {s_n}")
    if mc_reps < 1:
        raise ParameterError(f"mc_reps must be >= 1, got {mc_reps}")
    B = check_replicate_count(B)

    net = realize_network(spec)
    dist = distance_matrix(net, threads=threads)
    model = build_process(spec, net, dist)
    weights = DWBWeights.build(dist, s_n) if scheme == "dwb" else None
    truth = np.array([model.true_mean])
    logger.info(
        "Coverage study: %s on %s(n=%d) with %s, s_n=%s, B=%d, reps=%d",
        scheme, spec.network_kind, spec.n, spec.process, s_n, B, mc_reps,
    )

    def one_rep(rep: int) -> Dict[str, float]:
        data = model.draw(substream(spec.seed, rep, 0))
        if scheme == "dwb":
            run = dwb_run(data, dist, s_n, B, seed=spec.seed, stream_key=(rep, 1), weights=weights)
        else:
            run = bb_run(data, dist, s_n, B, seed=spec.seed, stream_key=(rep, 1))
        region = confidence_set(run, alpha)
        return {
            "rep": rep,
            "covered": int(region.contains(truth)),
            "radius": float(region.radius),
            "sigma_star": float(run.sigma_star[0, 0]),
            "sample_mean": float(run.sample_mean[0]),
        }

    def work(start: int, stop: int) -> List[Dict[str, float]]:
        return [one_rep(rep) for rep in range(start, stop)]

    records = [rec for chunk in run_chunked(work, mc_reps, chunk_size=chunk_size, threads=threads) for rec in chunk]
    covered = sum(rec["covered"] for rec in records)
    coverage = covered / mc_reps
    report = CoverageReport(
        scheme=scheme,
        alpha=alpha,
        s_n=s_n,
        B=B,
        mc_reps=mc_reps,
        covered=covered,
        coverage=coverage,
        standard_error=math.sqrt(coverage * (1.0 - coverage) / mc_reps),
        nominal_standard_error=math.sqrt(alpha * (1.0 - alpha) / mc_reps),
        mean_sigma_star=float(np.mean([rec["sigma_star"] for rec in records])),
        true_variance=model.true_variance,
        mean_radius=float(np.mean([rec["radius"] for rec in records])),
        records=records if keep_records else [],
    )
    logger.info("Coverage %.4f (SE %.4f) at nominal %.2f", coverage, report.standard_error, 1.0 - alpha)
    return report


__all__ = ["SimulatedDataset", "CoverageReport", "realize_network", "simulate", "run_coverage"]
