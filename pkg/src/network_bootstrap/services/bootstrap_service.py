"""Orchestration for bootstrap runs and replicate post-processing."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Sequence

from ..api.schemas import BootstrapSummary
from ..bootstrap.block import bb_run
from ..bootstrap.dwb import dwb_run
from ..bootstrap.streams import check_replicate_count
from ..config import Settings
from ..datafiles import read_data_matrix, read_replicates, write_replicates
from ..errors import ConfigurationError, ParameterError
from ..graph.distances import DistanceMatrix
from ..inference.smooth import parse_smooth_function
from ..inference.statistics import (
    SCHEMES,
    empirical_quantile,
    kolmogorov_distance,
    replicate_moments,
    summarize_run,
)

logger = logging.getLogger(__name__)


def check_seed(seed: int | None) -> int:
    if seed is None:
        raise ConfigurationError("--seed is required for reproducible runs", code="missing_seed")
    if seed < 0:
        raise ParameterError(f"seed must be >= 0, got {seed}")
    return seed


def check_alphas(alphas: Sequence[float]) -> list[float]:
    for alpha in alphas:
        if not (0.0 < alpha < 1.0):
            raise ParameterError(f"alpha must lie in (0, 1), got {alpha}")
    return list(alphas)


class BootstrapService:
    """Runs the block or wild bootstrap and summarizes the replicates."""

    def __init__(self, settings: Settings) -> None:
        self._settings = settings

    def run(
        self,
        scheme: str,
        dist: DistanceMatrix,
        data_path: Path,
        radius: float,
        seed: int | None,
        reps: int | None = None,
        phi: str | None = None,
        alphas: Sequence[float] | None = None,
        header: bool = False,
        threads: int | None = None,
        dump_path: Path | None = None,
    ) -> BootstrapSummary:
        if scheme not in SCHEMES:
            raise ParameterError(f"Unknown scheme '{scheme}'. Valid options: {', '.join(SCHEMES)}.")
        count = check_replicate_count(reps if reps is not None else self._settings.bootstrap.reps)
        seed = check_seed(seed)
        levels = check_alphas(alphas or self._settings.bootstrap.alphas)
        smooth = parse_smooth_function(phi)
        data = read_data_matrix(data_path, header=header)
        runtime = self._settings.runtime

        options = dict(
            seed=seed,
            phi=smooth,
            threads=threads or runtime.threads,
            chunk_size=runtime.chunk_size,
        )
        if scheme == "block":
            run = bb_run(data, dist, radius, count, **options)
        else:
            run = dwb_run(data, dist, radius, count, clip_scale=self._settings.covariance.sqrt_clip_scale, **options)

        if dump_path is not None:
            write_replicates(run.replicates_t1, dump_path)
            logger.info("Wrote %d replicates to %s", run.B, dump_path)

        return BootstrapSummary(
            scheme=run.scheme,
            n=run.n,
            v=run.v,
            s_n=run.s_n,
            reps=run.B,
            seed=run.seed,
            sample_mean=run.sample_mean,
            center=run.center,
            sigma_star=run.sigma_star,
            summary=summarize_run(run, levels),
            phi=None if smooth is None else smooth.name,
            phi_at_mean=run.phi_at_mean,
            delta_method_variance=run.delta_method_variance,
            extras=run.extras,
        )

    def quantiles(
        self,
        replicates_path: Path,
        alphas: Sequence[float] | None = None,
        compare_path: Path | None = None,
    ) -> Dict[str, object]:
        values = read_replicates(replicates_path)
        levels = check_alphas(alphas or self._settings.bootstrap.alphas)
        payload: Dict[str, object] = {
            "count": int(values.size),
            "quantiles": {f"{alpha:g}": empirical_quantile(values, alpha) for alpha in levels},
            "moments": replicate_moments(values),
        }
        if compare_path is not None:
            payload["kolmogorov_distance"] = kolmogorov_distance(values, read_replicates(compare_path))
        return payload


__all__ = ["BootstrapService", "check_seed", "check_alphas"]
