"""Dependent wild bootstrap with overlap-weight covariance."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..covariance import as_sample_matrix, sym_psd_sqrt, weighted_cross_product
from ..errors import DimensionMismatchError, ParameterError
from ..graph.denseness import overlap_weights
from ..graph.distances import DistanceMatrix
from ..inference.smooth import SmoothFunction
from ..inference.statistics import BootstrapRun
from .streams import check_replicate_count, concat_chunks, run_chunked, substream

logger = logging.getLogger(__name__)

WEIGHT_LAWS = ("gaussian",)


@dataclass(frozen=True)
class DWBWeights:
    """Overlap weights ``Omega`` and their cached symmetric square root."""

    s_n: float
    omega: np.ndarray
    omega_sqrt: np.ndarray
    weight_law: str = "gaussian"

    @classmethod
    def build(
        cls,
        dist: DistanceMatrix,
        s_n: float,
        clip_tol: float | None = None,
        clip_scale: float = 1e-10,
    ) -> "DWBWeights":
        """Construct ``Omega`` at radius ``s_n``; ``clip_tol`` defaults to ``clip_scale * n``."""
        if not s_n > 0:
            raise ParameterError(f"s_n must be > 0, got {s_n}")
        omega = overlap_weights(dist, s_n)
        tol = clip_scale * dist.n if clip_tol is None else clip_tol
        return cls(s_n=s_n, omega=omega, omega_sqrt=sym_psd_sqrt(omega, tol))

    def __post_init__(self) -> None:
        if self.weight_law not in WEIGHT_LAWS:
            raise ParameterError(
                f"Unsupported weight law '{self.weight_law}'. Valid options: {', '.join(WEIGHT_LAWS)}."
            )

    @property
    def n(self) -> int:
        return int(self.omega.shape[0])


def dwb_draw_weights(weights: DWBWeights, rng: np.random.Generator) -> np.ndarray:
    """``W = Omega^{1/2} zeta`` with ``zeta`` iid standard normal."""
    return weights.omega_sqrt @ rng.standard_normal(weights.n)


def dwb_pseudo_sample(Y, W) -> np.ndarray:
    """``Y*_i = Ybar + (Y_i - Ybar) W_i``; one scalar weight per node for all coordinates."""
    data = as_sample_matrix(Y)
    w = np.asarray(W, dtype=float)
    if w.shape != (data.shape[0],):
        raise DimensionMismatchError(
            f"Weight vector has shape {w.shape}, expected ({data.shape[0]},)"
        )
    y_bar = data.mean(axis=0)
    return y_bar + (data - y_bar) * w[:, None]


def dwb_variance(Y, omega: np.ndarray) -> np.ndarray:
    """``n^-1 sum_{i,j} omega(i, j) (Y_i - Ybar)(Y_j - Ybar)^T``."""
    return weighted_cross_product(Y, omega)


def dwb_run(
    Y,
    dist: DistanceMatrix,
    s_n: float,
    B: int,
    seed: int,
    phi: SmoothFunction | None = None,
    threads: int = 1,
    chunk_size: int = 256,
    stream_key: Tuple[int, ...] = (),
    weights: DWBWeights | None = None,
    clip_scale: float = 1e-10,
) -> BootstrapRun:
    """Draw ``B`` wild-bootstrap replicates of ``T1*`` (and ``T2*`` when ``phi`` is given).

    ``Ybar* - Ybar = n^-1 zeta^T (Omega^{1/2} E)`` with ``E`` the demeaned data, so each
    replicate costs one vector-matrix product. Pass ``weights`` to reuse a cached
    square root across datasets on the same network.
    """
    B = check_replicate_count(B)
    data = as_sample_matrix(Y)
    n = dist.n
    if data.shape[0] != n:
        raise DimensionMismatchError(f"Data has {data.shape[0]} rows but the network has {n} nodes")
    if weights is None:
        weights = DWBWeights.build(dist, s_n, clip_scale=clip_scale)
    elif weights.n != n or weights.s_n != s_n:
        raise DimensionMismatchError("Cached weights were built for a different network or radius")

    y_bar = data.mean(axis=0)
    projected = weights.omega_sqrt @ (data - y_bar)
    root_n = math.sqrt(n)

    def work(start: int, stop: int) -> np.ndarray:
        zeta = np.empty((stop - start, n))
        for offset, b in enumerate(range(start, stop)):
            zeta[offset] = substream(seed, *stream_key, b).standard_normal(n)
        return zeta @ projected / n

    shifts = concat_chunks(run_chunked(work, B, chunk_size=chunk_size, threads=threads))
    t1 = root_n * np.linalg.norm(shifts, axis=1)
    t2 = None
    if phi is not None:
        t2 = root_n * (phi.evaluate_many(y_bar + shifts) - phi(y_bar))

    sigma_star = dwb_variance(data, weights.omega)
    logger.info("Wild bootstrap finished: B=%d at radius %s", B, s_n)
    return BootstrapRun(
        scheme="dwb",
        replicates_t1=t1,
        replicates_t2=t2,
        sigma_star=sigma_star,
        center=y_bar,
        sample_mean=y_bar,
        n=n,
        v=data.shape[1],
        s_n=s_n,
        B=B,
        seed=seed,
        phi=phi,
        extras={"weight_law": weights.weight_law},
    )


def gaussian_t1_sample(
    sigma: np.ndarray,
    size: int,
    rng: np.random.Generator,
    clip_tol: float = 1e-10,
) -> np.ndarray:
    """Draws of ``||Sigma^{1/2} eta||``, the exact law of ``T1*`` under Gaussian weights."""
    root = sym_psd_sqrt(np.atleast_2d(sigma), clip_tol)
    eta = rng.standard_normal((int(size), root.shape[0]))
    return np.linalg.norm(eta @ root, axis=1)


__all__ = [
    "WEIGHT_LAWS",
    "DWBWeights",
    "dwb_draw_weights",
    "dwb_pseudo_sample",
    "dwb_variance",
    "dwb_run",
    "gaussian_t1_sample",
]
