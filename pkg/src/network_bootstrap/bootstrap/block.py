"""Neighborhood-block bootstrap with quasi-average statistics."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..covariance import as_sample_matrix, mirror_upper
from ..errors import BlockSizeError, DimensionMismatchError, ParameterError
from ..graph.distances import DistanceMatrix
from ..inference.smooth import SmoothFunction
from ..inference.statistics import BootstrapRun
from .streams import check_replicate_count, concat_chunks, run_chunked, substream

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockSet:
    """The ``n`` overlapping blocks ``B_k = N(k; s_n+1)`` and their sums."""

    s_n: float
    blocks: Tuple[np.ndarray, ...]
    block_sizes: np.ndarray
    block_sums: np.ndarray
    K_n: int
    avg_block_size: float

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def variance_factor(self) -> float:
        """``K_n delta_n(s_n) / n``; one exactly when ``n / delta_n(s_n)`` is an integer."""
        return self.K_n * self.avg_block_size / self.n

    def resampling_variance(self) -> np.ndarray:
        """Exact ``Var(sqrt(n) Y~*)`` under the resampling law."""
        return self.variance_factor * bb_variance(self)


@dataclass(frozen=True)
class BBReplicate:
    chosen_blocks: np.ndarray
    quasi_average: np.ndarray
    pseudo_sample_size: int


def make_blocks(dist: DistanceMatrix, Y, s_n: float) -> BlockSet:
    if not s_n > 0:
        raise ParameterError(f"Block radius s_n must be > 0, got {s_n}")
    data = as_sample_matrix(Y)
    n = dist.n
    if data.shape[0] != n:
        raise DimensionMismatchError(f"Data has {data.shape[0]} rows but the network has {n} nodes")

    members = dist.within(s_n + 1)
    sizes = members.sum(axis=1)
    total = int(sizes.sum())
    # floor(n / delta) computed on integers: delta = total / n.
    K_n = (n * n) // total
    if K_n < 1:
        raise BlockSizeError(
            f"Average block size {total / n:.4g} exceeds n={n}; choose a smaller radius"
        )
    block_sums = members.astype(float) @ data
    logger.info("Built %d blocks at radius %s: delta=%.6g, K_n=%d", n, s_n, total / n, K_n)
    return BlockSet(
        s_n=s_n,
        blocks=tuple(np.flatnonzero(row) for row in members),
        block_sizes=sizes,
        block_sums=block_sums,
        K_n=K_n,
        avg_block_size=total / n,
    )


def bb_resample(bs: BlockSet, rng: np.random.Generator) -> BBReplicate:
    chosen = rng.integers(0, bs.n, size=bs.K_n)
    return BBReplicate(
        chosen_blocks=chosen,
        quasi_average=bs.block_sums[chosen].sum(axis=0) / bs.n,
        pseudo_sample_size=int(bs.block_sizes[chosen].sum()),
    )


def bb_center(bs: BlockSet) -> np.ndarray:
    """``mu* = K_n Zbar / n``, the resampling mean of the quasi-average."""
    return bs.K_n * bs.block_sums.mean(axis=0) / bs.n


def bb_variance(bs: BlockSet) -> np.ndarray:
    """``delta_n(s_n)^-1 (n^-1 sum_i Z_i Z_i^T - Zbar Zbar^T)``."""
    Z = bs.block_sums
    z_bar = Z.mean(axis=0)
    second = Z.T @ Z / bs.n
    return mirror_upper((second - np.outer(z_bar, z_bar)) / bs.avg_block_size)


def bb_run(
    Y,
    dist: DistanceMatrix,
    s_n: float,
    B: int,
    seed: int,
    phi: SmoothFunction | None = None,
    threads: int = 1,
    chunk_size: int = 256,
    stream_key: Tuple[int, ...] = (),
) -> BootstrapRun:
    """Draw ``B`` block-bootstrap replicates of ``T1*`` (and ``T2*`` when ``phi`` is given).

    Replicate ``b`` draws from the substream keyed by ``(*stream_key, b)``.
    """
    B = check_replicate_count(B)
    data = as_sample_matrix(Y)
    bs = make_blocks(dist, data, s_n)
    n = bs.n
    mu_star = bb_center(bs)
    phi_center = None if phi is None else phi(mu_star)
    root_n = math.sqrt(n)

    def work(start: int, stop: int):
        averages = np.empty((stop - start, data.shape[1]))
        lengths = np.empty(stop - start)
        for offset, b in enumerate(range(start, stop)):
            replicate = bb_resample(bs, substream(seed, *stream_key, b))
            averages[offset] = replicate.quasi_average
            lengths[offset] = replicate.pseudo_sample_size
        return averages, lengths

    parts = run_chunked(work, B, chunk_size=chunk_size, threads=threads)
    averages = concat_chunks([part[0] for part in parts])
    lengths = concat_chunks([part[1] for part in parts])

    t1 = root_n * np.linalg.norm(averages - mu_star, axis=1)
    t2 = None
    if phi is not None:
        t2 = root_n * (phi.evaluate_many(averages) - phi_center)

    sigma_star = bb_variance(bs)
    logger.info("Block bootstrap finished: B=%d, K_n=%d, mean L_n/n=%.4f", B, bs.K_n, lengths.mean() / n)
    return BootstrapRun(
        scheme="block",
        replicates_t1=t1,
        replicates_t2=t2,
        sigma_star=sigma_star,
        center=mu_star,
        sample_mean=data.mean(axis=0),
        n=n,
        v=data.shape[1],
        s_n=s_n,
        B=B,
        seed=seed,
        phi=phi,
        extras={
            "K_n": bs.K_n,
            "avg_block_size": bs.avg_block_size,
            "variance_factor": bs.variance_factor,
            "resampling_variance": bs.resampling_variance(),
            "mean_pseudo_sample_ratio": float(lengths.mean() / n),
        },
    )


__all__ = [
    "BlockSet",
    "BBReplicate",
    "make_blocks",
    "bb_resample",
    "bb_center",
    "bb_variance",
    "bb_run",
]
