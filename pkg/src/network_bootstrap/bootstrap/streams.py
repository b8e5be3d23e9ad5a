"""Seeded random substreams and order-preserving chunked execution."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, Tuple, TypeVar

import numpy as np

from ..errors import ParameterError

logger = logging.getLogger(__name__)

T = TypeVar("T")


def substream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator keyed by ``(seed, key)``; unaffected by scheduling."""
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key)))


def check_replicate_count(B: int) -> int:
    if isinstance(B, bool) or int(B) != B or B < 1:
        raise ParameterError(f"reps must be >= 1, got {B}")
    return int(B)


def chunk_ranges(total: int, chunk_size: int) -> List[Tuple[int, int]]:
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def run_chunked(
    work: Callable[[int, int], T],
    total: int,
    chunk_size: int = 256,
    threads: int = 1,
) -> List[T]:
    """Apply ``work(start, stop)`` to fixed-size index ranges; results are in range order.

    Chunk boundaries depend only on ``total`` and ``chunk_size``, so the output is
    identical for any number of threads.
    """
    ranges = chunk_ranges(total, chunk_size)
    if threads <= 1 or len(ranges) <= 1:
        return [work(start, stop) for start, stop in ranges]

    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = [executor.submit(work, start, stop) for start, stop in ranges]
        results: List[T] = []
        for idx, future in enumerate(futures, start=1):
            results.append(future.result())
            logger.debug("Chunk %d/%d complete", idx, len(futures))
    return results


def concat_chunks(parts: Sequence[np.ndarray]) -> np.ndarray:
    if not parts:
        return np.zeros(0)
    return np.concatenate(parts, axis=0)


__all__ = ["substream", "check_replicate_count", "chunk_ranges", "run_chunked", "concat_chunks"]
