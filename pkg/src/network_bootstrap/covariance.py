"""Network HAC estimation, positive-definite repair, and PSD square roots."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from .errors import CovarianceError, DimensionMismatchError, NonPSDError, ParameterError
from .graph.distances import DistanceMatrix

logger = logging.getLogger(__name__)

KERNEL_KINDS = ("truncated", "bartlett", "parzen")


@dataclass(frozen=True)
class KernelSpec:
    """Even kernel with ``k(0) = 1`` and ``k(z) = 0`` for ``|z| > 1``."""

    kind: str = "bartlett"

    def __post_init__(self) -> None:
        if self.kind not in KERNEL_KINDS:
            raise ParameterError(
                f"Unsupported kernel '{self.kind}'. Valid options: {', '.join(KERNEL_KINDS)}."
            )

    def __call__(self, z) -> np.ndarray:
        z = np.abs(np.asarray(z, dtype=float))
        out = np.zeros_like(z)
        inside = np.isfinite(z) & (z <= 1.0)
        zi = z[inside]
        if self.kind == "truncated":
            out[inside] = 1.0
        elif self.kind == "bartlett":
            out[inside] = 1.0 - zi
        else:
            out[inside] = np.where(
                zi <= 0.5,
                1.0 - 6.0 * zi**2 + 6.0 * zi**3,
                2.0 * (1.0 - zi) ** 3,
            )
        return out


def as_sample_matrix(Y) -> np.ndarray:
    """Coerce data into an ``n x v`` float array (a 1-D input becomes one column)."""
    arr = np.asarray(Y, dtype=float)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise DimensionMismatchError(f"Sample matrix must be n x v, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise CovarianceError("Sample matrix contains non-finite values")
    return arr


def mirror_upper(M: np.ndarray) -> np.ndarray:
    upper = np.triu(M)
    return upper + np.triu(M, k=1).T


def symmetrize(M, tol: float = 1e-10) -> np.ndarray:
    """Average ``M`` with its transpose after checking the asymmetry is below ``tol``."""
    arr = np.asarray(M, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatchError(f"Expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise CovarianceError("Matrix contains non-finite entries")
    scale = max(1.0, float(np.max(np.abs(arr))) if arr.size else 1.0)
    deviation = float(np.max(np.abs(arr - arr.T))) if arr.size else 0.0
    if deviation > tol * scale:
        raise CovarianceError(f"Matrix is not symmetric (max deviation {deviation:.3g})", code="asymmetric")
    return mirror_upper((arr + arr.T) / 2.0)


def weighted_cross_product(Y, weights: np.ndarray) -> np.ndarray:
    """``n^-1 sum_{i,j} w(i, j) (Y_i - Ybar)(Y_j - Ybar)^T`` as a ``v x v`` matrix."""
    data = as_sample_matrix(Y)
    n = data.shape[0]
    weights = np.asarray(weights, dtype=float)
    if weights.shape != (n, n):
        raise DimensionMismatchError(
            f"Weight table has shape {weights.shape}, expected ({n}, {n})"
        )
    centered = data - data.mean(axis=0)
    return mirror_upper(centered.T @ (weights @ centered) / n)


def kernel_weights(dist: DistanceMatrix, kernel: KernelSpec, b_n: float) -> np.ndarray:
    """``k(d(i, j) / (b_n + 1))``; disconnected pairs get weight zero."""
    if b_n < 0:
        raise ParameterError(f"Bandwidth b_n must be >= 0, got {b_n}")
    scaled = np.full(dist.values.shape, np.inf)
    near = dist.values <= b_n + 1
    scaled[near] = dist.values[near] / (b_n + 1)
    return kernel(scaled)


def hac_estimate(Y, dist: DistanceMatrix, kernel: KernelSpec, b_n: float) -> np.ndarray:
    """Network HAC estimate of ``Var(sqrt(n) Ybar)``; not necessarily PSD."""
    data = as_sample_matrix(Y)
    if data.shape[0] != dist.n:
        raise DimensionMismatchError(
            f"Data has {data.shape[0]} rows but the network has {dist.n} nodes"
        )
    return weighted_cross_product(data, kernel_weights(dist, kernel, b_n))


def min_eigenvalue(M, tol: float = 1e-10) -> float:
    arr = symmetrize(M, tol)
    return float(linalg.eigh(arr, eigvals_only=True)[0])


def default_repair_floor(M, scale: float = 1e-3) -> float:
    """Scale-equivariant floor ``scale * trace(M) / v``; falls back to ``scale`` when the trace is not positive."""
    arr = np.asarray(M, dtype=float)
    trace = float(np.trace(arr))
    if trace > 0:
        return scale * trace / arr.shape[0]
    return scale


def psd_repair(M, c_n: float, tol: float = 1e-10) -> np.ndarray:
    """Raise every eigenvalue of ``M`` to at least ``c_n``: ``Q (Lambda v c_n I) Q^T``."""
    if not c_n > 0:
        raise ParameterError(f"Eigenvalue floor c_n must be > 0, got {c_n}")
    arr = symmetrize(M, tol)
    eigvals, eigvecs = linalg.eigh(arr)
    clipped = np.maximum(eigvals, c_n)
    raised = int(np.sum(eigvals < c_n))
    if raised:
        logger.warning("Raised %d eigenvalue(s) to the floor %.3g (min was %.3g)", raised, c_n, eigvals[0])
    return mirror_upper((eigvecs * clipped) @ eigvecs.T)


def sym_psd_sqrt(M, clip_tol: float, tol: float = 1e-10) -> np.ndarray:
    """Symmetric square root ``Q diag(sqrt(max(lambda, 0))) Q^T``.

    Eigenvalues in ``[-clip_tol, 0)`` are rounding noise and are clipped; more
    negative eigenvalues mean the input is not PSD.
    """
    if clip_tol < 0:
        raise ParameterError(f"clip_tol must be >= 0, got {clip_tol}")
    arr = symmetrize(M, tol)
    eigvals, eigvecs = linalg.eigh(arr)
    if eigvals.size and eigvals[0] < -clip_tol:
        raise NonPSDError(
            f"Matrix has eigenvalue {eigvals[0]:.3g} below -{clip_tol:.3g}; input is not PSD"
        )
    roots = np.sqrt(np.clip(eigvals, 0.0, None))
    return mirror_upper((eigvecs * roots) @ eigvecs.T)


__all__ = [
    "KERNEL_KINDS",
    "KernelSpec",
    "as_sample_matrix",
    "mirror_upper",
    "symmetrize",
    "weighted_cross_product",
    "kernel_weights",
    "hac_estimate",
    "min_eigenvalue",
    "default_repair_floor",
    "psd_repair",
    "sym_psd_sqrt",
]
