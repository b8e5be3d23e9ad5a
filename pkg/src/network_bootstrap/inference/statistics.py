"""Test statistics, bootstrap quantiles, and confidence sets."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

import numpy as np

from ..errors import DimensionMismatchError, ParameterError
from .smooth import SmoothFunction

SCHEMES = ("block", "dwb")


@dataclass
class BootstrapRun:
    """Replicates of the bootstrap statistics for one dataset and network.

    ``center`` is the bootstrap centering (``mu*`` for the block scheme, the
    sample mean for the wild scheme); ``sample_mean`` is always ``Ybar``.
    """

    scheme: str
    replicates_t1: np.ndarray
    sigma_star: np.ndarray
    center: np.ndarray
    sample_mean: np.ndarray
    n: int
    v: int
    s_n: float
    B: int
    seed: int
    replicates_t2: np.ndarray | None = None
    phi: SmoothFunction | None = None
    extras: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.scheme not in SCHEMES:
            raise ParameterError(f"Unknown scheme '{self.scheme}'")
        self.replicates_t1 = np.asarray(self.replicates_t1, dtype=float)
        if self.replicates_t1.shape != (self.B,):
            raise DimensionMismatchError(
                f"Expected {self.B} T1 replicates, got shape {self.replicates_t1.shape}"
            )
        if not np.all(np.isfinite(self.replicates_t1)):
            raise ParameterError("T1 replicates must be finite")
        if self.replicates_t2 is not None:
            self.replicates_t2 = np.asarray(self.replicates_t2, dtype=float)
            if self.replicates_t2.shape != (self.B,) or not np.all(np.isfinite(self.replicates_t2)):
                raise ParameterError("T2 replicates must be B finite values")

    @property
    def phi_at_mean(self) -> float | None:
        return None if self.phi is None else self.phi(self.sample_mean)

    @property
    def delta_method_variance(self) -> float | None:
        """``grad phi(center)^T Sigma* grad phi(center)``."""
        if self.phi is None:
            return None
        grad = self.phi.grad(self.center)
        return float(grad @ self.sigma_star @ grad)


def test_statistics(
    y_bar,
    mu,
    n: int,
    phi: SmoothFunction | None = None,
) -> Tuple[float, float | None]:
    """``T1 = sqrt(n) ||Ybar - mu||`` and ``T2 = sqrt(n)(phi(Ybar) - phi(mu))``."""
    y_bar = np.atleast_1d(np.asarray(y_bar, dtype=float))
    mu = np.atleast_1d(np.asarray(mu, dtype=float))
    if y_bar.shape != mu.shape:
        raise DimensionMismatchError(f"Mean shapes differ: {y_bar.shape} vs {mu.shape}")
    root_n = math.sqrt(n)
    t1 = root_n * float(np.linalg.norm(y_bar - mu))
    t2 = None if phi is None else root_n * (phi(y_bar) - phi(mu))
    return t1, t2


# Keep pytest from collecting the public ``test_statistics`` helper.
test_statistics.__test__ = False


def _order_statistic_rank(alpha: float, count: int) -> int:
    # Rounding removes binary noise such as 0.9 * 100 = 90.00000000000001.
    return max(1, math.ceil(round(alpha * count, 9)))


def empirical_quantile(values: Sequence[float], alpha: float) -> float:
    """Generalized inverse ``inf{x : F(x) >= alpha}``: the ``ceil(alpha B)``-th order statistic."""
    data = np.sort(np.asarray(values, dtype=float))
    if data.size == 0:
        raise ParameterError("Cannot take a quantile of an empty replicate set", code="empty_input")
    if not (0.0 < alpha < 1.0):
        raise ParameterError(f"alpha must lie in (0, 1), got {alpha}")
    return float(data[_order_statistic_rank(alpha, data.size) - 1])


@dataclass(frozen=True)
class ConfidenceSet:
    """Closed ball ``{mu : ||mu - center|| <= radius}`` or an interval for ``phi(mu)``."""

    kind: str
    level: float
    center: Tuple[float, ...] = ()
    radius: float | None = None
    lower: float | None = None
    upper: float | None = None

    def contains(self, point) -> bool:
        if self.kind == "ball":
            diff = np.atleast_1d(np.asarray(point, dtype=float)) - np.asarray(self.center)
            return bool(np.linalg.norm(diff) <= self.radius)
        value = float(point)
        return bool(self.lower <= value <= self.upper)

    def to_dict(self) -> dict:
        payload = {"kind": self.kind, "level": self.level}
        if self.kind == "ball":
            payload.update({"center": list(self.center), "radius": self.radius})
        else:
            payload.update({"lower": self.lower, "upper": self.upper})
        return payload


def confidence_set(run: BootstrapRun, alpha: float, statistic: str = "t1") -> ConfidenceSet:
    """Invert the bootstrap test at level ``1 - alpha``."""
    root_n = math.sqrt(run.n)
    if statistic == "t1":
        radius = empirical_quantile(run.replicates_t1, 1.0 - alpha) / root_n
        return ConfidenceSet(
            kind="ball",
            level=1.0 - alpha,
            center=tuple(float(x) for x in run.sample_mean),
            radius=radius,
        )
    if statistic == "t2":
        if run.replicates_t2 is None or run.phi is None:
            raise ParameterError("T2 interval requested but the run has no T2 replicates", code="missing_t2")
        upper_q = empirical_quantile(run.replicates_t2, 1.0 - alpha / 2.0)
        lower_q = empirical_quantile(run.replicates_t2, alpha / 2.0)
        estimate = run.phi_at_mean
        return ConfidenceSet(
            kind="interval",
            level=1.0 - alpha,
            lower=estimate - upper_q / root_n,
            upper=estimate - lower_q / root_n,
        )
    raise ParameterError(f"Unknown statistic '{statistic}'. Valid options: t1, t2.")


def kolmogorov_distance(sample_a: Sequence[float], sample_b: Sequence[float]) -> float:
    """``sup_x |F_a(x) - F_b(x)|`` between two empirical distribution functions."""
    a = np.sort(np.asarray(sample_a, dtype=float))
    b = np.sort(np.asarray(sample_b, dtype=float))
    if a.size == 0 or b.size == 0:
        raise ParameterError("Both samples must be nonempty", code="empty_input")
    pooled = np.concatenate([a, b])
    cdf_a = np.searchsorted(a, pooled, side="right") / a.size
    cdf_b = np.searchsorted(b, pooled, side="right") / b.size
    return float(np.max(np.abs(cdf_a - cdf_b)))


def _alpha_key(alpha: float) -> str:
    return f"{alpha:g}"


def replicate_moments(values: Sequence[float]) -> Dict[str, float]:
    data = np.asarray(values, dtype=float)
    return {
        "mean": float(data.mean()),
        "std": float(data.std(ddof=1)) if data.size > 1 else 0.0,
        "min": float(data.min()),
        "max": float(data.max()),
    }


def summarize_run(run: BootstrapRun, alphas: Sequence[float]) -> Dict[str, object]:
    """Quantiles, replicate moments and confidence sets at each requested ``alpha``."""
    summary: Dict[str, object] = {
        "quantiles_t1": {
            _alpha_key(alpha): empirical_quantile(run.replicates_t1, 1.0 - alpha) for alpha in alphas
        },
        "moments_t1": replicate_moments(run.replicates_t1),
        "confidence_sets": {
            _alpha_key(alpha): confidence_set(run, alpha, "t1").to_dict() for alpha in alphas
        },
    }
    if run.replicates_t2 is not None and run.phi is not None:
        summary["moments_t2"] = replicate_moments(run.replicates_t2)
        summary["intervals_t2"] = {
            _alpha_key(alpha): confidence_set(run, alpha, "t2").to_dict() for alpha in alphas
        }
    return summary


__all__ = [
    "SCHEMES",
    "summarize_run",
    "BootstrapRun",
    "ConfidenceSet",
    "test_statistics",
    "empirical_quantile",
    "confidence_set",
    "kolmogorov_distance",
    "replicate_moments",
]
