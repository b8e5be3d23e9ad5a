"""Smooth functions of the mean used by the second test statistic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from ..errors import ParameterError


@dataclass(frozen=True)
class SmoothFunction:
    """Continuously differentiable ``phi: R^v -> R`` with its gradient.

    ``value`` and ``gradient`` accept arrays shaped ``(..., v)``.
    """

    name: str
    value: Callable[[np.ndarray], np.ndarray]
    gradient: Callable[[np.ndarray], np.ndarray]

    def __call__(self, x) -> float:
        return float(self.value(np.asarray(x, dtype=float)))

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        return np.asarray(self.value(np.asarray(points, dtype=float)), dtype=float)

    def grad(self, x) -> np.ndarray:
        return np.asarray(self.gradient(np.asarray(x, dtype=float)), dtype=float)


def _identity_value(x: np.ndarray) -> np.ndarray:
    return x[..., 0]


def _identity_gradient(x: np.ndarray) -> np.ndarray:
    g = np.zeros_like(x)
    g[..., 0] = 1.0
    return g


def _l2_value(x: np.ndarray) -> np.ndarray:
    return np.linalg.norm(x, axis=-1)


def _l2_gradient(x: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(x, axis=-1, keepdims=True)
    # The norm is not differentiable at zero; use the zero subgradient there.
    return np.divide(x, norm, out=np.zeros_like(x), where=norm > 0)


def _polynomial(coefficients: Tuple[float, ...]) -> SmoothFunction:
    coeffs = np.asarray(coefficients, dtype=float)
    derivative = P.polyder(coeffs) if coeffs.size > 1 else np.zeros(1)

    def value(x: np.ndarray) -> np.ndarray:
        return P.polyval(x[..., 0], coeffs)

    def gradient(x: np.ndarray) -> np.ndarray:
        g = np.zeros_like(x)
        g[..., 0] = P.polyval(x[..., 0], derivative)
        return g

    label = ",".join(f"{c:g}" for c in coefficients)
    return SmoothFunction(name=f"poly:{label}", value=value, gradient=gradient)


IDENTITY = SmoothFunction(name="identity", value=_identity_value, gradient=_identity_gradient)
L2NORM = SmoothFunction(name="l2norm", value=_l2_value, gradient=_l2_gradient)


def parse_smooth_function(spec: str | None) -> SmoothFunction | None:
    """Parse ``identity``, ``l2norm`` or ``poly:c0,c1,...`` (polynomial in the first coordinate)."""
    if spec is None or spec == "":
        return None
    key = spec.strip()
    if key == "identity":
        return IDENTITY
    if key == "l2norm":
        return L2NORM
    if key.startswith("poly:"):
        raw = [item.strip() for item in key[len("poly:"):].split(",") if item.strip()]
        try:
            coefficients = tuple(float(item) for item in raw)
        except ValueError as exc:
            raise ParameterError(f"Invalid polynomial coefficients in '{spec}'") from exc
        if not coefficients:
            raise ParameterError(f"Polynomial '{spec}' has no coefficients")
        return _polynomial(coefficients)
    raise ParameterError(f"Unknown phi '{spec}'. Valid options: identity, l2norm, poly:c0,c1,...")


__all__ = ["SmoothFunction", "IDENTITY", "L2NORM", "parse_smooth_function"]
