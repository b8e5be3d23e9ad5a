"""Test statistics, confidence sets and condition diagnostics."""

from .diagnostics import (
    TAIL_POLICIES,
    DiagnosticsReport,
    dependence_transform_rate,
    diagnostics,
    gamma_series,
)
from .smooth import IDENTITY, L2NORM, SmoothFunction, parse_smooth_function
from .statistics import (
    BootstrapRun,
    ConfidenceSet,
    confidence_set,
    empirical_quantile,
    kolmogorov_distance,
    summarize_run,
    test_statistics,
)

__all__ = [
    "BootstrapRun",
    "ConfidenceSet",
    "test_statistics",
    "empirical_quantile",
    "confidence_set",
    "kolmogorov_distance",
    "summarize_run",
    "SmoothFunction",
    "IDENTITY",
    "L2NORM",
    "parse_smooth_function",
    "TAIL_POLICIES",
    "DiagnosticsReport",
    "diagnostics",
    "gamma_series",
    "dependence_transform_rate",
]
