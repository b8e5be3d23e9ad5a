"""JSON payload schemas."""

from .schemas import BootstrapSummary, DistanceSummary, HacSummary, SimulationSummary

__all__ = [
    "BootstrapSummary",
    "DistanceSummary",
    "HacSummary",
    "SimulationSummary",
]
