"""Orchestration services used by the CLI."""

from .bootstrap_service import BootstrapService
from .network_service import NetworkService
from .simulation_service import CoverageOptions, SimulationService

__all__ = [
    "BootstrapService",
    "CoverageOptions",
    "NetworkService",
    "SimulationService",
]
