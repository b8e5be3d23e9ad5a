"""Synthetic networks, dependent processes and coverage studies."""

from .coverage import CoverageReport, SimulatedDataset, realize_network, run_coverage, simulate
from .networks import NETWORK_KINDS, gen_network
from .processes import (
    PROCESS_KINDS,
    DGPSpec,
    ProcessModel,
    build_process,
    cliff_ord_model,
    gen_cliff_ord,
    gen_ma_neighborhood,
    neighborhood_ma_model,
    spectral_radius,
    true_variance,
)

__all__ = [
    "NETWORK_KINDS",
    "PROCESS_KINDS",
    "DGPSpec",
    "ProcessModel",
    "gen_network",
    "spectral_radius",
    "build_process",
    "cliff_ord_model",
    "neighborhood_ma_model",
    "gen_cliff_ord",
    "gen_ma_neighborhood",
    "true_variance",
    "SimulatedDataset",
    "CoverageReport",
    "realize_network",
    "simulate",
    "run_coverage",
]
