"""Network construction, distances, and denseness measures."""

from .denseness import (
    DensenessReport,
    average_block_size,
    denseness,
    denseness_profile,
    local_denseness,
    local_denseness_profile,
    overlap_weights,
    quadruple_count,
    quadruple_histogram,
)
from .distances import (
    DistanceMatrix,
    boundary_mask,
    boundary_neighborhood,
    distance_matrix,
    neighborhood,
    neighborhoods,
)
from .network import Network, build_network

__all__ = [
    "Network",
    "build_network",
    "DistanceMatrix",
    "distance_matrix",
    "neighborhood",
    "boundary_neighborhood",
    "boundary_mask",
    "neighborhoods",
    "DensenessReport",
    "average_block_size",
    "denseness",
    "denseness_profile",
    "quadruple_histogram",
    "quadruple_count",
    "local_denseness",
    "local_denseness_profile",
    "overlap_weights",
]
