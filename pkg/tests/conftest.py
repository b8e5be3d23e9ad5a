from __future__ import annotations

import numpy as np
import pytest

from network_bootstrap.graph import build_network, distance_matrix
from network_bootstrap.simulation import gen_network


@pytest.fixture
def path5():
    return build_network(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def path5_dist(path5):
    return distance_matrix(path5)


@pytest.fixture
def cycle6_dist():
    return distance_matrix(gen_network("cycle", 6))


@pytest.fixture
def star5_dist():
    return distance_matrix(gen_network("star", 5))


@pytest.fixture
def edgeless4_dist():
    return distance_matrix(gen_network("edgeless", 4))


@pytest.fixture
def path5_data():
    return np.array([1.0, 0.0, 2.0, 0.0, 1.0])


@pytest.fixture
def write_edges(tmp_path):
    """Write 1-based edge lines to a file and return its path."""

    def _write(lines, name="edges.txt"):
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return _write
