from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from network_bootstrap.errors import NetworkValidationError, ParameterError
from network_bootstrap.graph import (
    average_block_size,
    boundary_neighborhood,
    build_network,
    denseness,
    denseness_profile,
    distance_matrix,
    local_denseness,
    neighborhood,
    overlap_weights,
    quadruple_count,
    quadruple_histogram,
)
from network_bootstrap.simulation import gen_network


class TestBuildNetwork:
    def test_single_edge(self):
        net = build_network(2, [(0, 1, 1.0)])
        assert net.edge_count == 1
        assert net.edges == ((0, 1, 1.0),)

    def test_edges_are_canonical(self):
        net = build_network(3, [(2, 1), (1, 0)])
        assert net.edges == ((0, 1, 1.0), (1, 2, 1.0))

    @pytest.mark.parametrize(
        "edges, mode, code",
        [
            ([(0, 0, 1.0)], "unit", "self_loop"),
            ([(0, 1), (1, 0)], "unit", "duplicate_edge"),
            ([(0, 3)], "unit", "index_out_of_range"),
            ([(0, 1, 0.5)], "unit", "invalid_weight"),
            ([(0, 1, 1.5)], "intensity", "invalid_weight"),
            ([(0, 1, 0.0)], "intensity", "invalid_weight"),
        ],
    )
    def test_rejects_invalid_edges(self, edges, mode, code):
        with pytest.raises(NetworkValidationError) as excinfo:
            build_network(3, edges, weight_mode=mode)
        assert excinfo.value.code == code

    def test_intensity_edge_length(self):
        net = build_network(2, [(0, 1, 0.5)], weight_mode="intensity")
        assert net.edge_lengths() == [(0, 1, 2.0)]


class TestDistances:
    def test_path_hop_count(self, path5_dist):
        assert path5_dist.values[0, 4] == 4
        assert path5_dist.diameter == 4

    def test_disconnected_is_infinite(self):
        dist = distance_matrix(build_network(3, [(0, 1)]))
        assert math.isinf(dist.values[0, 2])
        assert dist.diameter == 1

    def test_reciprocal_weights(self):
        net = build_network(3, [(0, 1, 0.5), (1, 2, 0.5)], weight_mode="intensity")
        assert distance_matrix(net).values[0, 2] == 4.0

    def test_threads_do_not_change_result(self):
        net = gen_network("lattice2d", 30)
        assert np.array_equal(distance_matrix(net).values, distance_matrix(net, threads=4).values)

    def test_distance_floor(self):
        dist = distance_matrix(gen_network("erdos_renyi", 30, rng=np.random.default_rng(3), p=0.2))
        off = dist.values[~np.eye(30, dtype=bool)]
        assert off.min() >= 1
        assert np.array_equal(dist.values, dist.values.T)


class TestNeighborhoods:
    def test_open_neighborhood(self, path5_dist):
        assert neighborhood(path5_dist, 1, 2) == {0, 1, 2}
        assert neighborhood(path5_dist, 3, 1) == {3}

    def test_star_center_reaches_everyone(self, star5_dist):
        assert neighborhood(star5_dist, 0, 2) == {0, 1, 2, 3, 4}

    def test_boundary(self, path5_dist, edgeless4_dist):
        assert boundary_neighborhood(path5_dist, 2, 1) == {1, 3}
        assert boundary_neighborhood(path5_dist, 2, 0) == {2}
        assert boundary_neighborhood(edgeless4_dist, 0, 1) == frozenset()

    def test_partition_identity(self, cycle6_dist):
        for i in range(6):
            for s in range(4):
                inner = neighborhood(cycle6_dist, i, s)
                ring = boundary_neighborhood(cycle6_dist, i, s)
                assert not inner & ring
                assert inner | ring == neighborhood(cycle6_dist, i, s + 1)

    def test_out_of_range_node(self, path5_dist):
        with pytest.raises(ParameterError):
            neighborhood(path5_dist, 5, 1)


class TestDenseness:
    def test_path_values(self, path5_dist):
        report = denseness(path5_dist, 1, 1)
        assert report.delta == pytest.approx(2.6)
        assert report.delta_boundary == pytest.approx(1.6)
        assert report.d_max == 3
        assert report.delta_central == pytest.approx(0.48)

    def test_star_limits(self):
        dist = distance_matrix(gen_network("star", 1000))
        first = denseness(dist, 1, 1)
        second = denseness(dist, 1, 2)
        assert first.delta == pytest.approx(2.998)
        assert 3.9 <= first.delta_central**2 <= 4.0
        assert second.delta_central >= first.delta_central**2

    def test_edgeless(self, edgeless4_dist):
        report = denseness(edgeless4_dist, 2, 3)
        assert (report.delta, report.delta_boundary, report.d_max, report.delta_central) == (1, 0, 1, 0)

    def test_cycle_is_homogeneous(self):
        dist = distance_matrix(gen_network("cycle", 12))
        for report in denseness_profile(dist, 2, 5):
            assert report.delta_central == 0

    def test_average_block_size_nondecreasing(self):
        dist = distance_matrix(gen_network("erdos_renyi", 40, rng=np.random.default_rng(11), p=0.08))
        sizes = [average_block_size(dist, s) for s in range(6)]
        assert sizes == sorted(sizes)
        assert sizes[1] == pytest.approx(denseness(dist, 1, 1).delta)

    def test_power_mean(self):
        dist = distance_matrix(gen_network("erdos_renyi", 30, rng=np.random.default_rng(5), p=0.15))
        for s in range(3):
            assert denseness(dist, s, 1).delta_central <= math.sqrt(denseness(dist, s, 2).delta_central) + 1e-12

    def test_rejects_small_moment(self, path5_dist):
        with pytest.raises(ParameterError):
            denseness(path5_dist, 1, 0.5)


def _brute_force_quadruples(values: np.ndarray, s: int, m: float) -> int:
    n = values.shape[0]
    count = 0
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if math.isfinite(m) and (values[i, j] >= m + 1 or values[k, l] >= m + 1):
            continue
        d = min(values[i, k], values[i, l], values[j, k], values[j, l])
        if math.isfinite(d) and math.floor(d) == s:
            count += 1
    return count


class TestQuadruples:
    def test_edgeless(self, edgeless4_dist):
        assert quadruple_count(edgeless4_dist, 0, 2) == 4
        assert quadruple_count(edgeless4_dist, 1, 2) == 0

    @pytest.mark.parametrize("s", [0, 1, 2])
    def test_cycle_matches_enumeration(self, cycle6_dist, s):
        assert quadruple_count(cycle6_dist, s, 1) == _brute_force_quadruples(cycle6_dist.values, s, 1)

    def test_histogram_is_consistent(self, path5_dist):
        histogram = quadruple_histogram(path5_dist, 1)
        for s, count in histogram.items():
            assert count == _brute_force_quadruples(path5_dist.values, s, 1)

    def test_unconstrained_pairs(self, path5_dist):
        total = sum(quadruple_histogram(path5_dist, math.inf).values())
        assert total == 5**4

    @pytest.mark.parametrize("m", [0, 1, math.inf])
    def test_weighted_disconnected_matches_enumeration(self, m):
        net = build_network(7, [(0, 1, 0.4), (1, 2, 0.7), (2, 3, 0.25), (4, 5, 1.0)], weight_mode="intensity")
        dist = distance_matrix(net)
        expected = {s: _brute_force_quadruples(dist.values, s, m) for s in range(12)}
        assert quadruple_histogram(dist, m) == {s: c for s, c in expected.items() if c}

    @pytest.mark.parametrize("kind", ["star", "lattice2d", "line"])
    def test_small_graphs_match_enumeration(self, kind):
        dist = distance_matrix(gen_network(kind, 7))
        for m in (1, 3):
            histogram = quadruple_histogram(dist, m)
            for s in range(7):
                assert histogram.get(s, 0) == _brute_force_quadruples(dist.values, s, m)

    def test_star_closed_form(self):
        # Every pair is admissible at m = 3; separated leaf pairs sit at distance 2.
        n = 60
        leaves = n - 1
        disjoint = n * (n - 1) ** 2 + n * (n - 1) * (n - 2) ** 2
        far = leaves * (leaves - 1) ** 2 + leaves * (leaves - 1) * (leaves - 2) ** 2
        histogram = quadruple_histogram(distance_matrix(gen_network("star", n)), 3)
        assert histogram == {0: n**4 - disjoint, 1: disjoint - far, 2: far}


class TestLocalDenseness:
    def test_zero_radius_is_one(self, path5_dist):
        assert local_denseness(path5_dist, 0, 3) == (1.0, 1.0)

    def test_edgeless(self, edgeless4_dist):
        assert local_denseness(edgeless4_dist, 1, 1) == (0.0, 0.0)

    def test_path_values(self, path5_dist):
        # Interior windows {i-1, i, i+1}: 4 boundary pairs, 16 quadruples at distance 1.
        delta_loc, h_loc = local_denseness(path5_dist, 1, 2)
        assert delta_loc == pytest.approx(4 / 3)
        assert h_loc == pytest.approx(16 / 27)
        assert h_loc <= delta_loc


class TestOverlapWeights:
    def test_path_values(self, path5_dist):
        omega = overlap_weights(path5_dist, 1)
        assert omega[1, 2] == pytest.approx(10 / 13)
        assert omega[0, 4] == 0

    def test_single_edge(self):
        omega = overlap_weights(distance_matrix(build_network(2, [(0, 1)])), 1)
        assert np.allclose(omega, 1.0)

    def test_edgeless_is_identity(self, edgeless4_dist):
        assert np.array_equal(overlap_weights(edgeless4_dist, 1), np.eye(4))

    def test_positive_semidefinite(self):
        rng = np.random.default_rng(2024)
        for trial in range(20):
            kind = ("erdos_renyi", "lattice2d", "star", "cycle")[trial % 4]
            n = int(rng.integers(5, 40))
            net = gen_network(kind, n, rng=rng, p=0.15)
            dist = distance_matrix(net)
            for s_n in (1, 2, 3):
                omega = overlap_weights(dist, s_n)
                assert np.allclose(omega, omega.T)
                assert np.linalg.eigvalsh(omega).min() >= -1e-10 * n
                assert np.all(omega[dist.values >= 2 * (s_n + 1)] == 0)
