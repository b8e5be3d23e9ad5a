from __future__ import annotations

import numpy as np
import pytest

from network_bootstrap.datafiles import (
    load_run_config,
    read_data_matrix,
    read_distance_matrix,
    read_edge_list,
    read_gamma,
    read_replicates,
    write_data_matrix,
    write_distance_matrix,
    write_edge_list,
    write_replicates,
)
from network_bootstrap.errors import DataFileError, NetworkValidationError
from network_bootstrap.graph import build_network, distance_matrix


def test_edge_list_is_one_based(write_edges):
    path = write_edges(["# path", "1 2", "2 3  # middle", "", "3 4"])
    net = read_edge_list(path)
    assert net.node_count == 4
    assert net.edges == ((0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0))


def test_edge_list_node_count_adds_isolated_nodes(write_edges):
    net = read_edge_list(write_edges(["1 2"]), node_count=3)
    assert net.node_count == 3


def test_edge_list_errors(write_edges):
    with pytest.raises(DataFileError):
        read_edge_list(write_edges(["1 2 3 4"]))
    with pytest.raises(NetworkValidationError) as excinfo:
        read_edge_list(write_edges(["2 2"]))
    assert excinfo.value.code == "self_loop"


def test_missing_file(tmp_path):
    with pytest.raises(DataFileError) as excinfo:
        read_edge_list(tmp_path / "absent.txt")
    assert excinfo.value.code == "file_not_found"


def test_edge_list_round_trip(tmp_path):
    net = build_network(4, [(0, 1, 0.25), (2, 3, 1.0 / 3.0)], weight_mode="intensity")
    path = tmp_path / "weighted.txt"
    write_edge_list(net, path)
    assert read_edge_list(path, node_count=4, weight_mode="intensity") == net


def test_distance_matrix_round_trip(tmp_path):
    net = build_network(4, [(0, 1, 0.3), (1, 2, 0.7)], weight_mode="intensity")
    dist = distance_matrix(net)
    path = tmp_path / "dist.txt"
    write_distance_matrix(dist, path)
    restored = read_distance_matrix(path)
    assert np.array_equal(restored.values, dist.values)
    assert np.isinf(restored.values[0, 3])


def test_data_matrix(tmp_path):
    path = tmp_path / "y.csv"
    path.write_text("a,b\n1,2\n3,4.5\n", encoding="utf-8")
    assert np.array_equal(read_data_matrix(path, header=True), [[1.0, 2.0], [3.0, 4.5]])
    with pytest.raises(DataFileError):
        read_data_matrix(path)


def test_data_matrix_single_column_round_trip(tmp_path):
    path = tmp_path / "y.csv"
    values = np.array([0.1, -2.5, 1e-17])
    write_data_matrix(values, path)
    assert np.array_equal(read_data_matrix(path)[:, 0], values)


def test_gamma_file(tmp_path):
    path = tmp_path / "gamma.txt"
    path.write_text("0 1.0\n1 0.5\n2 0.25\n", encoding="utf-8")
    assert read_gamma(path) == {0: 1.0, 1: 0.5, 2: 0.25}
    path.write_text("0 1.0\n0 0.5\n", encoding="utf-8")
    with pytest.raises(DataFileError):
        read_gamma(path)


def test_replicates_round_trip(tmp_path):
    path = tmp_path / "reps.txt"
    values = np.array([0.125, 3.0, 1.0 / 3.0])
    write_replicates(values, path)
    assert np.array_equal(read_replicates(path), values)


def test_run_config_formats(tmp_path):
    toml_path = tmp_path / "run.toml"
    toml_path.write_text('seed = 4\n[network]\nkind = "cycle"\nn = 10\n', encoding="utf-8")
    json_path = tmp_path / "run.json"
    json_path.write_text('{"seed": 4, "network": {"kind": "cycle", "n": 10}}', encoding="utf-8")
    assert load_run_config(toml_path) == load_run_config(json_path)
    with pytest.raises(DataFileError):
        load_run_config(tmp_path / "run.yaml")
