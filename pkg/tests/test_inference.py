from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from network_bootstrap.bootstrap import dwb_run
from network_bootstrap.errors import GammaCoverageError, ParameterError
from network_bootstrap.graph import distance_matrix
from network_bootstrap.inference import (
    IDENTITY,
    L2NORM,
    BootstrapRun,
    confidence_set,
    dependence_transform_rate,
    diagnostics,
    empirical_quantile,
    gamma_series,
    kolmogorov_distance,
    parse_smooth_function,
    summarize_run,
    test_statistics,
)
from network_bootstrap.simulation import gen_network


_ABS_THIRD_GAUSS = 2.0 * math.sqrt(2.0 / math.pi)


def _naive_conditions(values, s_n, gamma, r=4.0, p=4.0):
    """bb1_b, bb2_b, bb4 and the wild third-moment sum from plain loops."""
    n = len(values)
    D = values.tolist()
    s_max = int(math.floor(max(x for row in D for x in row if math.isfinite(x))))
    gam_r = [g ** (1 - 2 / r) for g in gamma[: s_max + 1]]
    gam_p = [g ** (1 - 2 / p) for g in gamma[: s_max + 1]]

    blocks = [[j for j in range(n) if D[i][j] < s_n + 1] for i in range(n)]
    delta = sum(len(b) for b in blocks) / n
    omega_diag = [len(blocks[j]) / delta for j in range(n)]
    bb1_b = max(abs(sum(omega_diag[j] - 1 for j in blocks[i])) for i in range(n)) / math.sqrt(n)

    reach = 2 * s_n + 2
    counts = [0] * (s_max + 1)
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if D[i][j] < reach and D[k][l] < reach:
            d = min(D[i][k], D[i][l], D[j][k], D[j][l])
            if math.isfinite(d):
                counts[int(d)] += 1
    bb2_b = sum(c * g for c, g in zip(counts, gam_r)) / n**2

    delta_loc = [1.0] + [0.0] * s_max
    h_loc = [1.0] + [0.0] * s_max
    for i in range(n):
        window = [a for a in range(n) if D[i][a] < s_n]
        size = len(window)
        for s in range(1, s_max + 1):
            ring = sum(1 for a in window for b in window if s <= D[a][b] < s + 1)
            delta_loc[s] = max(delta_loc[s], ring / size)
            quads = 0
            for a, b, c, d in itertools.product(window, repeat=4):
                gap = min(D[a][c], D[a][d], D[b][c], D[b][d])
                if s <= gap < s + 1:
                    quads += 1
            h_loc[s] = max(h_loc[s], quads / size**3)
    bb4 = (delta / n) ** (1 / 3) * sum(x * g for x, g in zip(delta_loc, gam_p)) + (
        delta**2.5 / n
    ) ** (2 / 3) * sum(x * g for x, g in zip(h_loc, gam_p))

    w = [math.sqrt(omega_diag[l]) * _ABS_THIRD_GAUSS ** (1 / 3) for l in range(n)]
    third = 0.0
    for i in range(n):
        for j in blocks[i]:
            for k in set(blocks[i]) | set(blocks[j]):
                third += w[i] * w[j] * w[k]
    return {"bb1_b": bb1_b, "bb2_b": bb2_b, "bb4": bb4, "dwb_third_moment": third / n**1.5}


def _run(replicates, n=100, t2=None, phi=None):
    values = np.asarray(replicates, dtype=float)
    return BootstrapRun(
        scheme="dwb",
        replicates_t1=values,
        replicates_t2=t2,
        sigma_star=np.eye(1),
        center=np.zeros(1),
        sample_mean=np.array([0.5]),
        n=n,
        v=1,
        s_n=1.0,
        B=values.size,
        seed=0,
        phi=phi,
    )


class TestStatistics:
    def test_values(self):
        t1, t2 = test_statistics([3.0, 4.0], [0.0, 0.0], 4, phi=L2NORM)
        assert t1 == pytest.approx(10.0)
        assert t2 == pytest.approx(10.0)

    def test_without_phi(self):
        t1, t2 = test_statistics([1.0], [1.0], 9)
        assert t1 == 0.0
        assert t2 is None


class TestQuantile:
    def test_order_statistics(self):
        assert empirical_quantile([4, 2, 1, 3], 0.5) == 2
        assert empirical_quantile([1, 2, 3, 4], 0.9) == 4
        assert empirical_quantile(range(1, 101), 0.9) == 90

    def test_small_alpha_uses_first_order_statistic(self):
        assert empirical_quantile([5.0, 7.0], 0.01) == 5.0

    def test_generalized_inverse(self):
        values = np.random.default_rng(3).integers(0, 12, size=50).astype(float)
        for k in range(1, 100):
            alpha = k / 100
            q = empirical_quantile(values, alpha)
            assert np.count_nonzero(values <= q) / values.size >= alpha
            assert np.count_nonzero(values < q) / values.size < alpha

    def test_rejects_empty(self):
        with pytest.raises(ParameterError) as excinfo:
            empirical_quantile([], 0.5)
        assert excinfo.value.code == "empty_input"

    @pytest.mark.parametrize("alpha", [0.0, 1.0, -0.2])
    def test_rejects_alpha(self, alpha):
        with pytest.raises(ParameterError):
            empirical_quantile([1.0], alpha)


class TestConfidenceSets:
    def test_ball_radius(self):
        region = confidence_set(_run(range(1, 101)), 0.1)
        assert region.kind == "ball"
        assert region.radius == pytest.approx(9.0)
        assert region.contains([9.0])
        assert not region.contains([9.6])

    def test_interval_from_t2(self):
        t2 = np.arange(-49.0, 51.0)
        region = confidence_set(_run(range(1, 101), t2=t2, phi=IDENTITY), 0.1, "t2")
        # q(0.95) = 45 and q(0.05) = -45 over -49..50.
        assert region.lower == pytest.approx(0.5 - 4.5)
        assert region.upper == pytest.approx(0.5 + 4.5)
        assert region.contains(0.0)

    def test_interval_needs_t2(self):
        with pytest.raises(ParameterError) as excinfo:
            confidence_set(_run(range(1, 11)), 0.1, "t2")
        assert excinfo.value.code == "missing_t2"

    def test_summary_keys(self):
        summary = summarize_run(_run(range(1, 101)), [0.05, 0.1])
        assert summary["quantiles_t1"] == {"0.05": 95.0, "0.1": 90.0}
        assert set(summary["confidence_sets"]) == {"0.05", "0.1"}
        assert summary["moments_t1"]["max"] == 100.0
        assert "intervals_t2" not in summary

    def test_duality_on_grid(self):
        rng = np.random.default_rng(12)
        replicates = rng.chisquare(2, size=200)
        sample_mean = np.array([0.3, -0.2])
        run = BootstrapRun(
            scheme="block",
            replicates_t1=replicates,
            sigma_star=np.eye(2),
            center=sample_mean,
            sample_mean=sample_mean,
            n=64,
            v=2,
            s_n=1.0,
            B=replicates.size,
            seed=0,
        )
        for alpha in (0.05, 0.1, 0.25):
            region = confidence_set(run, alpha)
            critical = empirical_quantile(replicates, 1 - alpha)
            for x in np.linspace(-0.4, 1.0, 29):
                for y in np.linspace(-0.9, 0.5, 29):
                    t1, _ = test_statistics(sample_mean, [x, y], run.n)
                    assert region.contains([x, y]) == (t1 <= critical)


class TestKolmogorov:
    def test_distance(self):
        assert kolmogorov_distance([1, 2], [1, 3]) == pytest.approx(0.5)
        assert kolmogorov_distance([1, 2, 3], [3, 2, 1]) == 0.0

    def test_metric_properties(self):
        rng = np.random.default_rng(21)
        for _ in range(25):
            a = rng.normal(size=rng.integers(1, 40))
            b = rng.normal(0.3, 1.2, size=rng.integers(1, 40))
            c = np.round(rng.normal(size=rng.integers(1, 40)), 1)
            assert kolmogorov_distance(a, b) == kolmogorov_distance(b, a)
            assert kolmogorov_distance(a, c) <= kolmogorov_distance(a, b) + kolmogorov_distance(b, c) + 1e-12
            assert 0.0 <= kolmogorov_distance(a, c) <= 1.0


class TestSmoothFunctions:
    def test_polynomial(self):
        phi = parse_smooth_function("poly:1,0,2")
        assert phi([3.0, 7.0]) == pytest.approx(19.0)
        assert np.allclose(phi.grad([3.0, 7.0]), [12.0, 0.0])

    def test_l2norm_gradient(self):
        assert np.allclose(L2NORM.grad([3.0, 4.0]), [0.6, 0.8])
        assert np.allclose(L2NORM.grad([0.0, 0.0]), [0.0, 0.0])

    def test_unknown(self):
        with pytest.raises(ParameterError):
            parse_smooth_function("cube")
        assert parse_smooth_function(None) is None

    def test_delta_method_variance(self, path5_dist, path5_data):
        run = dwb_run(path5_data, path5_dist, 1, 20, seed=2, phi=parse_smooth_function("poly:0,0,1"))
        grad = 2 * path5_data.mean()
        assert run.delta_method_variance == pytest.approx(grad**2 * run.sigma_star[0, 0])
        assert run.phi_at_mean == pytest.approx(path5_data.mean() ** 2)


class TestGamma:
    def test_policies(self):
        assert np.array_equal(gamma_series([1.0, 0.5], 4, "zero"), [1.0, 0.5, 0.0, 0.0])
        assert np.array_equal(gamma_series([1.0, 0.5], 4, "hold"), [1.0, 0.5, 0.5, 0.5])
        assert np.array_equal(gamma_series({0: 1.0, 1: 0.5, 2: 0.1}, 2), [1.0, 0.5])

    def test_short_series(self):
        with pytest.raises(GammaCoverageError) as excinfo:
            gamma_series([1.0], 3)
        assert excinfo.value.code == "gamma_too_short"

    def test_gaps_rejected(self):
        with pytest.raises(ParameterError):
            gamma_series({0: 1.0, 2: 0.5}, 3, "zero")


class TestDiagnostics:
    def test_edgeless_report(self, edgeless4_dist):
        report = diagnostics(edgeless4_dist, 1, [1.0])
        assert report.lln_condition == 0.0
        assert report.bb1_b == 0.0
        assert report.omega_max_offdiag == 0.0
        assert report.dwb2_a == pytest.approx(0.25)
        assert report.bb1_c_by_radius == []

    def test_cycle_report(self):
        dist = distance_matrix(gen_network("cycle", 20))
        gamma = [0.5**s for s in range(11)]
        report = diagnostics(dist, 1, gamma)
        assert report.bb1_c == max(report.bb1_c_by_radius)
        assert report.bb1_c_by_radius == report.dwb2_b_by_radius
        assert len(report.bb1_c_by_radius) == 10
        # Vertex-transitive: no size heterogeneity.
        assert report.pseudo_sample_bound == 0.0
        assert report.dwb2_a == pytest.approx(3 / 20)
        assert report.lln_condition > 0
        assert math.isfinite(report.bb4)
        assert report.to_dict()["s_n"] == 1

    def test_gamma_too_short(self, path5_dist):
        with pytest.raises(GammaCoverageError):
            diagnostics(path5_dist, 1, [1.0, 0.5])

    def test_moment_orders(self, path5_dist):
        with pytest.raises(ParameterError):
            diagnostics(path5_dist, 1, [1.0] * 5, r=2)

    @pytest.mark.parametrize("kind, n", [("line", 9), ("star", 8), ("lattice2d", 9)])
    @pytest.mark.parametrize("s_n", [1, 2])
    def test_matches_naive_loops(self, kind, n, s_n):
        dist = distance_matrix(gen_network(kind, n))
        gamma = [0.6**s for s in range(n)]
        report = diagnostics(dist, s_n, gamma)
        expected = _naive_conditions(dist.values, s_n, gamma)
        for name, value in expected.items():
            assert getattr(report, name) == pytest.approx(value, rel=1e-12, abs=1e-12), name

    def test_large_star(self):
        n = 1000
        dist = distance_matrix(gen_network("star", n))
        report = diagnostics(dist, 1, [1.0, 0.5, 0.25])
        delta = 2.998
        variance = ((n - delta) ** 2 + (n - 1) * (2 - delta) ** 2) / n
        spread = ((n - delta) + (n - 1) * (delta - 2)) / n
        assert report.bb1_a == pytest.approx(variance / delta + n / math.sqrt(delta * n), rel=1e-10)
        assert 3.9 <= spread**2 <= 4.0
        assert report.bb1_a >= spread**2 / delta

        # Every pair is admissible at radius 3; only separated leaf pairs reach distance 2.
        leaves = n - 1
        disjoint = n * (n - 1) ** 2 + n * (n - 1) * (n - 2) ** 2
        far = leaves * (leaves - 1) ** 2 + leaves * (leaves - 1) * (leaves - 2) ** 2
        weighted = (n**4 - disjoint) + (disjoint - far) * math.sqrt(0.5) + far * 0.5
        assert report.bb2_b == pytest.approx(weighted / n**2, rel=1e-10)


class TestTransformRate:
    @pytest.mark.parametrize(
        "p, tau, c4_zero, expected",
        [
            (4.0, 2.0, True, 2 / 3),
            (4.0, 2.0, False, 0.5),
            (3.0, 1.0, True, 1.0),
            (3.0, 1.0, False, 1.0),
            (6.0, 3.0, False, 3 / 7),
        ],
    )
    def test_grid(self, p, tau, c4_zero, expected):
        assert dependence_transform_rate(p, tau, c4_zero) == pytest.approx(expected)

    def test_rejects_tau_at_p(self):
        with pytest.raises(ParameterError):
            dependence_transform_rate(3.0, 3.0, True)
