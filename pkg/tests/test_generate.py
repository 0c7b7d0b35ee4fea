import itertools
import json
import math

import numpy as np
import pytest

import trigauge as tg

from conftest import complete_graph, path_graph


def all_graphs_on(n: int):
    """Every labeled simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        chosen = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        src = np.array([a for a, _ in chosen], dtype=np.int64)
        dst = np.array([b for _, b in chosen], dtype=np.int64)
        yield tg.csr_from_pairs(n, src, dst)


class TestErdosRenyi:
    def test_p_zero_is_edgeless(self):
        g = tg.gen_erdos_renyi(64, 0.0, seed=1)
        assert (g.n_vertices, g.n_edges) == (64, 0)
        assert tg.count_adj2(g).count == 0

    @pytest.mark.parametrize("n", [2, 5, 9])
    def test_p_one_is_complete(self, n):
        g = tg.gen_erdos_renyi(n, 1.0, seed=1)
        assert g.n_edges == n * (n - 1) // 2
        assert tg.count_brute(g).count == math.comb(n, 3)

    def test_frozen_instance_matches_brute(self):
        g = tg.gen_erdos_renyi(64, 0.25, seed=7)
        g.validate()
        assert g.n_edges == 506
        assert tg.count_brute(g).count == 676

    def test_invalid_p_rejected(self):
        with pytest.raises(ValueError):
            tg.gen_erdos_renyi(10, -0.1, seed=0)
        with pytest.raises(ValueError):
            tg.gen_erdos_renyi(10, 1.5, seed=0)
        with pytest.raises(ValueError):
            tg.gen_erdos_renyi(-1, 0.5, seed=0)

    def test_deterministic_given_seed(self):
        a = tg.gen_erdos_renyi(40, 0.4, seed=99)
        b = tg.gen_erdos_renyi(40, 0.4, seed=99)
        assert tg.to_tsv(a) == tg.to_tsv(b)
        c = tg.gen_erdos_renyi(40, 0.4, seed=100)
        assert tg.to_tsv(a) != tg.to_tsv(c)

    def test_zero_vertices(self):
        g = tg.gen_erdos_renyi(0, 0.5, seed=0)
        assert (g.n_vertices, g.n_edges) == (0, 0)


class TestKroneckerPower:
    def test_k3_squared_has_six_triangles(self):
        kk = tg.gen_kron_power(complete_graph(3), 2)
        kk.validate()
        assert kk.n_vertices == 9
        assert kk.n_edges == 18
        assert tg.count_brute(kk).count == 6

    def test_power_one_is_identity(self):
        g = tg.gen_erdos_renyi(12, 0.5, seed=4)
        same = tg.gen_kron_power(g, 1)
        assert np.array_equal(same.row_offsets, g.row_offsets)
        assert np.array_equal(same.column_indices, g.column_indices)

    def test_single_edge_cubed_is_triangle_free(self):
        g = tg.gen_kron_power(path_graph(2), 3)
        assert g.n_vertices == 8
        assert tg.count_brute(g).count == 0

    def test_zero_degree_vertices_retained(self):
        seed = tg.csr_from_pairs(3, np.array([0]), np.array([1]))  # vertex 2 isolated
        g = tg.gen_kron_power(seed, 2)
        assert g.n_vertices == 9
        assert np.count_nonzero(g.degrees() == 0) > 0

    def test_closed_form_on_three_vertex_seeds(self):
        for seed_graph in all_graphs_on(3):
            t_seed = tg.count_brute(seed_graph).count
            for k in (1, 2, 3):
                power = tg.gen_kron_power(seed_graph, k)
                expected = 6 ** (k - 1) * t_seed**k
                assert tg.count_adj2(power).count == expected

    def test_invalid_k(self):
        with pytest.raises(ValueError):
            tg.gen_kron_power(complete_graph(3), 0)

    def test_size_guard_trips_before_allocation(self):
        with pytest.raises(ValueError, match="too large"):
            tg.gen_kron_power(complete_graph(4), 40)


class TestStochasticKronecker:
    def test_uniform_seed_frozen_counts(self):
        g = tg.gen_stochastic_kron([0.25, 0.25, 0.25, 0.25], 4, 8, seed=3)
        g.validate()
        assert g.n_vertices == 16
        assert g.n_edges == 75
        counts = {a: tg.count_triangles(g, a).count for a in tg.ALGORITHMS}
        assert set(counts.values()) == {131}

    def test_zero_factor_empty(self):
        g = tg.gen_stochastic_kron(tg.GRAPH500_PROBS, 5, 0, seed=1)
        assert (g.n_vertices, g.n_edges) == (32, 0)

    def test_graph500_seed_skewed_and_kernels_agree(self):
        g = tg.gen_stochastic_kron(tg.GRAPH500_PROBS, 10, 8, seed=5)
        assert g.n_vertices == 1024
        deg = g.degrees()
        assert deg.max() > 8 * max(deg.mean(), 1)  # noticeably skewed
        counts = {a: tg.count_triangles(g, a).count for a in ("adj2", "lu", "incidence")}
        assert set(counts.values()) == {24345}

    def test_probability_validation(self):
        with pytest.raises(ValueError, match="sum to 1"):
            tg.gen_stochastic_kron([0.5, 0.25, 0.25, 0.1], 4, 4, seed=0)
        with pytest.raises(ValueError):
            tg.gen_stochastic_kron([1.2, -0.2, 0.0, 0.0], 4, 4, seed=0)

    def test_deterministic_given_seed(self):
        a = tg.gen_stochastic_kron(tg.GRAPH500_PROBS, 8, 6, seed=17)
        b = tg.gen_stochastic_kron(tg.GRAPH500_PROBS, 8, 6, seed=17)
        assert tg.to_tsv(a) == tg.to_tsv(b)


class TestGenSpec:
    def test_dispatch_and_determinism(self):
        spec = tg.GenSpec(model="erdos_renyi", rng_seed=5, n=30, p=0.2)
        assert tg.to_tsv(spec.generate()) == tg.to_tsv(spec.generate())

    def test_kron_spec(self):
        spec = tg.GenSpec(model="kron_power", seed_graph=complete_graph(3), k=2)
        assert spec.generate().n_vertices == 9

    def test_stochastic_spec(self):
        spec = tg.GenSpec(
            model="stochastic_kron", rng_seed=3, probs=(0.25, 0.25, 0.25, 0.25), scale=4, edge_factor=8
        )
        assert spec.generate().n_edges == 75

    def test_missing_parameters_rejected(self):
        with pytest.raises(ValueError):
            tg.GenSpec(model="erdos_renyi", n=5).generate()
        with pytest.raises(ValueError):
            tg.GenSpec(model="kron_power", k=2).generate()
        with pytest.raises(ValueError):
            tg.GenSpec(model="stochastic_kron", scale=3).generate()
        with pytest.raises(ValueError, match="unknown model"):
            tg.GenSpec(model="bter").generate()

    def test_graph_id_mentions_model_and_seed(self):
        spec = tg.GenSpec(model="erdos_renyi", rng_seed=5, n=30, p=0.2)
        gid = spec.graph_id()
        assert "erdos_renyi" in gid and "rng_seed=5" in gid

    def test_metadata_sidecar(self, tmp_path):
        spec = tg.GenSpec(model="erdos_renyi", rng_seed=5, n=30, p=0.2)
        g = spec.generate()
        sidecar = tmp_path / "g.tsv.meta.json"
        tg.write_metadata_sidecar(spec, g, sidecar)
        meta = json.loads(sidecar.read_text())
        assert meta["model"] == "erdos_renyi"
        assert meta["rng_seed"] == 5
        assert meta["n_vertices"] == 30
        assert meta["n_edges"] == g.n_edges
        assert meta["parameters"] == {"n": 30, "p": 0.2}
