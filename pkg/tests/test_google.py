import numpy as np
import pytest
from hypothesis import given, settings

from qprank import (
    ConvergenceError,
    DirectedGraph,
    ParameterError,
    build_google,
    build_patched_connectivity,
    classical_pagerank,
    format_dense_matrix,
    gen_erdos_renyi,
    gen_hierarchical_ternary,
    gen_scale_free,
    google_from_graph,
)

from conftest import small_digraphs

TWO_NODE = DirectedGraph(2, frozenset({(0, 1)}))
# Hand-solved fixed point of the damped 2-node chain at alpha = 0.85:
# I1 = 1.85 I0 and I0 + I1 = 1.
TWO_NODE_PR = np.array([1.0, 1.85]) / 2.85


def cycle(n):
    return DirectedGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete(n):
    return DirectedGraph(n, frozenset((i, j) for i in range(n) for j in range(n) if i != j))


class TestPatchedConnectivity:
    def test_dangling_column_patched_to_uniform(self):
        e = build_patched_connectivity(TWO_NODE)
        assert np.allclose(e[:, 0], [0.0, 1.0])
        assert np.allclose(e[:, 1], [0.5, 0.5])

    def test_cycle_is_permutation_matrix(self):
        e = build_patched_connectivity(cycle(3))
        perm = np.zeros((3, 3))
        for i in range(3):
            perm[(i + 1) % 3, i] = 1.0
        assert np.array_equal(e, perm)

    def test_edgeless_graph_all_uniform(self):
        e = build_patched_connectivity(DirectedGraph(2, frozenset()))
        assert np.allclose(e, 0.5)

    @settings(max_examples=40, deadline=None)
    @given(small_digraphs())
    def test_columns_stochastic(self, g):
        e = build_patched_connectivity(g)
        assert np.abs(e.sum(axis=0) - 1.0).max() < 1e-12


class TestBuildGoogle:
    def test_two_node_hand_values(self):
        gm = google_from_graph(TWO_NODE, 0.85)
        assert np.allclose(gm.entries[:, 0], [0.075, 0.925])
        assert np.allclose(gm.entries[:, 1], [0.5, 0.5])

    def test_edgeless_half_alpha(self):
        gm = google_from_graph(DirectedGraph(2, frozenset()), 0.5)
        assert np.allclose(gm.entries, 0.5)

    def test_stochasticity_preserved(self):
        for alpha in (0.05, 0.5, 0.95):
            gm = google_from_graph(cycle(3), alpha)
            assert np.abs(gm.entries.sum(axis=0) - 1.0).max() < 1e-12

    def test_alpha_range_enforced(self):
        e = build_patched_connectivity(cycle(3))
        for alpha in (0.0, 1.0, -0.5, 2.0):
            with pytest.raises(ParameterError):
                build_google(e, alpha)

    def test_hopping_floor(self):
        gm = google_from_graph(gen_scale_free(50, seed=1), 0.85)
        assert gm.entries.min() >= (1 - 0.85) / 50 - 1e-15

    def test_no_zero_columns_after_patch(self):
        g = gen_scale_free(64, seed=4)
        e = build_patched_connectivity(g)
        assert (e.sum(axis=0) > 0).all()
        assert (e.max(axis=0) > 0).all()


class TestClassicalPagerank:
    def test_cycle_uniform_any_alpha(self):
        for alpha in (0.1, 0.5, 0.85, 0.98):
            pr = classical_pagerank(google_from_graph(cycle(3), alpha))
            assert np.abs(pr - 1 / 3).max() < 1e-10

    def test_two_node_hand_value(self):
        pr = classical_pagerank(google_from_graph(TWO_NODE, 0.85))
        assert np.abs(pr - TWO_NODE_PR).max() < 1e-12

    def test_complete_digraph_uniform(self):
        pr = classical_pagerank(google_from_graph(complete(5), 0.85))
        assert np.abs(pr - 0.2).max() < 1e-10

    def test_residual_and_normalization_on_generated_graphs(self):
        graphs = [
            gen_scale_free(48, seed=0),
            gen_erdos_renyi(48, 0.1, seed=1),
            gen_hierarchical_ternary(3),
        ]
        for g in graphs:
            for alpha in (0.01, 0.5, 0.85, 0.98):
                gm = google_from_graph(g, alpha)
                pr = classical_pagerank(gm)
                assert np.abs(gm.entries @ pr - pr).sum() <= 1e-12
                assert abs(pr.sum() - 1.0) < 1e-10
                assert pr.min() >= 0.0

    def test_nonconvergence_raises_with_residual(self):
        gm = google_from_graph(gen_scale_free(20, seed=3), 0.85)
        with pytest.raises(ConvergenceError) as err:
            classical_pagerank(gm, tol=1e-12, max_iter=2)
        assert err.value.residual > 1e-12

    def test_matches_repeated_squaring_oracle(self):
        # G^(2^k) columns converge to the stationary vector; independent of
        # the power-iteration path.
        rng = np.random.default_rng(7)
        for _ in range(6):
            n = int(rng.integers(2, 7))
            edges = {
                (int(i), int(j)) for i in range(n) for j in range(n) if i != j and rng.random() < 0.4
            }
            g = DirectedGraph(n, frozenset(edges))
            for alpha in (0.3, 0.85):
                gm = google_from_graph(g, alpha)
                m = gm.entries.copy()
                for _ in range(8):
                    m = m @ m
                    m /= m.sum(axis=0, keepdims=True)
                oracle = m[:, 0]
                pr = classical_pagerank(gm)
                assert np.abs(pr - oracle).max() < 1e-8


class TestExport:
    def test_full_precision_roundtrip(self):
        gm = google_from_graph(gen_scale_free(12, seed=5), 0.85)
        text = format_dense_matrix(gm.entries)
        parsed = np.array([[float(v) for v in line.split()] for line in text.splitlines()])
        assert np.array_equal(parsed, gm.entries)
