import numpy as np
import pytest

from qprank import (
    DenseWalk,
    DirectedGraph,
    ParameterError,
    SzegedyWalk,
    WalkState,
    average_qpr,
    gen_scale_free,
    google_from_graph,
)

from conftest import random_graph


def cycle(n):
    return DirectedGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def walk_for(g, alpha=0.85):
    return SzegedyWalk(google_from_graph(g, alpha))


class TestInitialState:
    def test_two_node_values(self):
        s = walk_for(DirectedGraph(2, frozenset({(0, 1)}))).initial_state()
        assert np.allclose(s.a, 0.7071067811865475, atol=0, rtol=0)
        assert np.array_equal(s.b, np.zeros(2))

    def test_unit_norm_exactly_from_b_zero(self):
        w = walk_for(gen_scale_free(17, seed=1))
        s = w.initial_state()
        assert s.b @ s.b == 0.0
        assert abs(w.norm_sq(s) - 1.0) < 1e-15

    def test_t0_measurement_is_row_average(self):
        g = random_graph(np.random.default_rng(3), 9)
        gm = google_from_graph(g, 0.85)
        w = SzegedyWalk(gm)
        p0 = w.measure(w.initial_state())
        assert np.abs(p0 - gm.entries.mean(axis=1)).max() < 1e-14

    def test_cycle_t0_uniform(self):
        w = walk_for(cycle(3))
        assert np.abs(w.measure(w.initial_state()) - 1 / 3).max() < 1e-14


class TestStep:
    def test_projector_fixed_point(self):
        # A state with b = 0 lies inside the projected span, so one step just
        # swaps the two families: (a, 0) -> (0, a).
        w = walk_for(gen_scale_free(8, seed=2))
        a = np.random.default_rng(0).normal(size=8)
        out = w.step(WalkState(a, np.zeros(8)))
        assert np.array_equal(out.a, -np.zeros(8))
        assert np.array_equal(out.b, a)

    def test_double_step_closed_form(self):
        g = random_graph(np.random.default_rng(5), 7)
        gm = google_from_graph(g, 0.6)
        w = SzegedyWalk(gm)
        r = np.sqrt(gm.entries)
        d = r * r.T
        a = np.random.default_rng(1).normal(size=7)
        state = w.step(w.step(WalkState(a.copy(), np.zeros(7))))
        assert np.allclose(state.a, -a, atol=1e-15)
        assert np.allclose(state.b, 2 * d @ a, atol=1e-14)

    def test_norm_conserved_on_random_state(self):
        g = random_graph(np.random.default_rng(8), 8)
        w = walk_for(g)
        rng = np.random.default_rng(4)
        s = WalkState(rng.normal(size=8), rng.normal(size=8))
        before = w.norm_sq(s)
        for _ in range(200):
            s = w.step(s)
        assert abs(w.norm_sq(s) - before) < 1e-12


class TestMeasurement:
    def test_two_cycle_stays_balanced(self):
        w = walk_for(cycle(2))
        s = w.initial_state()
        for _ in range(30):
            assert np.abs(w.measure(s) - 0.5).max() < 1e-12
            s = w.step(w.step(s))

    def test_distributions_normalized_and_clamped(self):
        w = walk_for(gen_scale_free(30, seed=6))
        s = w.initial_state()
        for _ in range(100):
            p = w.measure(s)
            assert p.min() >= 0.0
            assert abs(p.sum() - 1.0) < 1e-12
            s = w.step(w.step(s))

    def test_cycle_symmetry_instantaneous(self):
        # Rotation is an automorphism of the cycle, so every node measures alike.
        w = walk_for(cycle(5))
        s = w.initial_state()
        for _ in range(25):
            p = w.measure(s)
            assert p.max() - p.min() < 1e-10
            s = w.step(w.step(s))

    def test_complete_digraph_symmetry_instantaneous(self):
        # Every node permutation is an automorphism of the complete digraph.
        n = 5
        g = DirectedGraph(n, frozenset((i, j) for i in range(n) for j in range(n) if i != j))
        w = walk_for(g)
        s = w.initial_state()
        for _ in range(25):
            p = w.measure(s)
            assert p.max() - p.min() < 1e-10
            s = w.step(w.step(s))


class TestAverage:
    def test_three_cycle_uniform(self):
        for alpha in (0.1, 0.85):
            avg = average_qpr(google_from_graph(cycle(3), alpha), 200)
            assert np.abs(avg - 1 / 3).max() < 1e-10

    def test_two_cycle_any_horizon(self):
        for horizon in (1, 7, 50):
            avg = average_qpr(google_from_graph(cycle(2), 0.5), horizon)
            assert np.abs(avg - 0.5).max() < 1e-12

    def test_cesaro_settles(self):
        g = gen_scale_free(7, seed=5)
        w = walk_for(g)
        a500, a1000, a2000 = (w.average(T) for T in (500, 1000, 2000))
        d1 = np.abs(a1000 - a500).max()
        d2 = np.abs(a2000 - a1000).max()
        assert d2 < d1

    def test_convergence_report(self):
        w = walk_for(gen_scale_free(12, seed=1))
        avg, gap = w.average_with_convergence(400)
        assert gap == pytest.approx(np.abs(avg - w.average(200)).max())
        _, nan_gap = w.average_with_convergence(1)
        assert np.isnan(nan_gap)

    def test_deterministic_bitwise(self):
        gm = google_from_graph(gen_scale_free(20, seed=2), 0.85)
        assert np.array_equal(average_qpr(gm, 300), average_qpr(gm, 300))

    def test_horizon_validation(self):
        with pytest.raises(ParameterError):
            average_qpr(google_from_graph(cycle(3), 0.85), 0)


class TestDenseOracle:
    def test_swap_is_involution(self):
        den = DenseWalk(google_from_graph(random_graph(np.random.default_rng(2), 5), 0.85))
        assert np.array_equal(den.swap @ den.swap, np.eye(25))

    def test_initial_measurements_agree(self):
        gm = google_from_graph(random_graph(np.random.default_rng(9), 8), 0.85)
        red, den = SzegedyWalk(gm), DenseWalk(gm)
        p_red = red.measure(red.initial_state())
        p_den = den.measure(den.initial_state())
        assert np.abs(p_red - p_den).max() < 1e-12

    def test_unitarity_of_dense_operator(self):
        den = DenseWalk(google_from_graph(random_graph(np.random.default_rng(12), 6), 0.5))
        assert np.abs(den.u @ den.u.T - np.eye(36)).max() < 1e-12

    def test_trajectories_match_reduced(self):
        rng = np.random.default_rng(31)
        for _ in range(3):
            g = random_graph(rng, int(rng.integers(3, 9)))
            for alpha in (0.3, 0.85):
                gm = google_from_graph(g, alpha)
                red, den = SzegedyWalk(gm), DenseWalk(gm)
                rs, ds = red.initial_state(), den.initial_state()
                for _ in range(20):
                    assert np.abs(red.measure(rs) - den.measure(ds)).max() < 1e-10
                    rs = red.step(red.step(rs))
                    ds = den.step(den.step(ds))

    def test_size_guard(self):
        g = DirectedGraph(65, frozenset((i, (i + 1) % 65) for i in range(65)))
        with pytest.raises(ParameterError):
            DenseWalk(google_from_graph(g, 0.85))


class TestTrajectory:
    def test_rows_match_manual_evolution(self):
        w = walk_for(gen_scale_free(10, seed=3))
        traj = w.trajectory(5)
        s = w.initial_state()
        for t in range(5):
            assert np.array_equal(traj[t], w.measure(s))
            s = w.step(w.step(s))
