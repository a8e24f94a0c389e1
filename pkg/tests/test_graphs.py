from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from fractonprod import gf2
from fractonprod.graphs import (
    Graph,
    GraphError,
    TannerGraph,
    ball,
    complete_graph,
    configuration_model,
    configuration_model_bipartite,
    cycle_graph,
    format_graph,
    graph_distance,
    laplacian_ensemble_graph,
    matrix_from_tanner,
    parse_graph,
    path_graph,
    sample_degrees,
    splitmix64,
    tanner_from_matrix,
    torus_graph,
    trial_seed,
)
from fractonprod.seeds import repetition_code


def test_splitmix64_reference_values():
    # first outputs of the reference SplitMix64 generator started from state 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF
    assert splitmix64(0x9E3779B97F4A7C15) == 0x6E789E6AA1B965F4
    assert trial_seed(5, 3) == splitmix64(5 ^ 3)


def test_graph_normalises_edges():
    g = Graph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges.tolist() == [[0, 1], [1, 2]]
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_configuration_model_k4():
    # pairing can create parallel edges that are dropped, so check containment
    for seed in range(20):
        g = configuration_model([3, 3, 3, 3], seed)
        edges = {tuple(e) for e in g.edges.tolist()}
        assert edges <= {tuple(e) for e in complete_graph(4).edges.tolist()}
        assert g.is_connected()
        if g.meta["removed_edges"] == 0:
            assert g == complete_graph(4)


def test_configuration_model_ensemble_member():
    g = laplacian_ensemble_graph(300, seed=1)
    req = np.array(g.meta["requested_degrees"])
    assert g.is_connected()
    assert req.min() >= 3 and req.max() <= 5 and req.sum() % 2 == 0
    assert np.all(g.degrees() <= req)
    assert g.meta["min_degree"] == g.degrees().min()


def test_configuration_model_deterministic():
    a = laplacian_ensemble_graph(120, seed=42)
    b = laplacian_ensemble_graph(120, seed=42)
    assert a == b and a.meta == b.meta
    assert laplacian_ensemble_graph(120, seed=43) != a


@settings(max_examples=60, deadline=None)
@given(st.integers(6, 80), st.integers(0, 2**63 - 1))
def test_configuration_model_properties(n, seed):
    g = laplacian_ensemble_graph(n, seed)
    e = g.edges
    assert np.all(e[:, 0] < e[:, 1])  # no self-loops
    assert len({tuple(x) for x in e.tolist()}) == len(e)  # no parallel edges
    assert np.all(g.degrees() <= np.array(g.meta["requested_degrees"]))
    assert g.is_connected()


def test_sample_degrees_parity_bump():
    rng = np.random.default_rng(0)
    for _ in range(50):
        d = sample_degrees(11, rng)
        assert d.sum() % 2 == 0 and d.min() >= 3 and d.max() <= 5


def test_configuration_model_rejects_bad_specs():
    with pytest.raises(GraphError):
        configuration_model([1, 1, 1], 0)
    with pytest.raises(GraphError):
        configuration_model([1, 1, 1, 1], 0, max_resamples=5)  # two disjoint edges at best
    with pytest.raises(GraphError):
        configuration_model_bipartite(5, 3, 3, 4, 0)


def test_bipartite_small_regular():
    for seed in range(10):
        t = configuration_model_bipartite(4, 3, 3, 4, seed=seed)
        # the stub pairing is (3, 4)-biregular; repeated pairs are then dropped
        assert (t.meta["d_variable"], t.meta["d_check"]) == (3, 4)
        assert len(t.edges) + t.meta["removed_edges"] == 12
        assert t.bit_degrees.max() <= 3 and t.check_degrees.max() <= 4
        if t.meta["removed_edges"] == 0:
            assert t.bit_degrees.tolist() == [3, 3, 3, 3]


def test_bipartite_ensemble_member():
    t = configuration_model_bipartite(400, 300, 3, 4, seed=9)
    assert t.is_connected()
    assert t.bit_degrees.max() <= 3 and t.check_degrees.max() <= 4
    H = matrix_from_tanner(t)
    assert H.shape[1] - gf2.rank(H) >= 100
    assert t == configuration_model_bipartite(400, 300, 3, 4, seed=9)


def test_distances_and_balls():
    g = path_graph(4)
    assert graph_distance(g, 2, 2) == 0
    assert graph_distance(g, 0, 3) == 3
    assert ball(cycle_graph(6), 4, 1) == {3, 4, 5}
    disjoint = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert math.isinf(graph_distance(disjoint, 0, 3))


@settings(max_examples=30, deadline=None)
@given(st.integers(6, 40), st.integers(0, 2**32))
def test_distances_match_bfs(n, seed):
    g = laplacian_ensemble_graph(n, seed)
    adj = [[] for _ in range(n)]
    for u, v in g.edges.tolist():
        adj[u].append(v)
        adj[v].append(u)
    ref = oracles.bfs_distances(adj, 0)
    assert [graph_distance(g, 0, v) for v in range(n)] == ref


def test_tanner_examples():
    t = tanner_from_matrix(np.array([[1, 1]]))
    assert (t.n, t.m) == (2, 1) and t.edges.tolist() == [[0, 0], [0, 1]]
    r = tanner_from_matrix(repetition_code(6).H)
    assert r.kappa_c == 2 and r.kappa_b == 2


def test_tanner_round_trip_random():
    rng = np.random.default_rng(7)
    for _ in range(100):
        rows, cols = rng.integers(1, 15, size=2)
        H = gf2.random_matrix(int(rows), int(cols), rng, 0.15)
        assert np.array_equal(matrix_from_tanner(tanner_from_matrix(H)), H)


def test_tanner_metric_uses_checks():
    t = tanner_from_matrix(repetition_code(5, cyclic=False).H)
    # bits 0 and 1 share check 0: bit - check - bit
    assert graph_distance(t, 0, 1) == 2
    assert graph_distance(t, 0, 4) == 8


def test_torus_graph():
    g = torus_graph(5, 4)
    assert g.n == 20 and np.all(g.degrees() == 4)
    assert torus_graph(2, 2).num_edges == 4  # wraparound duplicates collapse


def test_graph_text_round_trip():
    g = laplacian_ensemble_graph(30, 3)
    assert parse_graph(format_graph(g)) == g


def test_tanner_equality():
    a = TannerGraph(2, 1, [(0, 1), (0, 0)])
    assert a == tanner_from_matrix(np.array([[1, 1]]))
