from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from fractonprod import gf2
from fractonprod import pinwheel as pw
from fractonprod.graphs import Graph, complete_graph, cycle_graph, laplacian_ensemble_graph, path_graph, torus_graph
from fractonprod.seeds import (
    ClassicalCode,
    boundary_logical_guard,
    depleted_checks,
    frustrated_laplacian,
    ising_code,
    laplacian_code,
    load_code,
    pinwheel_code,
    random_typical_ldpc,
    repetition_code,
    save_code,
)


def test_repetition_examples():
    c = repetition_code(5)
    assert (c.n, c.k, c.d, c.kT) == (5, 1, 5, 1)
    o = repetition_code(5, cyclic=False)
    assert (o.n, o.k, o.d, o.kT) == (5, 1, 5, 0)
    # oracle: enumerate kernel and cokernel
    assert len(oracles.kernel_vectors(o.H)) == 2 and len(oracles.kernel_vectors(o.H.T)) == 1
    two = repetition_code(2)
    assert np.array_equal(two.H[0], two.H[1]) and (two.k, two.kT) == (1, 1)


@pytest.mark.parametrize("n", range(2, 13))
def test_repetition_distance_exhaustive(n):
    for cyclic in (True, False):
        H = repetition_code(n, cyclic).H
        assert oracles.brute_distance(H) == n
        assert repetition_code(n, cyclic).d == n


def test_laplacian_rank_facts():
    assert laplacian_code(cycle_graph(4)).k == 2
    assert laplacian_code(cycle_graph(5)).k == 1
    assert laplacian_code(complete_graph(4)).k == 3
    assert laplacian_code(complete_graph(5)).k == 1
    assert laplacian_code(path_graph(3)).k == 1


def test_laplacian_square_torus_regression():
    # GF(2) rank oracle on the 4x4 torus (16 bits: brute force is cheap)
    H = laplacian_code(torus_graph(4, 4)).H
    assert laplacian_code(torus_graph(4, 4)).k == 16 - oracles.brute_rank(H) == 8


def test_laplacian_requires_connected():
    with pytest.raises(ValueError):
        laplacian_code(Graph.from_edges(4, [(0, 1), (2, 3)]))


@settings(max_examples=40, deadline=None)
@given(st.integers(6, 60), st.integers(0, 2**32))
def test_laplacian_self_transpose_and_rank_identities(n, seed):
    c = laplacian_code(laplacian_ensemble_graph(n, seed))
    assert np.array_equal(c.H, c.H.T)
    assert c.k == c.n - gf2.rank(c.H) and c.kT == c.m - gf2.rank(c.H)
    assert c.k >= 1 and not gf2.matvec(c.H, np.ones(n, dtype=np.uint8)).any()


def test_typical_ldpc_examples():
    c = random_typical_ldpc(400, 3, 4, seed=1)
    assert (c.n, c.m) == (400, 300) and c.k >= 100
    assert c.tanner.kappa_c <= 4
    # spanning-tree-like Tanner graph: m = n - 1 checks
    H = np.zeros((4, 5), dtype=np.uint8)
    for i in range(4):
        H[i, i] = H[i, i + 1] = 1
    assert ClassicalCode(H).k >= 1


def test_typical_ldpc_rejects_bad_degrees():
    with pytest.raises(ValueError):
        random_typical_ldpc(10, 3, 4, seed=0)


def test_frustrated_laplacian_odd_rows():
    tg = pw.generate(3)
    Ht = frustrated_laplacian(tg.graph)
    assert np.all(Ht.sum(axis=1) % 2 == 1)
    assert np.array_equal(Ht, Ht.T)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_pinwheel_frustration(N):
    c = pinwheel_code(N, 7)
    ones = np.ones(c.n, dtype=np.uint8)
    assert np.all(gf2.matvec(c.H, ones) == 1)


def test_pinwheel_depletion_only_on_boundary():
    c = pinwheel_code(4, 7)
    removed = c.extra["removed_checks"]
    tg = c.tiling
    walk = pw.boundary_vertices(tg)
    assert all(tg.boundary[v] for v in removed)
    assert removed == sorted(walk[i] for i in range(0, len(walk), 7))
    assert c.m == c.n - len(removed)
    assert depleted_checks([10, 11, 12, 13, 14], 2, offset=1) == [11, 13]


# (k, kT) for p = 7, 11, 15 at N = 3, 4, 5, fixed from the first verified build
PINWHEEL_K = {
    7: [(5, 0), (13, 0), (22, 0)],
    11: [(3, 0), (9, 0), (14, 0)],
    15: [(3, 1), (6, 0), (10, 0)],
}


@pytest.mark.parametrize("p", sorted(PINWHEEL_K))
def test_pinwheel_k_regression(p):
    got = [(pinwheel_code(N, p).k, pinwheel_code(N, p).kT) for N in (3, 4, 5)]
    assert got == PINWHEEL_K[p]


def test_pinwheel_k_tracks_boundary_over_p():
    # k ~ sqrt(n)/p: compare with the number of deleted checks
    for p in (7, 11, 15):
        for N in (4, 5):
            c = pinwheel_code(N, p)
            B = len(pw.boundary_vertices(c.tiling))
            assert 0.5 * B / p <= c.k <= 1.5 * B / p + 1


def test_pinwheel_n3_exact_regression():
    c = pinwheel_code(3, 7)
    r = c.distance_result
    assert (c.n, c.k, r.weight, r.exact) == (196, 5, 72, True)
    assert not gf2.matvec(c.H, r.vector).any()


def test_boundary_guard_reports():
    g = boundary_logical_guard(pinwheel_code(3, 11))
    assert set(g) >= {"radius", "threshold", "short_boundary_logical", "lightest_weight"}
    assert g["short_boundary_logical"] is False
    assert math.isclose(g["threshold"], math.sqrt(196) / 2)


def test_ising_code():
    c = ising_code(torus_graph(3, 3))
    assert (c.n, c.m, c.k) == (9, 18, 1)
    assert np.all(c.H.sum(axis=1) == 2)


def test_save_load_round_trip(tmp_path):
    c = pinwheel_code(2, 5)
    stem = str(tmp_path / "pw")
    save_code(c, stem)
    back = load_code(stem)
    assert np.array_equal(back.H, c.H) and back.name == "pinwheel" and back.params == c.params


def test_transpose_code():
    c = repetition_code(5, cyclic=False)
    t = c.transpose()
    assert (t.k, t.kT) == (c.kT, c.k)
