"""Independent brute-force reference implementations used by the tests.

Nothing here imports the package's linear algebra; everything enumerates.
"""

from __future__ import annotations

import itertools
import math

import numpy as np


def all_vectors(n: int) -> np.ndarray:
    """All 2^n binary vectors as rows (n <= 22)."""
    idx = np.arange(2**n, dtype=np.int64)
    return ((idx[:, None] >> np.arange(n)) & 1).astype(np.uint8)


def kernel_vectors(H: np.ndarray) -> np.ndarray:
    V = all_vectors(H.shape[1])
    S = (V.astype(np.int64) @ H.T.astype(np.int64)) & 1
    return V[~S.any(axis=1)]


def brute_rank(H: np.ndarray) -> int:
    """rank = n - log2 |ker H|."""
    return H.shape[1] - int(round(math.log2(len(kernel_vectors(H)))))


def brute_distance(H: np.ndarray):
    K = kernel_vectors(H)
    w = K.sum(axis=1)
    w = w[w > 0]
    return math.inf if w.size == 0 else int(w.min())


def span(rows: np.ndarray) -> np.ndarray:
    """All GF(2) combinations of the given rows."""
    rows = np.asarray(rows, dtype=np.uint8)
    if rows.shape[0] == 0:
        return np.zeros((1, rows.shape[1]), dtype=np.uint8)
    C = all_vectors(rows.shape[0]).astype(np.int64)
    return ((C @ rows.astype(np.int64)) & 1).astype(np.uint8)


def brute_css_distance(hx: np.ndarray, hz: np.ndarray):
    """Minimum weight of ker(hx) \\ rowspace(hz) over both types (n <= 20)."""
    best = math.inf
    for A, B in ((hx, hz), (hz, hx)):
        K = kernel_vectors(A)
        S = {row.tobytes() for row in span(B)}
        for v in K:
            if v.any() and v.tobytes() not in S:
                best = min(best, int(v.sum()))
    return best


def naive_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    r, c = A.shape[0], B.shape[1]
    out = np.zeros((r, c), dtype=np.uint8)
    for i in range(r):
        for j in range(c):
            s = 0
            for t in range(A.shape[1]):
                s ^= int(A[i, t]) & int(B[t, j])
            out[i, j] = s
    return out


def prufer_trees(n: int):
    """Edge lists of all labelled trees on n >= 1 vertices."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        edges = []
        for v in seq:
            leaf = min(u for u in range(n) if degree[u] == 1)
            edges.append((leaf, v))
            degree[leaf] -= 1
            degree[v] -= 1
        u, w = [x for x in range(n) if degree[x] == 1]
        edges.append((u, w))
        yield edges


def tree_canonical(n: int, edges) -> str:
    """AHU canonical string of an unrooted tree (rooted at its centre(s))."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    centres = layer

    def enc(v, parent):
        return "(" + "".join(sorted(enc(u, v) for u in adj[v] if u != parent)) + ")"

    return min(enc(c, -1) for c in centres)


def unlabeled_trees(n: int) -> list[list[tuple[int, int]]]:
    """One representative per isomorphism class, found by exhausting Pruefer codes."""
    seen = {}
    for edges in prufer_trees(n):
        key = tree_canonical(n, edges)
        seen.setdefault(key, edges)
    return list(seen.values())


def laplacian_mod2(n: int, edges) -> np.ndarray:
    L = np.zeros((n, n), dtype=np.int64)
    for u, v in edges:
        L[u, v] -= 1
        L[v, u] -= 1
        L[u, u] += 1
        L[v, v] += 1
    return (L & 1).astype(np.uint8)


def bfs_distances(adj: list[list[int]], s: int) -> list[float]:
    dist = [math.inf] * len(adj)
    dist[s] = 0
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            for u in adj[v]:
                if dist[u] == math.inf:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    return dist
