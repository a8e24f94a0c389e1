"""Simple graphs, Tanner graphs, configuration-model ensembles and graph metrics."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

from fractonprod.gf2 import INFINITY, as_bits

MAX_RESAMPLES = 1000
_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One step of the SplitMix64 mixer; used to derive per-trial seeds."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def trial_seed(master_seed: int, trial: int) -> int:
    return splitmix64((master_seed ^ trial) & _MASK64)


class GraphError(RuntimeError):
    """Raised when a random graph cannot be generated as requested."""


################################################################################
# simple graphs


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``edges`` is an ``(E, 2)`` array of pairs ``u < v``, sorted and unique.
    ``meta`` records how a random graph was generated.
    """

    n: int
    edges: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        e = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= self.n):
            raise ValueError("edge endpoint out of range")
        if np.any(e[:, 0] == e[:, 1]):
            raise ValueError("self-loops are not allowed")
        e = np.sort(e, axis=1)
        e = np.unique(e, axis=0)
        object.__setattr__(self, "edges", e)

    @classmethod
    def from_edges(cls, n: int, edges, **meta) -> Graph:
        return cls(n, np.asarray(list(edges), dtype=np.int64).reshape(-1, 2), dict(meta))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and np.array_equal(self.edges, other.edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> sp.csr_matrix:
        u, v = self.edges[:, 0], self.edges[:, 1]
        data = np.ones(2 * len(u), dtype=np.int64)
        return sp.csr_matrix((data, (np.r_[u, v], np.r_[v, u])), shape=(self.n, self.n))

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.n)

    def neighbors(self, v: int) -> np.ndarray:
        A = self.adjacency()
        return A.indices[A.indptr[v] : A.indptr[v + 1]]

    def is_connected(self) -> bool:
        return _is_connected(self.adjacency(), self.n)

    def laplacian(self) -> np.ndarray:
        """Integer graph Laplacian ``D - A``."""
        A = self.adjacency().toarray()
        return np.diag(A.sum(axis=1)) - A


def _is_connected(adj: sp.spmatrix, n: int) -> bool:
    if n <= 1:
        return True
    ncomp, _ = csgraph.connected_components(adj, directed=False)
    return ncomp == 1


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def torus_graph(Lx: int, Ly: int | None = None) -> Graph:
    """Periodic square lattice; vertex ``(x, y)`` has index ``y * Lx + x``."""
    Ly = Lx if Ly is None else Ly
    idx = lambda x, y: (y % Ly) * Lx + (x % Lx)  # noqa: E731
    edges = []
    for y in range(Ly):
        for x in range(Lx):
            edges.append((idx(x, y), idx(x + 1, y)))
            edges.append((idx(x, y), idx(x, y + 1)))
    edges = [(u, v) for u, v in edges if u != v]
    return Graph.from_edges(Lx * Ly, edges)


################################################################################
# configuration models


def sample_degrees(n: int, rng: np.random.Generator, low: int = 3, high: int = 5) -> np.ndarray:
    """Degrees uniform in ``[low, high]``, with one bump to make the sum even."""
    deg = rng.integers(low, high + 1, size=n)
    if deg.sum() % 2:
        bumpable = np.flatnonzero(deg < high)
        if bumpable.size == 0:
            raise GraphError("cannot make the degree sum even within the bounds")
        deg[rng.choice(bumpable)] += 1
    return deg


def configuration_model(degrees, seed: int, max_resamples: int = MAX_RESAMPLES) -> Graph:
    """Random simple connected graph from a degree sequence.

    Half-edges are paired uniformly at random; self-loops and repeated pairs
    are dropped without repair, and disconnected outcomes are resampled.
    """
    degrees = np.asarray(degrees, dtype=np.int64)
    if np.any(degrees < 0) or degrees.sum() % 2:
        raise GraphError("degree sequence must be nonnegative with an even sum")
    n = len(degrees)
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), degrees)
    for attempt in range(max_resamples):
        pairs = rng.permutation(stubs).reshape(-1, 2)
        keep = pairs[pairs[:, 0] != pairs[:, 1]]
        g = Graph(n, keep)
        if g.is_connected():
            deg = g.degrees()
            g.meta.update(
                seed=seed,
                resamples=attempt,
                requested_degrees=degrees.tolist(),
                removed_edges=int(len(pairs) - g.num_edges),
                min_degree=int(deg.min()) if n else 0,
            )
            return g
    raise GraphError(f"no connected graph after {max_resamples} resamples")


def laplacian_ensemble_graph(n: int, seed: int, low: int = 3, high: int = 5) -> Graph:
    """Configuration-model graph with degrees drawn uniformly from ``low..high``."""
    rng = np.random.default_rng(seed)
    deg = sample_degrees(n, rng, low, high)
    return configuration_model(deg, int(rng.integers(2**63)))


################################################################################
# Tanner graphs


@dataclass(frozen=True, eq=False)
class TannerGraph:
    """Bipartite bit/check graph; ``edges`` holds ``(check, bit)`` pairs.

    As a plain graph, bits are vertices ``0..n-1`` and checks ``n..n+m-1``.
    """

    n: int
    m: int
    edges: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        e = np.unique(np.asarray(self.edges, dtype=np.int64).reshape(-1, 2), axis=0)
        if e.size and (e[:, 0].max() >= self.m or e[:, 1].max() >= self.n or e.min() < 0):
            raise ValueError("edge endpoint out of range")
        object.__setattr__(self, "edges", e)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TannerGraph)
            and (self.n, self.m) == (other.n, other.m)
            and np.array_equal(self.edges, other.edges)
        )

    @property
    def bit_degrees(self) -> np.ndarray:
        return np.bincount(self.edges[:, 1], minlength=self.n)

    @property
    def check_degrees(self) -> np.ndarray:
        return np.bincount(self.edges[:, 0], minlength=self.m)

    @property
    def kappa_b(self) -> int:
        """Largest number of checks acting on one bit."""
        return int(self.bit_degrees.max(initial=0))

    @property
    def kappa_c(self) -> int:
        """Largest number of bits in one check."""
        return int(self.check_degrees.max(initial=0))

    @property
    def kappa(self) -> int:
        return max(self.kappa_b, self.kappa_c)

    @property
    def num_vertices(self) -> int:
        return self.n + self.m

    def adjacency(self) -> sp.csr_matrix:
        c, b = self.edges[:, 0] + self.n, self.edges[:, 1]
        data = np.ones(2 * len(c), dtype=np.int64)
        N = self.n + self.m
        return sp.csr_matrix((data, (np.r_[c, b], np.r_[b, c])), shape=(N, N))

    def is_connected(self) -> bool:
        return _is_connected(self.adjacency(), self.n + self.m)


def tanner_from_matrix(H) -> TannerGraph:
    H = as_bits(H)
    rows, cols = np.nonzero(H)
    return TannerGraph(H.shape[1], H.shape[0], np.stack([rows, cols], axis=1))


def matrix_from_tanner(t: TannerGraph) -> np.ndarray:
    H = np.zeros((t.m, t.n), dtype=np.uint8)
    H[t.edges[:, 0], t.edges[:, 1]] = 1
    return H


def configuration_model_bipartite(
    n: int, m: int, d_variable: int, d_check: int, seed: int, max_resamples: int = MAX_RESAMPLES
) -> TannerGraph:
    """Random connected Tanner graph with ``n`` bits of degree ``d_variable``
    and ``m`` checks of degree ``d_check`` (parallel edges dropped)."""
    if n * d_variable != m * d_check:
        raise GraphError(f"n*D_variable = {n * d_variable} != m*D_check = {m * d_check}")
    rng = np.random.default_rng(seed)
    bit_stubs = np.repeat(np.arange(n), d_variable)
    check_stubs = np.repeat(np.arange(m), d_check)
    for attempt in range(max_resamples):
        pairs = np.stack([rng.permutation(check_stubs), bit_stubs], axis=1)
        t = TannerGraph(n, m, pairs)
        if t.is_connected():
            t.meta.update(
                seed=seed,
                resamples=attempt,
                d_variable=d_variable,
                d_check=d_check,
                removed_edges=int(len(pairs) - len(t.edges)),
            )
            return t
    raise GraphError(f"no connected Tanner graph after {max_resamples} resamples")


################################################################################
# metrics


def distances_from(g: Graph | TannerGraph, source: int) -> np.ndarray:
    """BFS distances from ``source`` (float array, ``inf`` where unreachable)."""
    return csgraph.shortest_path(g.adjacency(), unweighted=True, directed=False, indices=source)


def graph_distance(g: Graph | TannerGraph, u: int, v: int) -> float:
    d = distances_from(g, u)[v]
    return INFINITY if np.isinf(d) else int(d)


def ball(g: Graph | TannerGraph, center: int, radius: int) -> set[int]:
    d = distances_from(g, center)
    return {int(i) for i in np.flatnonzero(d <= radius)}


################################################################################
# text format


def format_graph(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    n = int(lines[0])
    edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    return Graph.from_edges(n, edges)
