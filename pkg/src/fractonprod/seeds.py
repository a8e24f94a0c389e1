"""Classical seed codes: repetition, Laplacian, typical LDPC and pinwheel."""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass, field

import numpy as np

from fractonprod import gf2
from fractonprod import pinwheel as pw
from fractonprod.graphs import Graph, TannerGraph, configuration_model_bipartite, matrix_from_tanner, tanner_from_matrix


@dataclass(frozen=True, eq=False)
class ClassicalCode:
    """Linear binary code with parity-check matrix ``H`` (m x n).

    ``k`` and ``kT`` are computed on construction. Distances are searched for
    lazily and cached, since they can be expensive.
    """

    H: np.ndarray
    name: str = "code"
    params: dict = field(default_factory=dict)
    seed: int | None = None
    extra: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        H = gf2.as_bits(self.H)
        H.setflags(write=False)
        object.__setattr__(self, "H", H)
        r = gf2.rank(H)
        object.__setattr__(self, "rank", r)

    @property
    def m(self) -> int:
        return self.H.shape[0]

    @property
    def n(self) -> int:
        return self.H.shape[1]

    @property
    def k(self) -> int:
        return self.n - self.rank

    @property
    def kT(self) -> int:
        """Number of logical bits of the transpose code (independent meta-checks)."""
        return self.m - self.rank

    @functools.cached_property
    def tanner(self) -> TannerGraph:
        return tanner_from_matrix(self.H)

    @functools.cached_property
    def distance_result(self) -> gf2.MinWeight:
        return gf2.min_weight_nonzero(self.H)

    @functools.cached_property
    def transpose_distance_result(self) -> gf2.MinWeight:
        return gf2.min_weight_nonzero(self.H.T)

    @property
    def d(self):
        return self.distance_result.weight

    @property
    def dT(self):
        return self.transpose_distance_result.weight

    def set_distance(self, result: gf2.MinWeight, transpose: bool = False) -> None:
        """Store a distance computed elsewhere (e.g. with a larger budget)."""
        key = "transpose_distance_result" if transpose else "distance_result"
        self.__dict__[key] = result

    def transpose(self) -> ClassicalCode:
        return ClassicalCode(self.H.T, name=f"{self.name}^T", params=dict(self.params), seed=self.seed)

    def metadata(self, with_distance: bool = True) -> dict:
        meta = {
            "construction": self.name,
            "parameters": self.params,
            "seed": self.seed,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "kT": self.kT,
        }
        if with_distance:
            for key, res in (("d", self.distance_result), ("dT", self.transpose_distance_result)):
                meta[key] = None if math.isinf(res.weight) else int(res.weight)
                meta[f"{key}_exact"] = res.exact
        meta.update(self.extra)
        return meta

    def __repr__(self) -> str:
        return f"ClassicalCode({self.name}, n={self.n}, m={self.m}, k={self.k}, kT={self.kT})"


def save_code(code: ClassicalCode, stem: str, with_distance: bool = True) -> None:
    """Write ``stem.mat`` (matrix text format) and ``stem.json`` (metadata)."""
    gf2.write_matrix(f"{stem}.mat", code.H)
    with open(f"{stem}.json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump(code.metadata(with_distance), fh, indent=2, sort_keys=True, default=_json_default)
        fh.write("\n")


def load_code(stem: str) -> ClassicalCode:
    H = gf2.read_matrix(f"{stem}.mat")
    try:
        with open(f"{stem}.json", encoding="utf-8") as fh:
            meta = json.load(fh)
    except FileNotFoundError:
        meta = {}
    return ClassicalCode(H, name=meta.get("construction", "code"), params=meta.get("parameters", {}), seed=meta.get("seed"))


def _json_default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj)}")


################################################################################
# constructions


def repetition_code(n: int, cyclic: bool = True) -> ClassicalCode:
    """Checks ``e_i + e_{i+1}``; the cyclic version closes the chain."""
    if n < 2:
        raise ValueError("repetition code needs n >= 2")
    m = n if cyclic else n - 1
    H = np.zeros((m, n), dtype=np.uint8)
    for i in range(m):
        H[i, i] = 1
        H[i, (i + 1) % n] ^= 1
    return ClassicalCode(H, "repetition", {"n": n, "cyclic": cyclic})


def laplacian_matrix(g: Graph) -> np.ndarray:
    return (g.laplacian() & 1).astype(np.uint8)


def laplacian_code(g: Graph, name: str = "laplacian", seed: int | None = None, **params) -> ClassicalCode:
    """``H = L mod 2`` for the graph Laplacian ``L = D - A``.

    ``seed`` defaults to the seed recorded in the graph's metadata.
    """
    if not g.is_connected():
        raise ValueError("Laplacian codes are defined on connected graphs")
    seed = g.meta.get("seed") if seed is None else seed
    return ClassicalCode(laplacian_matrix(g), name, {"n": g.n, **params}, seed=seed, extra={"graph_meta": _graph_summary(g)})


def _graph_summary(g: Graph) -> dict:
    keys = ("resamples", "removed_edges", "min_degree")
    return {k: g.meta[k] for k in keys if k in g.meta}


def ising_code(g: Graph) -> ClassicalCode:
    """Nearest-neighbour Ising code: one check ``e_u + e_v`` per edge ``uv``."""
    H = np.zeros((g.num_edges, g.n), dtype=np.uint8)
    for i, (u, v) in enumerate(g.edges):
        H[i, u] = H[i, v] = 1
    return ClassicalCode(H, "ising", {"n": g.n})


def typical_ldpc(t: TannerGraph) -> ClassicalCode:
    """Code whose Tanner graph is ``t`` (normally a configuration-model sample)."""
    H = matrix_from_tanner(t)
    params = {"n": t.n, "m": t.m}
    for key in ("d_variable", "d_check"):
        if key in t.meta:
            params[key] = t.meta[key]
    return ClassicalCode(H, "typical-ldpc", params, seed=t.meta.get("seed"))


def random_typical_ldpc(n: int, d_variable: int, d_check: int, seed: int) -> ClassicalCode:
    m, rem = divmod(n * d_variable, d_check)
    if rem:
        raise ValueError("n * d_variable must be divisible by d_check")
    return typical_ldpc(configuration_model_bipartite(n, m, d_variable, d_check, seed))


def frustrated_laplacian(g: Graph) -> np.ndarray:
    """``(L - I) mod 2``: every row and column has odd weight."""
    return ((g.laplacian() - np.eye(g.n, dtype=np.int64)) & 1).astype(np.uint8)


def depleted_checks(boundary: list[int], p: int, offset: int = 0) -> list[int]:
    """Every ``p``-th boundary vertex along the walk, starting at ``offset``."""
    return [v for i, v in enumerate(boundary) if i % p == offset % p]


def pinwheel_code(N: int, p: int, offset: int = 0, tiling: pw.TilingGraph | None = None) -> ClassicalCode:
    """Pinwheel code at generation ``N`` with boundary depletion period ``p``.

    Bits and checks sit on the tiling vertices with ``H = (L - I) mod 2``;
    the checks of every ``p``-th boundary vertex are then deleted. Row order
    follows vertex order with the deleted rows removed.
    """
    if N < 2 or p < 2:
        raise ValueError("pinwheel code needs N >= 2 and p >= 2")
    tg = pw.generate(N) if tiling is None else tiling
    Ht = frustrated_laplacian(tg.graph)
    removed = depleted_checks(pw.boundary_vertices(tg), p, offset)
    keep = np.setdiff1d(np.arange(tg.n), removed)
    code = ClassicalCode(
        Ht[keep],
        "pinwheel",
        {"N": N, "p": p, "offset": offset},
        extra={"removed_checks": sorted(int(v) for v in removed)},
    )
    code.__dict__["tiling"] = tg
    code.__dict__["check_vertices"] = keep
    return code


def boundary_logical_guard(code: ClassicalCode, radius: int = 2, budget: int = 2_000_000) -> dict:
    """Look for short codewords living near the boundary of a pinwheel code.

    Searches the lightest codeword supported within graph distance ``radius``
    of the boundary and flags it if its weight is below ``sqrt(n) / 2``.
    """
    from scipy.sparse import csgraph

    tg: pw.TilingGraph = code.__dict__["tiling"]
    dist = csgraph.shortest_path(tg.graph.adjacency(), unweighted=True, directed=False, indices=np.flatnonzero(tg.boundary))
    near = np.flatnonzero(dist.min(axis=0) <= radius)
    res = gf2.min_weight_nonzero(code.H[:, near], budget=budget)
    threshold = math.sqrt(code.n) / 2
    found = not math.isinf(res.weight) and res.weight < threshold
    return {
        "radius": radius,
        "region_size": int(near.size),
        "lightest_weight": None if math.isinf(res.weight) else int(res.weight),
        "exact": res.exact,
        "threshold": threshold,
        "short_boundary_logical": bool(found),
    }
