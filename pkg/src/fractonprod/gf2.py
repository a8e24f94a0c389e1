"""Linear algebra over GF(2).

Matrices are numpy ``uint8`` arrays holding 0/1 entries; vectors are 1-D
arrays of the same kind. Row reduction runs on a bit-packed copy where column
``j`` lives in bit ``j % 64`` of word ``j // 64``. Sparse construction goes
through :mod:`scipy.sparse` and is converted explicitly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

INFINITY = math.inf
"""Distance of a code with no nonzero codeword (and of disconnected vertices)."""

_WORD = 64


def as_bits(M) -> np.ndarray:
    """Copy ``M`` (array-like or sparse) into a 2-D uint8 array reduced mod 2."""
    if sp.issparse(M):
        M = M.toarray()
    A = np.asarray(M)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {A.shape}")
    return (A.astype(np.int64, copy=False) & 1).astype(np.uint8)


def as_vector(v) -> np.ndarray:
    a = np.asarray(v)
    if a.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {a.shape}")
    return (a.astype(np.int64, copy=False) & 1).astype(np.uint8)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.uint8)


################################################################################
# packing


def n_words(ncols: int) -> int:
    return max(1, -(-ncols // _WORD))


def pack_rows(M: np.ndarray) -> np.ndarray:
    """Pack the rows of a 0/1 matrix into uint64 words."""
    M = np.ascontiguousarray(M, dtype=np.uint8)
    rows, cols = M.shape
    W = n_words(cols)
    packed = np.packbits(M, axis=1, bitorder="little")
    out = np.zeros((rows, W * 8), dtype=np.uint8)
    out[:, : packed.shape[1]] = packed
    return out.view("<u8").reshape(rows, W)


def unpack_rows(P: np.ndarray, ncols: int) -> np.ndarray:
    P = np.ascontiguousarray(P, dtype="<u8")
    bits = np.unpackbits(P.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :ncols].astype(np.uint8)


def popcount(P: np.ndarray) -> np.ndarray:
    """Hamming weight of each packed row (last axis summed)."""
    return np.bitwise_count(P).sum(axis=-1, dtype=np.int64)


def _rref_packed(P: np.ndarray, ncols: int, col_order: Sequence[int] | None = None):
    """Reduced row echelon form of packed rows.

    Returns ``(R, pivots)`` where ``R`` holds only the ``rank`` nonzero rows and
    ``pivots[i]`` is the column of the leading one of ``R[i]``. Columns are
    visited in ``col_order`` (default: ascending), so pivots appear in that order.
    """
    A = np.array(P, dtype=np.uint64, copy=True)
    m = A.shape[0]
    pivots: list[int] = []
    r = 0
    ordered = col_order is None
    cols = range(ncols) if ordered else col_order
    for col in cols:
        if r == m:
            break
        w, b = divmod(int(col), _WORD)
        mask = np.uint64(1 << b)
        hits = np.flatnonzero(A[r:, w] & mask)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        rows = np.flatnonzero(A[:, w] & mask)
        rows = rows[rows != r]
        if rows.size:
            # with ascending order the pivot row is zero left of ``col``
            lo = w if ordered else 0
            A[rows, lo:] ^= A[r, lo:]
        pivots.append(int(col))
        r += 1
    return A[:r], pivots


def rref(M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    M = as_bits(M)
    R, pivots = _rref_packed(pack_rows(M), M.shape[1])
    return unpack_rows(R, M.shape[1]), pivots


################################################################################
# rank, kernels, solving


def rank(M) -> int:
    """Dimension of the row space of ``M`` over GF(2)."""
    M = as_bits(M)
    if M.size == 0:
        return 0
    # eliminate along the shorter side
    if M.shape[0] > M.shape[1]:
        M = M.T
    return len(_rref_packed(pack_rows(M), M.shape[1])[1])


def kernel_basis(M) -> np.ndarray:
    """Basis of ``{v : M v = 0}`` as the rows of a ``(cols - rank) x cols`` array."""
    M = as_bits(M)
    n = M.shape[1]
    R, pivots = _rref_packed(pack_rows(M), n)
    free = np.setdiff1d(np.arange(n), pivots)
    K = np.zeros((free.size, n), dtype=np.uint8)
    K[np.arange(free.size), free] = 1
    if pivots:
        K[:, pivots] = unpack_rows(R, n)[:, free].T
    return K


def cokernel_basis(M) -> np.ndarray:
    """Basis of the left kernel ``{u : u M = 0}``."""
    return kernel_basis(as_bits(M).T)


def row_basis(M) -> np.ndarray:
    return rref(M)[0]


def solve(M, s) -> np.ndarray | None:
    """Return some ``e`` with ``M e = s``, or ``None`` if ``s`` is not in the image."""
    M = as_bits(M)
    s = as_vector(s)
    if s.shape[0] != M.shape[0]:
        raise ValueError(f"syndrome length {s.shape[0]} does not match {M.shape[0]} rows")
    n = M.shape[1]
    aug = np.concatenate([M, s[:, None]], axis=1)
    R, pivots = _rref_packed(pack_rows(aug), n + 1)
    if pivots and pivots[-1] == n:
        return None
    e = np.zeros(n, dtype=np.uint8)
    if pivots:
        e[pivots] = unpack_rows(R, n + 1)[:, n]
    return e


def in_row_space(v, M) -> bool:
    """Whether ``v`` is a GF(2) combination of the rows of ``M``."""
    return solve(as_bits(M).T, v) is not None


################################################################################
# matrix products and assembly


def matmul(A, B) -> np.ndarray:
    A, B = as_bits(A), as_bits(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    prod = sp.csr_matrix(A, dtype=np.int64) @ sp.csr_matrix(B, dtype=np.int64)
    return (prod.toarray() & 1).astype(np.uint8)


def matvec(A, v) -> np.ndarray:
    A, v = as_bits(A), as_vector(v)
    if A.shape[1] != v.shape[0]:
        raise ValueError(f"cannot multiply {A.shape} by vector of length {v.shape[0]}")
    return ((A.astype(np.int64) @ v.astype(np.int64)) & 1).astype(np.uint8)


def transpose(M) -> np.ndarray:
    return np.ascontiguousarray(as_bits(M).T)


def kronecker(A, B) -> np.ndarray:
    A, B = as_bits(A), as_bits(B)
    return sp.kron(sp.csr_matrix(A), sp.csr_matrix(B), format="csr").toarray().astype(np.uint8)


def hconcat(blocks: Iterable) -> np.ndarray:
    blocks = [as_bits(b) for b in blocks]
    if len({b.shape[0] for b in blocks}) > 1:
        raise ValueError("blocks must have equal row counts")
    return np.concatenate(blocks, axis=1)


def vconcat(blocks: Iterable) -> np.ndarray:
    blocks = [as_bits(b) for b in blocks]
    if len({b.shape[1] for b in blocks}) > 1:
        raise ValueError("blocks must have equal column counts")
    return np.concatenate(blocks, axis=0)


def block(grid: Sequence[Sequence]) -> np.ndarray:
    """Assemble a block matrix; ``None`` or ``0`` entries become zero blocks.

    Zero blocks take their shape from the other blocks in the same block row
    and block column, so every block row and block column needs at least one
    explicit matrix.
    """
    nr, nc = len(grid), len(grid[0])
    if any(len(row) != nc for row in grid):
        raise ValueError("ragged block grid")
    heights: list[int | None] = [None] * nr
    widths: list[int | None] = [None] * nc
    for i, row in enumerate(grid):
        for j, blk in enumerate(row):
            if _is_zero_block(blk):
                continue
            h, w = np.shape(blk)
            if heights[i] not in (None, h) or widths[j] not in (None, w):
                raise ValueError(f"block ({i}, {j}) has inconsistent shape {(h, w)}")
            heights[i], widths[j] = h, w
    if None in heights or None in widths:
        raise ValueError("every block row and column needs one explicit block")
    rows = []
    for i, row in enumerate(grid):
        rows.append(
            hconcat(
                zeros(heights[i], widths[j]) if _is_zero_block(blk) else blk
                for j, blk in enumerate(row)
            )
        )
    return vconcat(rows)


def _is_zero_block(blk) -> bool:
    return blk is None or (np.isscalar(blk) and blk == 0)


def is_zero(M) -> bool:
    return not np.any(as_bits(M))


def products_vanish(A, B) -> bool:
    """Whether ``A @ B.T == 0`` over GF(2), computed sparsely."""
    A, B = sp.csr_matrix(as_bits(A), dtype=np.int64), sp.csr_matrix(as_bits(B), dtype=np.int64)
    prod = (A @ B.T).tocoo()
    return not np.any(prod.data & 1)


def to_sparse(M) -> sp.csr_matrix:
    return sp.csr_matrix(as_bits(M))


def from_sparse(S) -> np.ndarray:
    return as_bits(S)


def random_matrix(rows: int, cols: int, rng: np.random.Generator, density: float = 0.5) -> np.ndarray:
    return (rng.random((rows, cols)) < density).astype(np.uint8)


################################################################################
# minimum weight search


@dataclass(frozen=True)
class MinWeight:
    """Result of a minimum-weight search.

    ``weight`` is :data:`INFINITY` when there is no admissible vector, in which
    case ``vector`` is ``None``. ``exact`` is False when ``weight`` is only an
    upper bound found by randomized search.
    """

    weight: float | int
    vector: np.ndarray | None
    exact: bool


EXHAUSTIVE_K = 28
DEFAULT_BUDGET = 5_000_000


def min_weight_nonzero(
    M,
    exclude=None,
    *,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    exhaustive_k: int = EXHAUSTIVE_K,
    isd_iterations: int = 200,
) -> MinWeight:
    """Minimum Hamming weight over ``kernel(M)`` minus ``rowspace(exclude)``.

    Without ``exclude`` this is the distance of the code with parity checks
    ``M``; with ``exclude = H_Z`` and ``M = H_X`` it is the weight of the
    lightest Z-type logical of a CSS code.

    Kernels of dimension up to ``exhaustive_k`` (no exclusion) always get an
    exact answer, by full enumeration if a short information-set pass does not
    settle it. Otherwise a Brouwer-Zimmermann enumeration over
    disjoint information sets runs until its lower bound meets the best weight
    found; ``budget`` caps the number of enumerated combinations. If the cap
    is hit, randomized information-set sampling (seeded) supplies an upper
    bound and ``exact`` is False.
    """
    M = as_bits(M)
    n = M.shape[1]
    G = kernel_basis(M)
    k = G.shape[0]
    if k == 0:
        return MinWeight(INFINITY, None, True)
    Gp = pack_rows(G)
    T = None
    if exclude is not None:
        E = as_bits(exclude)
        if E.shape[1] != n:
            raise ValueError("exclude must have the same number of columns as M")
        T = _coset_test_rows(M, E)
        if T.shape[0] == 0:
            return MinWeight(INFINITY, None, True)
    if T is None and k <= exhaustive_k:
        # a cheap information-set pass often settles it before full enumeration
        best, vec, exact = _brouwer_zimmermann(Gp, n, T, min(budget, 1 << max(0, k - 2)))
        if not exact:
            best, vec = _enumerate_span(Gp)
        return MinWeight(best, unpack_rows(vec[None], n)[0], True)
    best, vec, exact = _brouwer_zimmermann(Gp, n, T, budget)
    if not exact:
        rng = np.random.default_rng(seed)
        w2, v2 = _random_isd(G, T, rng, isd_iterations)
        if w2 < best:
            best, vec = w2, v2
    vector = None if vec is None else unpack_rows(vec[None], n)[0]
    return MinWeight(best, vector, exact)


def _coset_test_rows(M: np.ndarray, E: np.ndarray) -> np.ndarray:
    """Packed rows ``T`` such that ``v`` in ker(M) lies in rowspace(E) iff ``T v = 0``.

    ``T`` spans (ker E + rowspace M) / rowspace M, so it has one row per
    independent coset of rowspace(E) inside ker(M) when the rows of ``E`` lie
    in ker(M).
    """
    n = M.shape[1]
    KE = pack_rows(kernel_basis(E))
    RM, piv = _rref_packed(pack_rows(M), n)
    for row, col in zip(RM, piv):
        w, b = divmod(col, _WORD)
        hits = np.flatnonzero(KE[:, w] & np.uint64(1 << b))
        if hits.size:
            KE[hits] ^= row
    T, _ = _rref_packed(KE, n)
    return T


def _is_logical(C: np.ndarray, T: np.ndarray | None) -> np.ndarray:
    """Mask of packed rows in ``C`` that are nonzero and outside the excluded space."""
    nonzero = C.any(axis=1)
    if T is None:
        return nonzero
    out = np.zeros(C.shape[0], dtype=bool)
    step = max(1, 2_000_000 // max(1, T.size))
    for lo in range(0, C.shape[0], step):
        chunk = C[lo : lo + step]
        parity = np.bitwise_count(chunk[:, None, :] & T[None, :, :]).sum(axis=-1) & 1
        out[lo : lo + step] = parity.any(axis=1)
    return out & nonzero


def _enumerate_span(Gp: np.ndarray) -> tuple[int, np.ndarray]:
    """Lightest nonzero vector in the span of packed rows ``Gp`` by full enumeration."""
    k = Gp.shape[0]
    lo_k = min(k, 12)
    table = np.zeros((1 << lo_k, Gp.shape[1]), dtype=np.uint64)
    for j in range(lo_k):
        table[1 << j : 1 << (j + 1)] = table[: 1 << j] ^ Gp[j]
    best, best_vec = None, None
    hi_rows = Gp[lo_k:]
    base = np.zeros(Gp.shape[1], dtype=np.uint64)
    for code in range(1 << (k - lo_k)):
        if code:
            # Gray code: flip the row at the lowest set bit
            base = base ^ hi_rows[(code & -code).bit_length() - 1]
        cand = table ^ base
        wts = popcount(cand)
        if code == 0:
            wts[0] = np.iinfo(np.int64).max
        i = int(np.argmin(wts))
        if best is None or wts[i] < best:
            best, best_vec = int(wts[i]), cand[i].copy()
    return best, best_vec


def _information_sets(Gp: np.ndarray, n: int) -> list[tuple[np.ndarray, int]]:
    """Generator matrices systematic on disjoint column sets, with those sets' ranks."""
    sets = []
    remaining = list(range(n))
    used = np.zeros(n, dtype=bool)
    k = Gp.shape[0]
    while remaining:
        order = remaining + [c for c in range(n) if used[c]]
        R, piv = _rref_packed(Gp, n, col_order=order)
        info = [c for c in piv if not used[c]]
        if not info:
            break
        sets.append((R, len(info)))
        used[info] = True
        remaining = [c for c in remaining if not used[c]]
        if len(info) < k and not remaining:
            break
    return sets


def _combination_chunks(k: int, w: int, size: int):
    it = itertools.combinations(range(k), w)
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.intp)


def _brouwer_zimmermann(Gp, n, T, budget):
    k = Gp.shape[0]
    sets = _information_sets(Gp, n)
    best: float = INFINITY
    best_vec = None
    spent = 0
    for w in range(1, k + 1):
        active = [(R, r) for R, r in sets if w + 1 - (k - r) > 0 or r == k]
        cost = math.comb(k, w) * len(active)
        if spent + cost > budget:
            return best, best_vec, False
        spent += cost
        for R, _ in active:
            chunk_size = max(1, 1_000_000 // (w * Gp.shape[1]))
            for idx in _combination_chunks(k, w, chunk_size):
                C = np.bitwise_xor.reduce(R[idx], axis=1)
                ok = _is_logical(C, T)
                if not ok.any():
                    continue
                wts = np.where(ok, popcount(C), np.iinfo(np.int64).max)
                i = int(np.argmin(wts))
                if wts[i] < best:
                    best, best_vec = int(wts[i]), C[i].copy()
        lower = sum(max(0, w + 1 - (k - r)) for _, r in sets)
        if best <= lower or w == k:
            return best, best_vec, True
    return best, best_vec, True


def _random_isd(G: np.ndarray, T, rng: np.random.Generator, iterations: int):
    """Upper bound from random information sets: rows and row pairs of systematic forms."""
    k, n = G.shape
    Gp = pack_rows(G)
    best: float = INFINITY
    best_vec = None
    pairs = np.array(list(itertools.combinations(range(k), 2)), dtype=np.intp).reshape(-1, 2)
    for _ in range(iterations):
        perm = rng.permutation(n)
        R, _ = _rref_packed(Gp, n, col_order=perm)
        cands = [R]
        if 0 < pairs.shape[0] <= 20_000:
            cands.append(R[pairs[:, 0]] ^ R[pairs[:, 1]])
        for C in cands:
            ok = _is_logical(C, T)
            if not ok.any():
                continue
            wts = np.where(ok, popcount(C), np.iinfo(np.int64).max)
            i = int(np.argmin(wts))
            if wts[i] < best:
                best, best_vec = int(wts[i]), C[i].copy()
    return best, best_vec


################################################################################
# text format


def format_matrix(M) -> str:
    """Serialize as a ``rows cols`` header then one line of column indices per row."""
    M = as_bits(M)
    lines = [f"{M.shape[0]} {M.shape[1]}"]
    for row in M:
        lines.append(" ".join(str(int(c)) for c in np.flatnonzero(row)))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    lines = text.split("\n")
    try:
        rows, cols = (int(t) for t in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad matrix header: {lines[0]!r}") from exc
    body = lines[1 : 1 + rows]
    if len(body) < rows:
        body += [""] * (rows - len(body))
    M = np.zeros((rows, cols), dtype=np.uint8)
    for i, line in enumerate(body):
        idx = [int(t) for t in line.split()]
        if any(c < 0 or c >= cols for c in idx):
            raise ValueError(f"column index out of range in row {i}")
        if idx != sorted(set(idx)):
            raise ValueError(f"row {i} indices must be ascending and distinct")
        M[i, idx] = 1
    return M


def write_matrix(path, M) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_matrix(M))


def read_matrix(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def support(v) -> list[int]:
    return [int(i) for i in np.flatnonzero(as_vector(v))]


def from_support(idx: Iterable[int], length: int) -> np.ndarray:
    v = np.zeros(length, dtype=np.uint8)
    v[list(idx)] = 1
    return v
