"""CSS codes from classical seeds: hypergraph, lifted and threefold products.

Qubit ordering for the hypergraph product: the left block holds
``(bit_1, bit_2)`` pairs, the right block ``(check_1, check_2)`` pairs, both
row-major. Lifted products expand each ring element into an ``L^D x L^D``
circulant block; group elements are indexed row-major in their exponents.
"""

from __future__ import annotations

import functools
import itertools
import json
import math
import re
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from fractonprod import gf2
from fractonprod.seeds import ClassicalCode


class CommutationError(AssertionError):
    """Raised when a construction produces non-commuting X and Z checks."""


@dataclass(frozen=True, eq=False)
class CssCode:
    """CSS code with X checks ``hx`` and Z checks ``hz`` on ``n`` qubits."""

    hx: np.ndarray
    hz: np.ndarray
    name: str = "css"
    params: dict = field(default_factory=dict)
    seeds: tuple = ()

    def __post_init__(self):
        hx, hz = gf2.as_bits(self.hx), gf2.as_bits(self.hz)
        if hx.shape[1] != hz.shape[1]:
            raise ValueError("hx and hz act on different numbers of qubits")
        if not gf2.products_vanish(hx, hz):
            raise CommutationError(f"{self.name}: hx @ hz.T != 0")
        hx.setflags(write=False)
        hz.setflags(write=False)
        object.__setattr__(self, "hx", hx)
        object.__setattr__(self, "hz", hz)
        object.__setattr__(self, "rank_x", gf2.rank(hx))
        object.__setattr__(self, "rank_z", gf2.rank(hz))

    @property
    def n(self) -> int:
        return self.hx.shape[1]

    @property
    def k(self) -> int:
        return self.n - self.rank_x - self.rank_z

    @property
    def kxT(self) -> int:
        """Redundant X checks, ``m_X - rank(H_X)``."""
        return self.hx.shape[0] - self.rank_x

    @property
    def kzT(self) -> int:
        return self.hz.shape[0] - self.rank_z

    @property
    def sectors(self) -> int:
        """Number of superselection sectors, ``2^(kxT + kzT)``."""
        return 2 ** (self.kxT + self.kzT)

    def commutes(self) -> bool:
        return gf2.products_vanish(self.hx, self.hz)

    @functools.cached_property
    def distance_result(self) -> tuple[gf2.MinWeight, gf2.MinWeight]:
        """Lightest (Z-type, X-type) logicals."""
        return distance_pair(self)

    @property
    def d(self):
        z, x = self.distance_result
        return min(z.weight, x.weight)

    def metadata(self) -> dict:
        return {
            "construction": self.name,
            "parameters": self.params,
            "n": self.n,
            "k": self.k,
            "mx": int(self.hx.shape[0]),
            "mz": int(self.hz.shape[0]),
            "kxT": self.kxT,
            "kzT": self.kzT,
            "sectors_log2": self.kxT + self.kzT,
            "seeds": [s.metadata(with_distance=False) for s in self.seeds],
        }

    def __repr__(self) -> str:
        return f"CssCode({self.name}, n={self.n}, k={self.k})"


def distance_pair(code: CssCode, budget: int = gf2.DEFAULT_BUDGET, seed: int = 0):
    z = gf2.min_weight_nonzero(code.hx, code.hz, budget=budget, seed=seed)
    x = gf2.min_weight_nonzero(code.hz, code.hx, budget=budget, seed=seed)
    return z, x


def save_css(code: CssCode, stem: str) -> None:
    """Write ``stem.hx``, ``stem.hz`` (matrix text format) and ``stem.json``."""
    gf2.write_matrix(f"{stem}.hx", code.hx)
    gf2.write_matrix(f"{stem}.hz", code.hz)
    with open(f"{stem}.json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump(code.metadata(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_css(stem: str) -> CssCode:
    hx, hz = gf2.read_matrix(f"{stem}.hx"), gf2.read_matrix(f"{stem}.hz")
    try:
        with open(f"{stem}.json", encoding="utf-8") as fh:
            meta = json.load(fh)
    except FileNotFoundError:
        meta = {}
    return CssCode(hx, hz, meta.get("construction", "css"), meta.get("parameters", {}))


################################################################################
# hypergraph product


def hgp(c1: ClassicalCode, c2: ClassicalCode) -> CssCode:
    """Hypergraph product.

    ``H_X = [H1 (x) I_n2 | I_m1 (x) H2^T]`` and ``H_Z = [I_n1 (x) H2 | H1^T (x) I_m2]``.
    """
    H1, H2 = sp.csr_matrix(c1.H), sp.csr_matrix(c2.H)
    m1, n1 = H1.shape
    m2, n2 = H2.shape
    I = lambda k: sp.identity(k, dtype=np.uint8, format="csr")  # noqa: E731
    hx = sp.hstack([sp.kron(H1, I(n2)), sp.kron(I(m1), H2.T)])
    hz = sp.hstack([sp.kron(I(n1), H2), sp.kron(H1.T, I(m2))])
    return CssCode(
        gf2.as_bits(hx),
        gf2.as_bits(hz),
        "hgp",
        {"seed1": c1.name, "seed2": c2.name},
        seeds=(c1, c2),
    )


@dataclass(frozen=True)
class HgpPrediction:
    n: int
    k: int
    d: float | int
    kxT: int
    kzT: int

    @property
    def sectors(self) -> int:
        return 2 ** (self.kxT + self.kzT)


def predicted_hgp_params(c1: ClassicalCode, c2: ClassicalCode, with_distance: bool = True) -> HgpPrediction:
    """Parameters of ``hgp(c1, c2)`` from the seed parameters alone.

    The distance takes the minimum over seed and transpose-seed distances,
    where a code without codewords contributes infinity.
    """
    d: float | int = gf2.INFINITY
    if with_distance:
        d = min(c1.d, c2.d, c1.dT, c2.dT)
    return HgpPrediction(
        n=c1.n * c2.n + c1.m * c2.m,
        k=c1.k * c2.k + c1.kT * c2.kT,
        d=d,
        kxT=c1.kT * c2.k,
        kzT=c1.k * c2.kT,
    )


################################################################################
# polynomials over (Z_L)^D and lifted products

_VARS = "xyzw"


@dataclass(frozen=True)
class PolynomialF2:
    """Element of the group algebra F_2[(Z_L)^D], as a set of exponent tuples."""

    L: tuple[int, ...]
    terms: frozenset

    def __post_init__(self):
        L = tuple(int(x) for x in self.L)
        terms = frozenset()
        for t in self.terms:
            t = tuple(int(a) % l for a, l in zip(t, L))
            if len(t) != len(L):
                raise ValueError("monomial dimension mismatch")
            terms = terms ^ {t}
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "terms", terms)

    @property
    def D(self) -> int:
        return len(self.L)

    @classmethod
    def one(cls, L) -> PolynomialF2:
        L = tuple(L)
        return cls(L, frozenset({(0,) * len(L)}))

    @classmethod
    def zero(cls, L) -> PolynomialF2:
        return cls(tuple(L), frozenset())

    @classmethod
    def parse(cls, expr: str, L: int | tuple[int, ...], D: int = 3) -> PolynomialF2:
        """Parse sums of monomials such as ``"1 + x + y^2 z"`` (variables x, y, z, w)."""
        L = (L,) * D if isinstance(L, int) else tuple(L)
        terms: list[tuple[int, ...]] = []
        for tok in expr.replace(" ", "").split("+"):
            if not tok:
                raise ValueError(f"empty term in {expr!r}")
            exps = [0] * len(L)
            if tok == "1":
                terms.append(tuple(exps))
                continue
            if tok == "0":
                continue
            pos = 0
            for mo in re.finditer(r"([a-z])(?:\^(\d+))?", tok):
                if mo.start() != pos:
                    raise ValueError(f"cannot parse monomial {tok!r}")
                pos = mo.end()
                var = _VARS.find(mo.group(1))
                if var < 0 or var >= len(L):
                    raise ValueError(f"unknown variable {mo.group(1)!r} for D={len(L)}")
                exps[var] += int(mo.group(2) or 1)
            if pos != len(tok):
                raise ValueError(f"cannot parse monomial {tok!r}")
            terms.append(tuple(exps))
        poly = cls.zero(L)
        for t in terms:
            poly = poly + cls(L, frozenset({t}))
        return poly

    def _check(self, other: PolynomialF2) -> None:
        if self.L != other.L:
            raise ValueError(f"mismatched group orders {self.L} and {other.L}")

    def __add__(self, other: PolynomialF2) -> PolynomialF2:
        self._check(other)
        return PolynomialF2(self.L, self.terms ^ other.terms)

    def __mul__(self, other: PolynomialF2) -> PolynomialF2:
        self._check(other)
        out: set = set()
        for a in self.terms:
            for b in other.terms:
                t = tuple((x + y) % l for x, y, l in zip(a, b, self.L))
                out ^= {t}
        return PolynomialF2(self.L, frozenset(out))

    def conj(self) -> PolynomialF2:
        """Antipode ``x -> x^{-1}``."""
        return PolynomialF2(self.L, frozenset(tuple(-a for a in t) for t in self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def order(self) -> int:
        return math.prod(self.L)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in sorted(self.terms):
            mono = "".join(_VARS[i] + (f"^{a}" if a > 1 else "") for i, a in enumerate(t) if a)
            parts.append(mono or "1")
        return " + ".join(parts)


def _group_index(t: tuple[int, ...], L: tuple[int, ...]) -> int:
    return int(np.ravel_multi_index(t, L))


def poly_to_circulant(f: PolynomialF2) -> np.ndarray:
    """Matrix of multiplication by ``f`` on F_2[(Z_L)^D], size ``L^D x L^D``.

    Column ``h`` (basis element ``h``) has ones at rows ``h + g`` for each
    monomial ``g`` of ``f``.
    """
    N = f.order
    M = np.zeros((N, N), dtype=np.uint8)
    elems = list(itertools.product(*(range(l) for l in f.L)))
    for g in f.terms:
        for h in elems:
            row = _group_index(tuple((a + b) % l for a, b, l in zip(g, h, f.L)), f.L)
            M[row, _group_index(h, f.L)] ^= 1
    return M


class Protograph:
    """Matrix whose entries are :class:`PolynomialF2` values over one group."""

    def __init__(self, entries):
        rows = [list(r) for r in entries]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("protograph must be a nonempty rectangular array")
        Ls = {p.L for r in rows for p in r}
        if len(Ls) != 1:
            raise ValueError(f"protograph entries over different groups: {sorted(Ls)}")
        self.entries = rows
        self.L = Ls.pop()

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    def __getitem__(self, ij) -> PolynomialF2:
        i, j = ij
        return self.entries[i][j]

    def conj_transpose(self) -> Protograph:
        m, n = self.shape
        return Protograph([[self[i, j].conj() for i in range(m)] for j in range(n)])

    def expand(self) -> np.ndarray:
        return gf2.block([[poly_to_circulant(p) for p in row] for row in self.entries])

    @classmethod
    def identity(cls, size: int, L) -> Protograph:
        one, zero = PolynomialF2.one(L), PolynomialF2.zero(L)
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)])


def ring_kron(A: Protograph, B: Protograph) -> Protograph:
    """Kronecker product with entries multiplied in the group algebra."""
    (ma, na), (mb, nb) = A.shape, B.shape
    if A.L != B.L:
        raise ValueError(f"mismatched group orders {A.L} and {B.L}")
    return Protograph(
        [[A[i, k] * B[j, l] for k in range(na) for l in range(nb)] for i in range(ma) for j in range(mb)]
    )


def _hstack(A: Protograph, B: Protograph) -> Protograph:
    return Protograph([ra + rb for ra, rb in zip(A.entries, B.entries)])


def lifted_product(A: Protograph, B: Protograph, name: str = "lp") -> CssCode:
    """Lifted product: the hypergraph-product layout evaluated over the group algebra.

    ``H_X = [A (x) I_nB | I_mA (x) B*]`` and ``H_Z = [I_nA (x) B | A* (x) I_mB]``,
    where ``*`` is the conjugate transpose.
    """
    if A.L != B.L:
        raise ValueError(f"mismatched group orders {A.L} and {B.L}")
    (ma, na), (mb, nb) = A.shape, B.shape
    I = lambda k: Protograph.identity(k, A.L)  # noqa: E731
    hx = _hstack(ring_kron(A, I(nb)), ring_kron(I(ma), B.conj_transpose()))
    hz = _hstack(ring_kron(I(na), B), ring_kron(A.conj_transpose(), I(mb)))
    return CssCode(hx.expand(), hz.expand(), name, {"L": list(A.L)})


def hgp_fsl(f: PolynomialF2, g: PolynomialF2, name: str = "fsl") -> CssCode:
    """Two-qubit-per-site model with ``H_X = [f | g]`` and ``H_Z = [conj(g) | conj(f)]``."""
    code = lifted_product(Protograph([[f]]), Protograph([[g.conj()]]), name)
    return CssCode(code.hx, code.hz, name, {"L": list(f.L), "f": str(f), "g": str(g)})


def haah_code(L: int) -> CssCode:
    return hgp_fsl(PolynomialF2.parse("1+x+y+z", L), PolynomialF2.parse("1+xy+yz+xz", L), "haah")


def checkerboard(L: int) -> CssCode:
    f = PolynomialF2.parse("1+x+y+z", L)
    return hgp_fsl(f, f.conj(), "checkerboard")


def sierpinski_prism(L: int) -> CssCode:
    return hgp_fsl(PolynomialF2.parse("1+z", L), PolynomialF2.parse("1+x+y", L), "sierpinski-prism")


def color_code_lp(L: int) -> CssCode:
    f = PolynomialF2.parse("1+x+y", L, D=2)
    return hgp_fsl(f, f.conj(), "color-code")


LP_MODELS = {
    "haah": haah_code,
    "checkerboard": checkerboard,
    "sierpinski": sierpinski_prism,
    "color": color_code_lp,
}


################################################################################
# threefold product


def threefold_product(c1: ClassicalCode, c2: ClassicalCode, c3: ClassicalCode, name: str = "threefold") -> CssCode:
    """Threefold product with ``H_Z^T = d2`` and ``H_X = d1``.

    ``d2`` maps three copies of ``C1 (x) C2 (x) C3`` (check spaces) into
    ``(B1 C2 C3) + (C1 B2 C3) + (C1 C2 B3)``, and ``d1`` maps that into
    ``B1 B2 B3`` (bit spaces ``B``)::

        d2 = [[T1 I I, T1 I I, 0     ],      d1 = [I T2 T3, T1 I T3, T1 T2 I]
              [I T2 I, 0,      I T2 I],
              [0,      I I T3, I I T3]]

    with ``Ti = Hi^T`` and identities sized to fit.
    """
    T = [sp.csr_matrix(c.H.T.astype(np.int64)) for c in (c1, c2, c3)]
    (n1, m1), (n2, m2), (n3, m3) = (t.shape for t in T)
    I = lambda k: sp.identity(k, dtype=np.int64, format="csr")  # noqa: E731
    kron3 = lambda a, b, c: sp.kron(sp.kron(a, b), c, format="csr")  # noqa: E731
    a = kron3(T[0], I(m2), I(m3))
    b = kron3(I(m1), T[1], I(m3))
    c = kron3(I(m1), I(m2), T[2])
    d2 = sp.bmat([[a, a, None], [b, None, b], [None, c, c]], format="csr")
    d1 = sp.hstack([kron3(I(n1), T[1], T[2]), kron3(T[0], I(n2), T[2]), kron3(T[0], T[1], I(n3))], format="csr")
    if np.any((d1 @ d2).data.astype(np.int64) & 1):
        raise CommutationError("threefold product violates d1 d2 = 0")
    return CssCode(gf2.as_bits(d1), gf2.as_bits(d2.T), name, seeds=(c1, c2, c3))


def circulant_code(expr: str, L: int, name: str | None = None) -> ClassicalCode:
    """Single-variable circulant seed such as ``1 + x`` on the cycle of length ``L``."""
    H = poly_to_circulant(PolynomialF2.parse(expr, (L,), D=1))
    return ClassicalCode(H, name or f"circulant({expr})", {"L": L, "poly": expr})


def xcube(L: int) -> CssCode:
    seeds = [circulant_code("1+x", L, f"cycle-{axis}") for axis in "xyz"]
    code = threefold_product(*seeds, name="xcube")
    return CssCode(code.hx, code.hz, "xcube", {"L": L}, seeds=code.seeds)


THREEFOLD_MODELS = {"xcube": xcube}
