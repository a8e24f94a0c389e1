"""Fracton diagnostics for classical seeds and their products.

Three seed-level checks: rank deficiency (does ``k`` grow with ``n``),
confinement (does syndrome weight grow with the weight of sparse errors) and
isolability (absence of large Ising subgraphs). The thresholds used to turn
the empirical curves into yes/no answers are desk-scale proxies and are
reported with every verdict.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

from fractonprod import gf2
from fractonprod.graphs import distances_from, laplacian_ensemble_graph, trial_seed
from fractonprod.products import CssCode
from fractonprod.seeds import ClassicalCode, laplacian_code, random_typical_ldpc

DEFAULT_SPARSITIES = tuple(round(0.01 * i, 2) for i in range(1, 31))
DEFAULT_RADII = (2, 4, 8, 16)
RANK_EXPONENT_THRESHOLD = 0.4
CONFINEMENT_GROWTH = 3.0


################################################################################
# ensembles and rank deficiency


@dataclass(frozen=True)
class Ensemble:
    """Named random code family: ``build(n, seed)`` returns one member."""

    name: str
    build: Callable[[int, int], ClassicalCode]
    params: dict = field(default_factory=dict)


def laplacian_ensemble(low: int = 3, high: int = 5) -> Ensemble:
    def build(n: int, seed: int) -> ClassicalCode:
        return laplacian_code(laplacian_ensemble_graph(n, seed, low, high), seed=seed)

    return Ensemble("laplacian", build, {"D_low": low, "D_high": high})


def ldpc_ensemble(d_variable: int = 3, d_check: int = 4) -> Ensemble:
    def build(n: int, seed: int) -> ClassicalCode:
        return random_typical_ldpc(n, d_variable, d_check, seed)

    return Ensemble("typical-ldpc", build, {"D_variable": d_variable, "D_check": d_check})


ENSEMBLES = {"laplacian": laplacian_ensemble, "typical-ldpc": ldpc_ensemble}


@dataclass(frozen=True)
class RankScanRecord:
    ensemble: str
    n: int
    trial: int
    seed: int
    k: int
    kT: int


def rank_deficiency_scan(ensemble: Ensemble, sizes: Sequence[int], trials: int, seed: int) -> list[RankScanRecord]:
    """Build ``trials`` members at each size and record ``k`` and ``kT``.

    Trial ``t`` at size index ``i`` uses seed ``trial_seed(seed, i * trials + t)``.
    """
    records = []
    for i, n in enumerate(sizes):
        for t in range(trials):
            s = trial_seed(seed, i * trials + t)
            try:
                code = ensemble.build(n, s)
            except Exception as exc:
                raise RuntimeError(f"{ensemble.name}: trial {t} at n={n} failed: {exc}") from exc
            records.append(RankScanRecord(ensemble.name, n, t, s, code.k, code.kT))
    return records


def mean_k_by_size(records: Sequence[RankScanRecord]) -> tuple[np.ndarray, np.ndarray]:
    sizes = sorted({r.n for r in records})
    means = [np.mean([r.k for r in records if r.n == n]) for n in sizes]
    return np.array(sizes, dtype=float), np.array(means, dtype=float)


def fit_exponent(ns, ks) -> float:
    """Least-squares slope of ``log k`` against ``log n``."""
    ns, ks = np.asarray(ns, dtype=float), np.asarray(ks, dtype=float)
    if np.any(ks <= 0):
        raise ValueError("exponent fit needs positive k")
    return float(np.polyfit(np.log(ns), np.log(ks), 1)[0])


def fit_slope(xs, ys) -> float:
    return float(np.polyfit(np.asarray(xs, dtype=float), np.asarray(ys, dtype=float), 1)[0])


def rank_scan_csv(records: Sequence[RankScanRecord], header_lines: Sequence[str] = ()) -> str:
    buf = io.StringIO()
    for line in header_lines:
        buf.write(f"# {line}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["ensemble", "n", "trial", "k", "kT"])
    for r in records:
        w.writerow([r.ensemble, r.n, r.trial, r.k, r.kT])
    return buf.getvalue()


################################################################################
# confinement


@dataclass(frozen=True)
class ConfinementRow:
    sparsity: float
    weight: int
    trials: int
    min_syndrome: int | None
    witness: tuple[int, ...] | None


@dataclass(frozen=True)
class ConfinementCurve:
    """Minimum syndrome weight over sampled errors at each error weight.

    A row with ``min_syndrome`` of ``None`` had no admissible sample (biased
    errors cannot be heavier than the codewords they are cut from).
    """

    code: str
    mode: str
    n: int
    m: int
    rows: tuple[ConfinementRow, ...]

    def densities(self) -> np.ndarray:
        return np.array([math.nan if r.min_syndrome is None else r.min_syndrome / self.m for r in self.rows])

    def weights(self) -> np.ndarray:
        return np.array([r.weight for r in self.rows])

    def minima(self) -> np.ndarray:
        return np.array([math.nan if r.min_syndrome is None else r.min_syndrome for r in self.rows], dtype=float)

    def verify(self, H) -> bool:
        """Recompute every witness syndrome."""
        H = gf2.as_bits(H)
        for r in self.rows:
            if r.min_syndrome is None:
                continue
            e = gf2.from_support(r.witness, self.n)
            if len(r.witness) != r.weight or int(gf2.matvec(H, e).sum()) != r.min_syndrome:
                return False
        return True


def _syndrome_weights(Ht: sp.csr_matrix, supports: list[np.ndarray]) -> np.ndarray:
    """Syndrome weights ``|H e|`` for errors given by their supports (``Ht = H^T``, CSR)."""
    if not supports:
        return np.zeros(0, dtype=np.int64)
    lens = np.array([len(s) for s in supports])
    rows = np.repeat(np.arange(len(supports)), lens)
    cols = np.concatenate(supports) if lens.sum() else np.zeros(0, dtype=np.int64)
    E = sp.csr_matrix((np.ones(len(cols), dtype=np.int64), (rows, cols)), shape=(len(supports), Ht.shape[0]))
    S = (E @ Ht).tocsr()
    S.data &= 1
    return np.asarray(S.sum(axis=1)).ravel().astype(np.int64)


def target_weight(sparsity: float, n: int) -> int:
    return int(round(sparsity * n))


def confinement_scan(
    code: ClassicalCode,
    sparsities: Sequence[float] = DEFAULT_SPARSITIES,
    trials: int = 1000,
    mode: str = "uniform",
    seed: int = 0,
    radii: Sequence[int] = DEFAULT_RADII,
    codewords=None,
) -> ConfinementCurve:
    """Minimum syndrome weight of sampled errors at each sparsity ``|e|/n``.

    ``uniform`` draws errors of the target weight uniformly at random.
    ``biased`` cuts errors out of low-weight codewords (by default the stored
    distance witness): per trial a random base bit and codeword are drawn and
    errors are taken from the codeword support near the base bit, using the
    Tanner-graph distance. Two kinds are tried per target weight: the
    ``w`` support bits nearest to the base (random tie-breaks), and random
    ``w``-subsets of the support within each ball radius in ``radii``. A
    second centre drawn from the support adds lens-shaped errors, the support
    bits inside the intersection of one ball around each centre.
    """
    H = code.H
    m, n = H.shape
    Ht = sp.csr_matrix(H.T, dtype=np.int64)
    weights = [target_weight(s, n) for s in sparsities]
    if mode == "uniform":
        rows = _uniform_rows(Ht, n, sparsities, weights, trials, seed)
    elif mode == "biased":
        if codewords is None:
            res = code.distance_result
            if res.vector is None:
                raise ValueError("biased sampling needs a nonzero codeword")
            codewords = [res.vector]
        codewords = [np.flatnonzero(gf2.as_vector(c)) for c in codewords]
        if not codewords or any(len(c) == 0 for c in codewords):
            raise ValueError("biased sampling needs nonzero codewords")
        rows = _biased_rows(code, Ht, sparsities, weights, trials, seed, radii, codewords)
    else:
        raise ValueError(f"unknown sampling mode {mode!r}")
    return ConfinementCurve(code.name, mode, n, m, tuple(rows))


def _best(wts: np.ndarray, supports: list[np.ndarray], cur):
    if wts.size == 0:
        return cur
    i = int(np.argmin(wts))
    if cur is None or wts[i] < cur[0]:
        return int(wts[i]), tuple(sorted(int(x) for x in supports[i]))
    return cur


def _uniform_rows(Ht, n, sparsities, weights, trials, seed):
    rows = []
    batch = max(1, 200_000 // max(1, n))
    for j, (s, w) in enumerate(zip(sparsities, weights)):
        rng = np.random.default_rng(trial_seed(seed, j))
        best = None
        for lo in range(0, trials, batch):
            cnt = min(batch, trials - lo)
            picks = np.argsort(rng.random((cnt, n)), axis=1)[:, :w]
            supports = list(picks)
            best = _best(_syndrome_weights(Ht, supports), supports, best)
        rows.append(ConfinementRow(s, w, trials, best[0], best[1]) if best else ConfinementRow(s, w, trials, None, None))
    return rows


def _lenses(d1, d2, supp, weights, rng, per_weight: int = 4) -> dict[int, list[np.ndarray]]:
    """Subsets ``supp ∩ B(u, r1) ∩ B(v, r2)`` of exactly a target weight.

    ``d1``, ``d2`` are distances of the support bits from two centres. All
    radius pairs are tabulated at once; up to ``per_weight`` matching pairs
    are drawn at random for each target weight.
    """
    ok = np.isfinite(d1) & np.isfinite(d2)
    S, d1, d2 = supp[ok], d1[ok], d2[ok]
    if S.size == 0:
        return {}
    r1, i1 = np.unique(d1, return_inverse=True)
    r2, i2 = np.unique(d2, return_inverse=True)
    counts = np.zeros((len(r1), len(r2)), dtype=np.int64)
    np.add.at(counts, (i1, i2), 1)
    cum = counts.cumsum(axis=0).cumsum(axis=1)
    out: dict[int, list[np.ndarray]] = {}
    for j, w in enumerate(weights):
        if w == 0:
            continue
        pairs = np.argwhere(cum == w)
        if len(pairs) > per_weight:
            pairs = pairs[rng.choice(len(pairs), size=per_weight, replace=False)]
        if len(pairs):
            out[j] = [S[(i1 <= a) & (i2 <= b)] for a, b in pairs]
    return out


def _biased_rows(code, Ht, sparsities, weights, trials, seed, radii, codewords):
    tanner = code.tanner
    n = code.n
    rng = np.random.default_rng(seed)
    best: list = [None] * len(weights)
    for _ in range(trials):
        base = int(rng.integers(n))
        supp = codewords[int(rng.integers(len(codewords)))]
        dist = distances_from(tanner, base)[supp]
        order = np.lexsort((rng.random(len(supp)), dist))
        nearest = supp[order]
        by_radius = [supp[dist <= r] for r in radii]
        lenses = _lenses(dist, distances_from(tanner, int(rng.choice(supp)))[supp], supp, weights, rng)
        for j, w in enumerate(weights):
            if w > len(supp):
                continue
            cands = [nearest[:w]] + lenses.get(j, [])
            for S in by_radius:
                if len(S) >= w:
                    cands.append(rng.choice(S, size=w, replace=False))
            best[j] = _best(_syndrome_weights(Ht, cands), cands, best[j])
    rows = []
    for s, w, b in zip(sparsities, weights, best):
        rows.append(ConfinementRow(s, w, trials, b[0], b[1]) if b else ConfinementRow(s, w, trials, None, None))
    return rows


@dataclass(frozen=True)
class EnsembleConfinement:
    """Per-graph minimum syndrome densities averaged over an ensemble.

    ``per_graph[g, j]`` is the minimum of ``|s| / m`` over the trials of graph
    ``g`` at sparsity ``j``; ``mean`` averages it over graphs.
    """

    ensemble: str
    n: int
    sparsities: tuple[float, ...]
    trials: int
    seeds: tuple[int, ...]
    per_graph: np.ndarray

    @property
    def mean(self) -> np.ndarray:
        return self.per_graph.mean(axis=0)


def ensemble_confinement_scan(
    ensemble: Ensemble,
    n: int,
    graphs: int,
    sparsities: Sequence[float] = DEFAULT_SPARSITIES,
    trials: int = 1000,
    seed: int = 0,
) -> EnsembleConfinement:
    """Uniform confinement scan on ``graphs`` ensemble members, averaged.

    The minimum over sampled errors on a single graph fluctuates by more than
    its growth once the syndrome density saturates; averaging the per-graph
    minima over the ensemble smooths that out. Graph ``g`` is built with
    ``trial_seed(seed, 2 g)`` and sampled with ``trial_seed(seed, 2 g + 1)``.
    """
    seeds, rows = [], []
    for g in range(graphs):
        s = trial_seed(seed, 2 * g)
        code = ensemble.build(n, s)
        curve = confinement_scan(code, sparsities, trials, "uniform", trial_seed(seed, 2 * g + 1))
        seeds.append(s)
        rows.append(curve.minima() / code.m)
    return EnsembleConfinement(ensemble.name, n, tuple(sparsities), trials, tuple(seeds), np.array(rows))


def ensemble_confinement_csv(result: EnsembleConfinement, header_lines: Sequence[str] = ()) -> str:
    buf = io.StringIO()
    for line in header_lines:
        buf.write(f"# {line}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["ensemble", "n", "sparsity", "graphs", "trials", "mean_min_syndrome_density"])
    for s, v in zip(result.sparsities, result.mean):
        w.writerow([result.ensemble, result.n, f"{s:g}", len(result.seeds), result.trials, f"{v:.6f}"])
    return buf.getvalue()


def combine_curves(*curves: ConfinementCurve) -> ConfinementCurve:
    """Row-wise minimum over curves sampled at the same sparsities."""
    first = curves[0]
    rows = []
    for group in zip(*(c.rows for c in curves)):
        got = [r for r in group if r.min_syndrome is not None]
        total = sum(r.trials for r in group)
        if not got:
            rows.append(ConfinementRow(group[0].sparsity, group[0].weight, total, None, None))
            continue
        r = min(got, key=lambda r: r.min_syndrome)
        rows.append(ConfinementRow(r.sparsity, r.weight, total, r.min_syndrome, r.witness))
    return ConfinementCurve(first.code, "+".join(c.mode for c in curves), first.n, first.m, tuple(rows))


def monotone_violations(values) -> int:
    """Number of adjacent pairs where the (finite) sequence decreases."""
    v = np.asarray(values, dtype=float)
    v = v[np.isfinite(v)]
    return int(np.sum(np.diff(v) < 0))


@dataclass(frozen=True)
class ConfinementEvidence:
    confining: bool
    violations: int
    first: float
    last: float
    max_weight: int
    rule: str


def lower_envelope(values) -> np.ndarray:
    """Largest nondecreasing sequence lying below ``values`` (suffix minima)."""
    v = np.asarray(values, dtype=float)
    return np.minimum.accumulate(v[::-1])[::-1]


def assess_confinement(curve: ConfinementCurve, max_weight: float | None = None) -> ConfinementEvidence:
    """Desk-scale confinement proxy.

    Over rows with ``0 < weight <= max_weight`` (all rows if None) the sampled
    minima are replaced by their nondecreasing lower envelope, the best
    empirical stand-in for a bound ``|s| >= f(|e|)`` with ``f`` increasing.
    Confining means the envelope's last value exceeds ``CONFINEMENT_GROWTH``
    times its first. The number of raw dips is reported alongside.
    """
    rows = [r for r in curve.rows if r.min_syndrome is not None and r.weight > 0]
    if max_weight is not None:
        rows = [r for r in rows if r.weight <= max_weight]
    rule = f"nondecreasing lower envelope grows by more than {CONFINEMENT_GROWTH:g}x"
    if len(rows) < 2:
        return ConfinementEvidence(False, 0, math.nan, math.nan, 0, rule + "; too few rows")
    vals = [r.min_syndrome for r in rows]
    env = lower_envelope(vals)
    ok = bool(env[-1] > CONFINEMENT_GROWTH * env[0])
    return ConfinementEvidence(ok, monotone_violations(vals), float(env[0]), float(env[-1]), rows[-1].weight, rule)


def confinement_csv(curve: ConfinementCurve, witness_file: str, header_lines: Sequence[str] = ()) -> tuple[str, str]:
    """Return ``(csv_text, witness_text)``; witnesses are support lists, one per line."""
    buf = io.StringIO()
    for line in header_lines:
        buf.write(f"# {line}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["sparsity", "trials", "min_syndrome_density", "witness_file"])
    wit = []
    for i, r in enumerate(curve.rows):
        dens = "" if r.min_syndrome is None else f"{r.min_syndrome / curve.m:.6f}"
        ref = "" if r.witness is None else f"{witness_file}:{i + 1}"
        w.writerow([f"{r.sparsity:g}", r.trials, dens, ref])
        wit.append("" if r.witness is None else " ".join(str(x) for x in r.witness))
    return buf.getvalue(), "\n".join(wit) + "\n"


################################################################################
# isolability


@dataclass(frozen=True)
class IsingComponent:
    size: int
    edges: int

    @property
    def cycle_rank(self) -> int:
        return self.edges - self.size + 1


@dataclass(frozen=True)
class IsolabilityReport:
    degree2_checks: int
    components: tuple[IsingComponent, ...]

    @property
    def max_cycle_rank(self) -> int:
        return max((c.cycle_rank for c in self.components), default=0)

    @property
    def passes(self) -> bool:
        """Fails iff some Ising component carries two or more independent cycles."""
        return self.max_cycle_rank < 2


def isolability_check(code: ClassicalCode) -> IsolabilityReport:
    """Components of the Ising graph: bits joined by checks of weight exactly 2."""
    H = code.H
    deg = H.sum(axis=1)
    rows = np.flatnonzero(deg == 2)
    if rows.size == 0:
        return IsolabilityReport(0, ())
    pairs = np.array([np.flatnonzero(H[r]) for r in rows])
    bits = np.unique(pairs)
    relabel = {int(b): i for i, b in enumerate(bits)}
    u = np.array([relabel[int(a)] for a in pairs[:, 0]])
    v = np.array([relabel[int(b)] for b in pairs[:, 1]])
    A = sp.coo_matrix((np.ones(len(u)), (u, v)), shape=(len(bits), len(bits)))
    ncomp, labels = csgraph.connected_components(A, directed=False)
    sizes = np.bincount(labels, minlength=ncomp)
    edges = np.bincount(labels[u], minlength=ncomp)
    comps = tuple(IsingComponent(int(s), int(e)) for s, e in zip(sizes, edges))
    return IsolabilityReport(int(rows.size), comps)


def isolability_csv(report: IsolabilityReport, header_lines: Sequence[str] = ()) -> str:
    buf = io.StringIO()
    for line in header_lines:
        buf.write(f"# {line}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["component_id", "size", "cycle_rank"])
    for i, c in enumerate(report.components):
        w.writerow([i, c.size, c.cycle_rank])
    return buf.getvalue()


################################################################################
# superselection sectors and distances


@dataclass(frozen=True)
class Superselection:
    kxT: int
    kzT: int
    sectors: int
    hgp_identity: bool | None = None


def superselection_count(c: CssCode) -> Superselection:
    """Rank-based ``(kxT, kzT, 2^(kxT + kzT))``; for hypergraph products also
    checks ``kxT = k1T k2`` and ``kzT = k1 k2T``."""
    check = None
    if c.name == "hgp" and len(c.seeds) == 2:
        s1, s2 = c.seeds
        check = c.kxT == s1.kT * s2.k and c.kzT == s1.k * s2.kT
    return Superselection(c.kxT, c.kzT, c.sectors, check)


@dataclass(frozen=True)
class DistanceReport:
    d: float | int
    exact: bool
    witness: np.ndarray | None
    kind: str = ""


def distance_report(code: ClassicalCode | CssCode, budget: int = gf2.DEFAULT_BUDGET, seed: int = 0) -> DistanceReport:
    """Classical distance, or the lighter of the Z- and X-type logical weights."""
    if isinstance(code, CssCode):
        z = gf2.min_weight_nonzero(code.hx, code.hz, budget=budget, seed=seed)
        x = gf2.min_weight_nonzero(code.hz, code.hx, budget=budget, seed=seed)
        best, kind = (z, "Z") if z.weight <= x.weight else (x, "X")
        return DistanceReport(best.weight, z.exact and x.exact, best.vector, kind)
    res = gf2.min_weight_nonzero(code.H, budget=budget, seed=seed)
    code.set_distance(res)
    return DistanceReport(res.weight, res.exact, res.vector, "classical")


################################################################################
# verdict


@dataclass(frozen=True)
class SeedDiagnostics:
    """Evidence for the three criteria on one seed family."""

    name: str
    sizes: tuple[int, ...]
    mean_k: tuple[float, ...]
    rank_exponent: float
    confinement: ConfinementEvidence
    isolability: IsolabilityReport

    @property
    def rank_deficient(self) -> bool:
        return self.rank_exponent >= RANK_EXPONENT_THRESHOLD

    @property
    def confining(self) -> bool:
        return self.confinement.confining

    @property
    def isolable(self) -> bool:
        return self.isolability.passes

    def summary(self) -> dict:
        return {
            "name": self.name,
            "sizes": list(self.sizes),
            "mean_k": [round(k, 4) for k in self.mean_k],
            "rank_exponent": round(self.rank_exponent, 4),
            "rank_deficient": self.rank_deficient,
            "rank_rule": f"exponent of log k vs log n >= {RANK_EXPONENT_THRESHOLD}",
            "confining": self.confining,
            "confinement_rule": self.confinement.rule,
            "confinement_first": self.confinement.first,
            "confinement_last": self.confinement.last,
            "confinement_dips": self.confinement.violations,
            "isolable": self.isolable,
            "max_ising_cycle_rank": self.isolability.max_cycle_rank,
        }


def diagnose_seed(
    name: str,
    family: Sequence[Sequence[ClassicalCode]],
    probe: ClassicalCode,
    sparsities: Sequence[float] = DEFAULT_SPARSITIES,
    trials: int = 200,
    seed: int = 0,
    codewords=None,
) -> SeedDiagnostics:
    """Run the three checks.

    ``family`` lists samples at increasing sizes (one inner list per size) for
    the rank fit; ``probe`` is the member used for confinement and isolability.
    Confinement combines uniform and biased sampling and only looks at error
    weights up to half the probe's distance, since heavier errors may simply
    sit close to a codeword.
    """
    sizes = tuple(int(group[0].n) for group in family)
    mean_k = tuple(float(np.mean([c.k for c in group])) for group in family)
    exponent = fit_exponent(sizes, mean_k) if len(sizes) > 1 else 0.0
    uniform = confinement_scan(probe, sparsities, trials, "uniform", seed)
    curves = [uniform]
    if probe.k > 0:
        curves.append(confinement_scan(probe, sparsities, trials, "biased", seed, codewords=codewords))
    combined = combine_curves(*curves)
    d = probe.d
    cap = None if math.isinf(d) else d / 2
    evidence = assess_confinement(combined, max_weight=cap)
    return SeedDiagnostics(name, sizes, mean_k, exponent, evidence, isolability_check(probe))


@dataclass(frozen=True)
class FractonVerdict:
    classification: str
    reasons: tuple[str, ...]
    seeds: tuple[dict, ...]


def fracton_verdict(d1: SeedDiagnostics, d2: SeedDiagnostics) -> FractonVerdict:
    """Classify the hypergraph product of two seed families.

    Type-II: both seeds rank-deficient, confining and isolable.
    Type-I: both isolable and at least one rank-deficient.
    Otherwise not a fracton model.
    """
    seeds = (d1.summary(), d2.summary())
    if not (d1.isolable and d2.isolable):
        bad = [d.name for d in (d1, d2) if not d.isolable]
        return FractonVerdict("not-fracton", (f"not isolable: {', '.join(bad)}",), seeds)
    deficient = [d for d in (d1, d2) if d.rank_deficient]
    if not deficient:
        return FractonVerdict("not-fracton", ("no seed is rank deficient",), seeds)
    if len(deficient) == 2 and d1.confining and d2.confining:
        return FractonVerdict("type-II", ("both seeds rank deficient, confining and isolable",), seeds)
    reasons = [f"rank deficient: {', '.join(d.name for d in deficient)}", "both seeds isolable"]
    lacking = [d.name for d in (d1, d2) if not (d.rank_deficient and d.confining)]
    reasons.append(f"not type-II: {', '.join(lacking)} not both rank deficient and confining")
    return FractonVerdict("type-I", tuple(reasons), seeds)


def classify_product(code: CssCode, diagnostics: dict[str, SeedDiagnostics]) -> FractonVerdict:
    """Verdict for a product code from diagnostics keyed by seed name."""
    if len(code.seeds) != 2:
        raise ValueError("verdicts need a two-seed product")
    missing = [s.name for s in code.seeds if s.name not in diagnostics]
    if missing:
        raise KeyError(f"missing diagnostics for {', '.join(missing)}")
    return fracton_verdict(*(diagnostics[s.name] for s in code.seeds))


################################################################################
# named seed families for verdicts


def seed_family(name: str, seed: int = 0, samples: int = 5) -> tuple[list[list[ClassicalCode]], ClassicalCode]:
    """Default size ladder and confinement probe for a named seed family."""
    from fractonprod.graphs import torus_graph
    from fractonprod.seeds import ising_code, pinwheel_code, repetition_code

    def sampled(ens: Ensemble, sizes):
        return [[ens.build(n, trial_seed(seed, i * samples + t)) for t in range(samples)] for i, n in enumerate(sizes)]

    if name == "repetition":
        family = [[repetition_code(n)] for n in (20, 40, 80)]
        return family, family[1][0]
    if name == "ising2d":
        family = [[ising_code(torus_graph(L, L))] for L in (4, 6, 8)]
        return family, family[1][0]
    if name in ENSEMBLES:
        family = sampled(ENSEMBLES[name](), (100, 200, 300))
        return family, family[0][0]
    if name == "pinwheel":
        family = [[pinwheel_code(N, 7)] for N in (3, 4, 5)]
        return family, family[0][0]
    raise ValueError(f"unknown seed family {name!r}")


SEED_FAMILY_NAMES = ("repetition", "ising2d", "laplacian", "typical-ldpc", "pinwheel")


def diagnose_family(name: str, seed: int = 0, trials: int = 200, samples: int = 5) -> SeedDiagnostics:
    family, probe = seed_family(name, seed, samples)
    return diagnose_seed(name, family, probe, trials=trials, seed=seed)
