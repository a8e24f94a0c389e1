"""Command-line front end.

Every subcommand writes plain-text artifacts (matrix files, JSON sidecars,
CSV, SVG) into the output directory given by ``--out``, the
``FRACTONPROD_OUT`` environment variable, or the config file, in that order.
Exit status is 0 on success, 2 on usage errors and 1 on runtime failures.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from fractonprod import __version__, gf2
from fractonprod import diagnostics as dg
from fractonprod import pinwheel as pw
from fractonprod import products as pr
from fractonprod import seeds as sd
from fractonprod.config import ExperimentConfig, load_config
from fractonprod.graphs import configuration_model_bipartite, laplacian_ensemble_graph, torus_graph
from fractonprod.plot import Series, line_plot

OUT_ENV = "FRACTONPROD_OUT"
CONFIG_DIR = Path(__file__).resolve().parents[2] / "configs"


class UsageError(Exception):
    pass


################################################################################
# helpers


def _out_dir(args, config: ExperimentConfig | None = None) -> Path:
    path = args.out or os.environ.get(OUT_ENV) or (config.output_dir if config else None) or "."
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p


def _write(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    print(f"wrote {path}")


def _write_json(path: Path, obj) -> None:
    _write(path, json.dumps(obj, indent=2, sort_keys=True, default=_jsonable) + "\n")


def _jsonable(obj):
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj)}")


def _tool_provenance() -> dict:
    return {"tool": "fractonprod", "version": __version__}


def _fmt_d(d) -> str:
    return "inf" if math.isinf(d) else str(int(d))


def _resolve_config(args, kind: str) -> ExperimentConfig:
    if getattr(args, "config", None):
        try:
            config = load_config(args.config)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        if config.kind != kind:
            raise UsageError(f"config kind {config.kind!r} does not match command {kind!r}")
    else:
        default = CONFIG_DIR / f"{kind}.json"
        config = load_config(str(default)) if default.exists() else ExperimentConfig(kind)
    sizes = getattr(args, "sizes", None)
    return config.override(trials=getattr(args, "trials", None), seed=getattr(args, "seed", None), sizes=sizes)


def _named_code(token: str) -> sd.ClassicalCode:
    """``repN`` / ``rep-openN`` shorthands, otherwise a stem of saved code files."""
    if token.startswith("rep-open") and token[8:].isdigit():
        return sd.repetition_code(int(token[8:]), cyclic=False)
    if token.startswith("rep") and token[3:].isdigit():
        return sd.repetition_code(int(token[3:]))
    if not Path(f"{token}.mat").exists():
        raise UsageError(f"no code named {token!r} (expected repN or a stem with a .mat file)")
    return sd.load_code(token)


def _load_classical(stem: str) -> sd.ClassicalCode:
    if not Path(f"{stem}.mat").exists():
        raise UsageError(f"missing code file {stem}.mat")
    return sd.load_code(stem)


################################################################################
# gen-seed


def cmd_gen_seed(args) -> int:
    kind = args.kind
    if kind == "repetition":
        if args.n is None:
            raise UsageError("repetition needs --n")
        if args.n < 2:
            raise UsageError("--n must be at least 2")
        code = sd.repetition_code(args.n, cyclic=not args.open)
    elif kind == "laplacian":
        if args.torus:
            code = sd.laplacian_code(torus_graph(args.torus, args.torus), name="laplacian-torus", L=args.torus)
        else:
            if args.n is None:
                raise UsageError("laplacian needs --n (or --torus L)")
            if args.n < 6:
                raise UsageError("--n must be at least 6")
            code = sd.laplacian_code(laplacian_ensemble_graph(args.n, args.seed, args.d_low, args.d_high), seed=args.seed)
    elif kind == "typical-ldpc":
        if args.n is None:
            raise UsageError("typical-ldpc needs --n")
        if (args.n * args.d_variable) % args.d_check:
            raise UsageError("n * d_variable must be divisible by d_check")
        m = args.n * args.d_variable // args.d_check
        code = sd.typical_ldpc(configuration_model_bipartite(args.n, m, args.d_variable, args.d_check, args.seed))
    elif kind == "pinwheel":
        if args.N is None or args.p is None:
            raise UsageError("pinwheel needs --N and --p")
        if args.N < 2 or args.p < 2:
            raise UsageError("pinwheel needs N >= 2 and p >= 2")
        code = sd.pinwheel_code(args.N, args.p, args.offset)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown seed kind {kind}")

    out = _out_dir(args)
    stem = out / (args.name or _default_stem(code))
    if args.no_distance:
        meta = code.metadata(with_distance=False)
    else:
        code.set_distance(gf2.min_weight_nonzero(code.H, budget=args.budget))
        code.set_distance(gf2.min_weight_nonzero(code.H.T, budget=args.budget), transpose=True)
        meta = code.metadata()
    meta["provenance"] = _tool_provenance()
    if kind == "pinwheel":
        guard = sd.boundary_logical_guard(code, budget=args.budget)
        meta["boundary_guard"] = guard
        _write(Path(f"{stem}.coords"), pw.format_coordinates(code.tiling))
        print(
            f"boundary guard: lightest near-boundary codeword "
            f"{guard['lightest_weight'] or 'none'} vs threshold {guard['threshold']:.2f} -> "
            f"{'SHORT LOGICAL FOUND' if guard['short_boundary_logical'] else 'ok'}"
        )
    gf2.write_matrix(f"{stem}.mat", code.H)
    print(f"wrote {stem}.mat")
    _write_json(Path(f"{stem}.json"), meta)
    d = "?" if args.no_distance else _fmt_d(code.d)
    print(f"{code.name}: [{code.n},{code.k},{d}] m={code.m} kT={code.kT}")
    return 0


def _default_stem(code: sd.ClassicalCode) -> str:
    parts = [code.name] + [f"{k}{v}" for k, v in sorted(code.params.items()) if not isinstance(v, bool)]
    if code.seed is not None:
        parts.append(f"s{code.seed}")
    return "_".join(str(p) for p in parts)


################################################################################
# product


def cmd_product(args) -> int:
    out = _out_dir(args)
    if args.kind == "hgp":
        if len(args.codes) != 2:
            raise UsageError("product hgp needs two codes")
        c1, c2 = (_named_code(t) for t in args.codes)
        code = pr.hgp(c1, c2)
        pred = pr.predicted_hgp_params(c1, c2, with_distance=not args.no_distance)
        print(f"predicted: n={pred.n} k={pred.k} kxT={pred.kxT} kzT={pred.kzT} d={_fmt_d(pred.d) if pred.d is not None else '?'}")
        stem = out / (args.name or f"hgp_{Path(args.codes[0]).name}_{Path(args.codes[1]).name}")
    else:
        if args.model is None or args.L is None:
            raise UsageError(f"product {args.kind} needs --model and --L")
        models = pr.LP_MODELS if args.kind == "lp" else pr.THREEFOLD_MODELS
        if args.model not in models:
            raise UsageError(f"unknown {args.kind} model {args.model!r}; choose from {sorted(models)}")
        if args.L < 1:
            raise UsageError("--L must be positive")
        code = models[args.model](args.L)
        stem = out / (args.name or f"{args.kind}_{args.model}_L{args.L}")
    if not code.commutes:
        raise pr.CommutationError("H_X H_Z^T != 0")
    pr.save_css(code, str(stem))
    print(f"wrote {stem}.hx, {stem}.hz, {stem}.json")
    if args.no_distance:
        print(f"measured: [[{code.n},{code.k}]] kxT={code.kxT} kzT={code.kzT}")
    else:
        rep = dg.distance_report(code, budget=args.budget)
        tag = "" if rep.exact else " (upper bound)"
        print(f"measured: [[{code.n},{code.k},{_fmt_d(rep.d)}]]{tag} kxT={code.kxT} kzT={code.kzT}")
    return 0


################################################################################
# scans


def cmd_rank_scan(args) -> int:
    config = _resolve_config(args, "rank-scan")
    ensemble = config.params.get("ensemble", "laplacian") if args.ensemble is None else args.ensemble
    config = config.override(params={"ensemble": ensemble})
    if ensemble not in dg.ENSEMBLES:
        raise UsageError(f"unknown ensemble {ensemble!r}")
    if not config.sizes:
        raise UsageError("rank-scan needs --sizes")
    records = dg.rank_deficiency_scan(dg.ENSEMBLES[ensemble](), config.sizes, config.trials, config.seed)
    out = _out_dir(args, config)
    _write(out / f"rank_{ensemble}.csv", dg.rank_scan_csv(records, config.provenance()))
    ns, ks = dg.mean_k_by_size(records)
    for n, k in zip(ns, ks):
        print(f"n={int(n)} mean k={k:.3f}")
    return 0


def cmd_confinement(args) -> int:
    config = _resolve_config(args, "confinement")
    params = dict(config.params)
    for key in ("code", "ensemble", "n", "mode"):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    if args.sparsities:
        params["sparsities"] = args.sparsities
    config = config.override(params=params)
    sparsities = params.get("sparsities", list(dg.DEFAULT_SPARSITIES))
    mode = params.get("mode", "uniform")
    if params.get("code"):
        code = _load_classical(params["code"])
        label = Path(params["code"]).name
    elif params.get("ensemble"):
        if params["ensemble"] not in dg.ENSEMBLES or not params.get("n"):
            raise UsageError("confinement --ensemble needs a known ensemble and --n")
        code = dg.ENSEMBLES[params["ensemble"]]().build(int(params["n"]), config.seed)
        label = f"{params['ensemble']}_n{params['n']}"
    else:
        raise UsageError("confinement needs --code or --ensemble")
    if mode == "biased" and code.k == 0:
        raise UsageError("biased sampling needs a code with nonzero kernel")
    curve = dg.confinement_scan(code, sparsities, config.trials, mode, config.seed)
    out = _out_dir(args, config)
    wname = f"confinement_{label}_{mode}_witnesses.txt"
    text, wit = dg.confinement_csv(curve, wname, config.provenance())
    _write(out / f"confinement_{label}_{mode}.csv", text)
    _write(out / wname, wit)
    return 0


def cmd_isolability(args) -> int:
    code = _load_classical(args.code)
    rep = dg.isolability_check(code)
    out = _out_dir(args)
    header = [f"fractonprod {__version__}", f"code {Path(args.code).name}"]
    _write(out / f"isolability_{Path(args.code).name}.csv", dg.isolability_csv(rep, header))
    print(f"degree-2 checks: {rep.degree2_checks}; max cycle rank: {rep.max_cycle_rank}; {'PASS' if rep.passes else 'FAIL'}")
    return 0


def cmd_distance(args) -> int:
    if args.css:
        if not Path(f"{args.css}.hx").exists():
            raise UsageError(f"missing {args.css}.hx")
        code = pr.load_css(args.css)
        stem = Path(args.css).name
    elif args.code:
        code = _load_classical(args.code)
        stem = Path(args.code).name
    else:
        raise UsageError("distance needs --code or --css")
    rep = dg.distance_report(code, budget=args.budget, seed=args.seed)
    out = _out_dir(args)
    _write_json(
        out / f"distance_{stem}.json",
        {
            "d": None if math.isinf(rep.d) else int(rep.d),
            "exact": rep.exact,
            "kind": rep.kind,
            "witness": [] if rep.witness is None else gf2.support(rep.witness),
            "provenance": _tool_provenance(),
        },
    )
    print(f"d = {_fmt_d(rep.d)} ({'exact' if rep.exact else 'upper bound'})")
    return 0


################################################################################
# figures


def run_fig2(config: ExperimentConfig, out: Path) -> dict:
    """Rank-deficiency scan and ensemble confinement curves for both ensembles."""
    p = config.params
    names = p.get("ensembles", ["typical-ldpc", "laplacian"])
    sparsities = p.get("sparsities", list(dg.DEFAULT_SPARSITIES))
    header = config.provenance()
    records, rank_series, conf_results, conf_series = [], [], [], []
    summary = {}
    for i, name in enumerate(names):
        recs = dg.rank_deficiency_scan(dg.ENSEMBLES[name](), config.sizes, config.trials, config.seed + i)
        records.extend(recs)
        ns, ks = dg.mean_k_by_size(recs)
        rank_series.append(Series(name, ns, ks))
        res = dg.ensemble_confinement_scan(
            dg.ENSEMBLES[name](),
            int(p.get("confinement_n", 300)),
            int(p.get("confinement_graphs", 100)),
            sparsities,
            int(p.get("confinement_trials", 1000)),
            config.seed + 1000 + i,
        )
        conf_results.append(res)
        conf_series.append(Series(name, list(sparsities), res.mean))
        summary[name] = {
            "mean_k": [round(float(k), 4) for k in ks],
            "slope_k_vs_n": dg.fit_slope(ns, ks),
            "confinement_dips": dg.monotone_violations(res.mean),
        }
    _write(out / "fig2_rank.csv", dg.rank_scan_csv(records, header))
    conf_text = dg.ensemble_confinement_csv(conf_results[0], header)
    for res in conf_results[1:]:
        conf_text += "".join(dg.ensemble_confinement_csv(res).splitlines(keepends=True)[1:])
    _write(out / "fig2_confinement.csv", conf_text)
    _write(out / "fig2_rank.svg", line_plot(rank_series, "Rank deficiency", "n", "mean k"))
    _write(
        out / "fig2_confinement.svg",
        line_plot(conf_series, "Confinement", "error density |e|/n", "mean min syndrome density |s|/m"),
    )
    _write_json(out / "fig2_summary.json", {"config": config.to_dict(), "summary": summary, "provenance": header})
    return summary


def run_fig3(config: ExperimentConfig, out: Path) -> dict:
    """Pinwheel code scaling (k, d versus n) and confinement curves."""
    p = config.params
    period = int(p.get("p", 7))
    budget = int(p.get("distance_budget", gf2.DEFAULT_BUDGET))
    header = config.provenance()
    rows, codes = [], {}
    lines = ["N,n,m,k,kT,d,d_exact"]
    for N in config.sizes:
        code = sd.pinwheel_code(N, period)
        res = gf2.min_weight_nonzero(code.H, budget=budget, seed=config.seed)
        code.set_distance(res)
        codes[N] = code
        rows.append((N, code.n, code.k, res.weight))
        lines.append(f"{N},{code.n},{code.m},{code.k},{code.kT},{_fmt_d(res.weight)},{int(res.exact)}")
    _write(out / "fig3_scaling.csv", "".join(f"# {h}\n" for h in header) + "\n".join(lines) + "\n")
    ns = [r[1] for r in rows]
    summary = {
        "k_exponent": dg.fit_exponent(ns, [r[2] for r in rows]) if len(rows) > 1 else None,
        "k": [r[2] for r in rows],
        "d": [None if math.isinf(r[3]) else int(r[3]) for r in rows],
    }
    _write(
        out / "fig3_scaling.svg",
        line_plot(
            [Series("k", ns, [r[2] for r in rows]), Series("d", ns, [r[3] for r in rows])],
            f"Pinwheel codes, p = {period}",
            "n",
            "k, d",
            logx=True,
            logy=True,
        ),
    )
    probe_N = int(p.get("confinement_N", config.sizes[0]))
    probe = codes.get(probe_N) or sd.pinwheel_code(probe_N, period)
    sparsities = p.get("sparsities", list(dg.DEFAULT_SPARSITIES))
    series = []
    for j, mode in enumerate(p.get("confinement_modes", ["uniform", "biased"])):
        curve = dg.confinement_scan(probe, sparsities, config.trials, mode, config.seed + j)
        wname = f"fig3_confinement_{mode}_witnesses.txt"
        text, wit = dg.confinement_csv(curve, wname, header)
        _write(out / f"fig3_confinement_{mode}.csv", text)
        _write(out / wname, wit)
        series.append(Series(mode, list(sparsities), curve.densities()))
    _write(
        out / "fig3_confinement.svg",
        line_plot(series, f"Pinwheel N = {probe_N} confinement", "error density |e|/n", "min syndrome density |s|/m"),
    )
    witness = probe.distance_result.vector
    _write(out / "fig3_tiling.svg", pw.to_svg(probe.tiling, highlight=None if witness is None else gf2.support(witness)))
    _write_json(out / "fig3_summary.json", {"config": config.to_dict(), "summary": summary, "provenance": header})
    return summary


def cmd_fig2(args) -> int:
    config = _resolve_config(args, "fig2")
    summary = run_fig2(config, _out_dir(args, config))
    for name, s in summary.items():
        print(f"{name}: mean k {s['mean_k']}, slope {s['slope_k_vs_n']:.4f}, confinement dips {s['confinement_dips']}")
    return 0


def cmd_fig3(args) -> int:
    config = _resolve_config(args, "fig3")
    if not config.sizes:
        raise UsageError("fig3 needs generations in sizes")
    summary = run_fig3(config, _out_dir(args, config))
    print(f"k = {summary['k']}, d = {summary['d']}, k exponent = {summary['k_exponent']}")
    return 0


def square_demo(L: int, trials: int, seed: int) -> dict:
    """Biased sampling on the square-lattice torus Laplacian code plus explicit rectangles.

    Errors are cut from the sublattice codeword (every other site), which
    contains every checkerboard rectangle. Rectangles with sides up to
    ``L / 2 - 1`` stay clear of their own periodic images.
    """
    code = sd.laplacian_code(torus_graph(L, L), name="laplacian-torus", L=L)
    side = L // 2 - 1
    weights = list(range(1, side * side + 1))
    curve = dg.confinement_scan(
        code, [w / code.n for w in weights], trials, "biased", seed, codewords=[sublattice_codeword(L)]
    )
    rects = []
    for a in range(1, side + 1):
        for b in range(a, side + 1):
            e = checkerboard_rectangle(L, a, b)
            rects.append((a, b, int(e.sum()), int(gf2.matvec(code.H, e).sum())))
    return {"code": code, "curve": curve, "rectangles": rects}


def sublattice_codeword(L: int) -> np.ndarray:
    """Indicator of the sites with even ``x + y``; in the kernel for even ``L``."""
    x, y = np.meshgrid(np.arange(L), np.arange(L))
    return ((x + y) % 2 == 0).astype(np.uint8).ravel()


def checkerboard_rectangle(L: int, a: int, b: int, origin: tuple[int, int] = (2, 2)) -> np.ndarray:
    """Sites ``origin + i (1, 1) + j (1, -1)`` for ``i < a``, ``j < b``: one sublattice, tilted 45 degrees."""
    e = np.zeros(L * L, dtype=np.uint8)
    x0, y0 = origin
    for i in range(a):
        for j in range(b):
            e[((y0 + i - j) % L) * L + (x0 + i + j) % L] = 1
    return e


def _grid(L: int, support) -> str:
    s = set(int(v) for v in support)
    return "\n".join("".join("#" if y * L + x in s else "." for x in range(L)) for y in reversed(range(L)))


def cmd_laplacian_square_demo(args) -> int:
    config = _resolve_config(args, "laplacian-square-demo")
    L = int(args.L or config.params.get("L", 20))
    result = square_demo(L, config.trials, config.seed)
    curve = result["curve"]
    out = _out_dir(args, config)
    text, wit = dg.confinement_csv(curve, "square_demo_witnesses.txt", config.provenance())
    _write(out / "square_demo.csv", text)
    _write(out / "square_demo_witnesses.txt", wit)
    print(f"{L}x{L} torus Laplacian code: n={result['code'].n} k={result['code'].k} d={_fmt_d(result['code'].d)}")
    for r in curve.rows:
        print(f"|e| = {r.weight:3d}: min |s| = {r.min_syndrome}")
    four = [r for r in curve.rows if r.min_syndrome == 4]
    if four:
        best = max(four, key=lambda r: r.weight)
        print(f"weight-{best.weight} error with syndrome weight 4:")
        print(_grid(L, best.witness))
    big = max(result["rectangles"], key=lambda r: r[2])
    print(f"checkerboard rectangles up to {big[0]}x{big[1]} (|e| = {big[2]}): syndrome weights "
          f"{sorted({r[3] for r in result['rectangles']})}")
    return 0


def cmd_verdict(args) -> int:
    reports = {}
    for name in dict.fromkeys((args.seed1, args.seed2)):
        reports[name] = dg.diagnose_family(name, seed=args.seed, trials=args.trials)
    v = dg.fracton_verdict(reports[args.seed1], reports[args.seed2])
    out = _out_dir(args)
    _write_json(
        out / f"verdict_{args.seed1}_{args.seed2}.json",
        {
            "classification": v.classification,
            "reasons": list(v.reasons),
            "seeds": list(v.seeds),
            "note": "thresholds are finite-size proxies",
            "provenance": _tool_provenance(),
        },
    )
    print(f"{args.seed1} x {args.seed2}: {v.classification}")
    for r in v.reasons:
        print(f"  {r}")
    return 0


################################################################################
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fractonprod", description="Fracton models from products of classical codes.")
    ap.add_argument("--version", action="version", version=f"fractonprod {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, config=False, seed=True):
        p.add_argument("--out", help=f"output directory (default: ${OUT_ENV} or .)")
        if seed:
            p.add_argument("--seed", type=int, default=None if config else 0)
        if config:
            p.add_argument("--config", help="experiment config JSON")
            p.add_argument("--trials", type=int)

    p = sub.add_parser("gen-seed", help="build a classical seed code")
    p.add_argument("kind", choices=["repetition", "laplacian", "typical-ldpc", "pinwheel"])
    p.add_argument("--n", type=int)
    p.add_argument("--cyclic", action="store_true", help="cyclic repetition code (default)")
    p.add_argument("--open", action="store_true", help="open-chain repetition code")
    p.add_argument("--torus", type=int, help="Laplacian of the L x L square-lattice torus")
    p.add_argument("--d-low", type=int, default=3)
    p.add_argument("--d-high", type=int, default=5)
    p.add_argument("--d-variable", type=int, default=3)
    p.add_argument("--d-check", type=int, default=4)
    p.add_argument("--N", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--offset", type=int, default=0)
    p.add_argument("--name")
    p.add_argument("--budget", type=int, default=gf2.DEFAULT_BUDGET)
    p.add_argument("--no-distance", action="store_true")
    common(p)
    p.set_defaults(func=cmd_gen_seed)

    p = sub.add_parser("product", help="build a CSS code")
    p.add_argument("kind", choices=["hgp", "lp", "threefold"])
    p.add_argument("codes", nargs="*", help="for hgp: two code stems or repN shorthands")
    p.add_argument("--model")
    p.add_argument("--L", type=int)
    p.add_argument("--name")
    p.add_argument("--budget", type=int, default=gf2.DEFAULT_BUDGET)
    p.add_argument("--no-distance", action="store_true")
    common(p, seed=False)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("rank-scan", help="k and kT over a random ensemble")
    p.add_argument("--ensemble", choices=sorted(dg.ENSEMBLES))
    p.add_argument("--sizes", type=int, nargs="+")
    common(p, config=True)
    p.set_defaults(func=cmd_rank_scan)

    p = sub.add_parser("confinement", help="minimum syndrome weight versus error weight")
    p.add_argument("--code", help="stem of a saved classical code")
    p.add_argument("--ensemble", choices=sorted(dg.ENSEMBLES))
    p.add_argument("--n", type=int)
    p.add_argument("--mode", choices=["uniform", "biased"])
    p.add_argument("--sparsities", type=float, nargs="+")
    common(p, config=True)
    p.set_defaults(func=cmd_confinement)

    p = sub.add_parser("isolability", help="Ising subgraph report")
    p.add_argument("--code", required=True)
    common(p, seed=False)
    p.set_defaults(func=cmd_isolability)

    p = sub.add_parser("distance", help="distance with witness")
    p.add_argument("--code")
    p.add_argument("--css")
    p.add_argument("--budget", type=int, default=gf2.DEFAULT_BUDGET)
    common(p)
    p.set_defaults(func=cmd_distance)

    for name, func, helptext in (
        ("fig2", cmd_fig2, "rank deficiency and confinement of random ensembles"),
        ("fig3", cmd_fig3, "pinwheel code scaling and confinement"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--sizes", type=int, nargs="+")
        common(p, config=True)
        p.set_defaults(func=func)

    p = sub.add_parser("laplacian-square-demo", help="bounded syndromes on the square-lattice Laplacian code")
    p.add_argument("--L", type=int)
    common(p, config=True)
    p.set_defaults(func=cmd_laplacian_square_demo)

    p = sub.add_parser("verdict", help="fracton classification of a seed pair's product")
    p.add_argument("seed1", choices=dg.SEED_FAMILY_NAMES)
    p.add_argument("seed2", choices=dg.SEED_FAMILY_NAMES)
    p.add_argument("--trials", type=int, default=200)
    common(p)
    p.set_defaults(func=cmd_verdict)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except Exception as exc:
        print(f"fractonprod: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
