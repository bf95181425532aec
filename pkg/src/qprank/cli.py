"""Command line front end.

Subcommands cover graph generation, combined classical/quantum ranking, and
the experiment suite (ipr, stability, powerlaw, attack). Every run writes
CSV/JSON reports plus gnuplot-ready two-column data files into the output
directory, alongside an echo of the exact run configuration, so identical
invocations produce byte-identical outputs.

Exit codes: 0 success, 2 parameter error, 3 input parse error, 4 numerical
non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import functools
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__, analysis, graphs, walk
from .errors import ConvergenceError, ParameterError, ParseError
from .google import classical_pagerank, format_dense_matrix, google_from_graph

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_PARSE = 3
EXIT_CONVERGENCE = 4

OUT_ENV_VAR = "QPRANK_OUT"


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _write_dat(path: Path, comment: str, rows: list[list[float]]) -> None:
    lines = [f"# {comment}"]
    lines.extend(" ".join(_fmt(v) for v in row) for row in rows)
    _write_text(path, "\n".join(lines) + "\n")


def _write_json(path: Path, payload: dict) -> None:
    _write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _echo_config(outdir: Path, prefix: str, args: argparse.Namespace) -> None:
    params = {k: v for k, v in vars(args).items() if k not in ("func", "config")}
    _write_json(
        outdir / f"{prefix}_run_config.json",
        {"tool": "qprank", "version": __version__, "params": params},
    )


def parallel_map(fn, items, jobs: int) -> list:
    """Order-preserving map, optionally over a bounded process pool.

    Results are assembled in input order, so outputs do not depend on jobs.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def importance_item(item) -> np.ndarray:
    """Top-level worker for process pools: one importance vector."""
    g, mode, alpha, horizon, tol, max_iter = item
    return analysis.importance_vector(
        g, mode, alpha=alpha, horizon=horizon, tol=tol, max_iter=max_iter
    )


# ---------------------------------------------------------------------------
# Graph sources
# ---------------------------------------------------------------------------


def _spec_from_args(args, seed: int | None = None) -> graphs.GeneratorSpec:
    if args.family is None:
        raise ParameterError("a graph source is required: --family, or --input where supported")
    return graphs.GeneratorSpec(
        family=args.family,
        n=getattr(args, "n", 0) or 0,
        p=getattr(args, "p", 0.125),
        sf_alpha=getattr(args, "sf_alpha", 0.41),
        sf_beta=getattr(args, "sf_beta", 0.54),
        sf_gamma=getattr(args, "sf_gamma", 0.05),
        sf_delta_in=getattr(args, "sf_delta_in", 0.2),
        sf_delta_out=getattr(args, "sf_delta_out", 0.0),
        n_gen=getattr(args, "gen", 1),
        seed=args.seed if seed is None else seed,
        allow_self_loops=getattr(args, "self_loops", False),
    )


def _load_graph_file(path: str) -> graphs.DirectedGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if path.endswith(".net"):
        return graphs.load_pajek(text)
    return graphs.load_edge_list(text)


def _graph_from_args(args) -> tuple[graphs.DirectedGraph, str]:
    """Resolve the graph source to (graph, label-for-filenames)."""
    if getattr(args, "input", None):
        return _load_graph_file(args.input), Path(args.input).stem
    g = graphs.generate(_spec_from_args(args))
    return g, args.family


def _prefix(cmd: str, label: str, **parts) -> str:
    bits = [cmd, label]
    for key, val in parts.items():
        if val is not None:
            bits.append(f"{key}{val:g}" if isinstance(val, float) else f"{key}{val}")
    return "_".join(bits)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_generate(args) -> int:
    spec = _spec_from_args(args)
    g = graphs.generate(spec)
    outdir = Path(args.out)
    label = _prefix("generate", args.family, n=g.n, seed=args.seed)
    _write_text(outdir / f"{label}.edges", graphs.write_edge_list(g))
    _write_text(outdir / f"{label}.net", graphs.write_pajek(g))
    in_hist, out_hist = graphs.degree_distribution(g)
    kmax = max(len(in_hist), len(out_hist))
    rows = [
        [k, int(in_hist[k]) if k < len(in_hist) else 0, int(out_hist[k]) if k < len(out_hist) else 0]
        for k in range(kmax)
    ]
    _write_csv(outdir / f"{label}_degrees.csv", ["degree", "in_count", "out_count"], rows)
    _echo_config(outdir, label, args)
    print(f"wrote {label}.edges / .net / _degrees.csv to {outdir} ({g.n} nodes, {g.num_edges} edges)")
    return EXIT_OK


def cmd_rank(args) -> int:
    g, label = _graph_from_args(args)
    gm = google_from_graph(g, args.alpha)
    classical = classical_pagerank(gm, tol=args.tol, max_iter=args.max_iter)
    quantum, delta = walk.SzegedyWalk(gm).average_with_convergence(args.T)
    cl_ranks = analysis.node_ranks(classical)
    q_ranks = analysis.node_ranks(quantum)

    outdir = Path(args.out)
    prefix = _prefix("rank", label, n=g.n, a=args.alpha, T=args.T)
    rows = [
        [i, _fmt(classical[i]), _fmt(quantum[i]), int(cl_ranks[i]), int(q_ranks[i])]
        for i in range(g.n)
    ]
    _write_csv(
        outdir / f"{prefix}.csv",
        ["node", "classical_importance", "quantum_importance", "classical_rank", "quantum_rank"],
        rows,
    )
    _write_dat(
        outdir / f"{prefix}_bars.dat",
        "node classical_importance quantum_importance",
        [[i, classical[i], quantum[i]] for i in range(g.n)],
    )
    summary = {
        "nodes": g.n,
        "edges": g.num_edges,
        "alpha": args.alpha,
        "horizon": args.T,
        "quantum_convergence_sup_gap": delta,
        "degeneracy_resolution_classical": analysis.degeneracy_resolution(classical),
        "degeneracy_resolution_quantum": analysis.degeneracy_resolution(quantum),
        "top_share_classical": float(classical.max()),
        "top_share_quantum": float(quantum.max()),
    }
    _write_json(outdir / f"{prefix}_summary.json", summary)
    if args.trajectory:
        traj = walk.SzegedyWalk(gm).trajectory(args.trajectory)
        rows = [
            [t, node, _fmt(traj[t, node])]
            for t in range(args.trajectory)
            for node in range(g.n)
        ]
        _write_csv(outdir / f"{prefix}_trajectory.csv", ["t", "node", "instantaneous_qpr"], rows)
    if args.dump_matrix:
        _write_text(outdir / f"{prefix}_google.txt", format_dense_matrix(gm.entries))
    _echo_config(outdir, prefix, args)
    print(f"wrote {prefix}.csv to {outdir}")
    return EXIT_OK


def _modes(mode: str) -> tuple[str, ...]:
    return ("quantum", "classical") if mode == "both" else (mode,)


def cmd_ipr(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    if len(set(sizes)) < 2:
        raise ParameterError("--sizes needs at least two distinct sizes")
    if args.family not in ("sf", "er"):
        raise ParameterError("ipr sweeps support --family sf or er")
    graphs_by_size = [
        graphs.generate(_spec_with_n(args, n, args.seed + k)) for k, n in enumerate(sizes)
    ]
    outdir = Path(args.out)
    prefix = _prefix("ipr", args.family, a=args.alpha, r=args.r, T=args.T, seed=args.seed)
    summary: dict = {"sizes": sizes, "alpha": args.alpha, "r": args.r}
    csv_rows = {n: [n] for n in sizes}
    header = ["n"]
    for mode in _modes(args.mode):
        vectors = parallel_map(
            importance_item,
            [(g, mode, args.alpha, args.T, args.tol, args.max_iter) for g in graphs_by_size],
            args.jobs,
        )
        samples = [analysis.ipr(p, args.r) for p in vectors]
        fit = analysis.ipr_scaling(samples)
        summary[mode] = {
            "slope": fit.slope,
            "intercept": fit.intercept,
            "classification": fit.label,
        }
        header.append(f"xi_{mode}")
        for n, s in zip(sizes, samples):
            csv_rows[n].append(_fmt(s.xi))
        _write_dat(
            outdir / f"{prefix}_{mode}.dat",
            "log_n log_xi",
            [[np.log(s.n), np.log(s.xi)] for s in samples],
        )
        print(f"{mode}: slope {fit.slope:.4f} -> {fit.label}")
    _write_csv(outdir / f"{prefix}.csv", header, [csv_rows[n] for n in sizes])
    _write_json(outdir / f"{prefix}_summary.json", summary)
    _echo_config(outdir, prefix, args)
    return EXIT_OK


def _spec_with_n(args, n: int, seed: int) -> graphs.GeneratorSpec:
    return dataclasses.replace(_spec_from_args(args, seed=seed), n=n)


def _alpha_grid(args) -> np.ndarray:
    if args.grid == "coarse":
        return analysis.coarse_alpha_grid(args.points)
    return np.linspace(0.01, 0.98, 98)


def cmd_stability(args) -> int:
    g, label = _graph_from_args(args)
    outdir = Path(args.out)
    alphas = _alpha_grid(args)
    prefix = _prefix("stability", label, n=g.n, T=args.T, seed=args.seed)
    prefix += f"_{args.grid}_{args.mode}"
    items = [(g, args.mode, float(a), args.T, args.tol, args.max_iter) for a in alphas]
    vectors = parallel_map(importance_item, items, args.jobs)

    if args.grid == "sweep":
        ref_vec = analysis.importance_vector(
            g, args.mode, alpha=args.alpha_ref, horizon=args.T, tol=args.tol, max_iter=args.max_iter
        )
        rows = [
            [_fmt(a), _fmt(analysis.classical_fidelity(v, ref_vec)), _fmt(analysis.qpr_distance(v, ref_vec))]
            for a, v in zip(alphas, vectors)
        ]
        _write_csv(outdir / f"{prefix}.csv", ["alpha", "fidelity_vs_ref", "distance_vs_ref"], rows)
        _write_dat(
            outdir / f"{prefix}.dat",
            f"alpha fidelity_vs_{args.alpha_ref:g} distance",
            [[a, analysis.classical_fidelity(v, ref_vec), analysis.qpr_distance(v, ref_vec)]
             for a, v in zip(alphas, vectors)],
        )
        summary = {"alpha_ref": args.alpha_ref, "n": g.n, "mode": args.mode}
    else:
        grid = analysis.pairwise_stability(vectors, alphas)
        alpha_header = [_fmt(a) for a in alphas]
        _write_csv(
            outdir / f"{prefix}_fidelity.csv",
            ["alpha"] + alpha_header,
            [[alpha_header[i]] + [_fmt(v) for v in grid.fidelity[i]] for i in range(len(alphas))],
        )
        _write_csv(
            outdir / f"{prefix}_distance.csv",
            ["alpha"] + alpha_header,
            [[alpha_header[i]] + [_fmt(v) for v in grid.distance[i]] for i in range(len(alphas))],
        )
        _write_dat(
            outdir / f"{prefix}_fidelity.dat",
            "alpha alpha_prime fidelity",
            [[alphas[i], alphas[j], grid.fidelity[i, j]]
             for i in range(len(alphas)) for j in range(len(alphas))],
        )
        summary = {
            "n": g.n,
            "mode": args.mode,
            "min_fidelity": float(grid.fidelity.min()),
            "max_distance": float(grid.distance.max()),
        }
        print(f"min fidelity {summary['min_fidelity']:.4f}  max distance {summary['max_distance']:.4f}")
    _write_json(outdir / f"{prefix}_summary.json", summary)
    _echo_config(outdir, prefix, args)
    return EXIT_OK


def cmd_powerlaw(args) -> int:
    outdir = Path(args.out)
    modes = _modes(args.mode)
    if args.input or args.ensemble <= 1:
        g, label = _graph_from_args(args)
        prefix = _prefix("powerlaw", label, n=g.n, a=args.alpha, T=args.T)
        summary: dict = {"n": g.n, "alpha": args.alpha}
        for mode in modes:
            p = analysis.importance_vector(
                g, mode, alpha=args.alpha, horizon=args.T, tol=args.tol, max_iter=args.max_iter
            )
            ranks = analysis.rank_list(p)
            fit = analysis.power_law_fit(ranks, i_min=args.i_min, i_max=args.i_max)
            summary[mode] = {
                "beta": fit.beta,
                "c": fit.c,
                "i_min": fit.i_min,
                "i_max": fit.i_max,
                "rms_residual": fit.residual,
            }
            _write_dat(
                outdir / f"{prefix}_{mode}.dat",
                "log_rank_index log_importance",
                [[np.log(i), np.log(imp)] for i, (_, imp) in enumerate(ranks, start=1) if imp > 0],
            )
            print(f"{mode}: beta {fit.beta:.4f}  c {fit.c:.4g}  residual {fit.residual:.4f}")
        _write_json(outdir / f"{prefix}_summary.json", summary)
        _echo_config(outdir, prefix, args)
        return EXIT_OK

    spec = _spec_from_args(args)
    experiment = functools.partial(
        analysis.powerlaw_metrics,
        modes=modes,
        alpha=args.alpha,
        horizon=args.T,
        i_min=args.i_min,
        i_max=args.i_max,
        tol=args.tol,
        max_iter=args.max_iter,
    )
    report = analysis.ensemble_run(
        spec, args.ensemble, experiment, map_fn=functools.partial(parallel_map, jobs=args.jobs)
    )
    prefix = _prefix("powerlaw", args.family, n=args.n, a=args.alpha, T=args.T, seed=args.seed)
    prefix += f"_ens{args.ensemble}"
    _write_csv(
        outdir / f"{prefix}.csv",
        ["metric", "mean", "stddev"],
        [[key, _fmt(report.means[key]), _fmt(report.stds[key])] for key in report.means],
    )
    _write_json(
        outdir / f"{prefix}_summary.json",
        {
            "ensemble": report.count,
            "failures": report.failures,
            "means": report.means,
            "stddevs": report.stds,
        },
    )
    _echo_config(outdir, prefix, args)
    for mode in modes:
        print(f"{mode}: mean beta {report.means[f'beta_{mode}']:.4f} "
              f"(std {report.stds[f'beta_{mode}']:.4f})")
    return EXIT_OK


def cmd_attack(args) -> int:
    if args.input:
        raise ParameterError("attack runs on generated ensembles; use --family")
    modes = _modes(args.mode)
    spec = _spec_from_args(args)
    experiment = functools.partial(
        analysis.attack_metrics,
        removals=args.removals,
        modes=modes,
        alpha=args.alpha,
        horizon=args.T,
        tol=args.tol,
        max_iter=args.max_iter,
    )
    report = analysis.ensemble_run(
        spec, args.ensemble, experiment, map_fn=functools.partial(parallel_map, jobs=args.jobs)
    )
    outdir = Path(args.out)
    prefix = _prefix("attack", args.family, n=args.n, a=args.alpha, T=args.T, seed=args.seed)
    prefix += f"_ens{args.ensemble}"
    header = ["removals"]
    for mode in modes:
        header += [f"kendall_{mode}_mean", f"kendall_{mode}_std"]
    rows = []
    for r in range(1, args.removals + 1):
        row = [r]
        for mode in modes:
            row += [_fmt(report.means[f"kendall_{mode}_{r}"]), _fmt(report.stds[f"kendall_{mode}_{r}"])]
        rows.append(row)
    _write_csv(outdir / f"{prefix}.csv", header, rows)
    for mode in modes:
        _write_dat(
            outdir / f"{prefix}_{mode}.dat",
            "removals kendall_mean kendall_std",
            [[r, report.means[f"kendall_{mode}_{r}"], report.stds[f"kendall_{mode}_{r}"]]
             for r in range(1, args.removals + 1)],
        )
    _write_json(
        outdir / f"{prefix}_summary.json",
        {
            "ensemble": report.count,
            "failures": report.failures,
            "means": report.means,
            "stddevs": report.stds,
        },
    )
    _echo_config(outdir, prefix, args)
    print(f"wrote {prefix}.csv to {outdir} ({report.failures} failed runs)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------


def _add_common(sp: argparse.ArgumentParser, *, ranking: bool = True) -> None:
    sp.add_argument("--out", default=os.environ.get(OUT_ENV_VAR, "runs"),
                    help=f"output directory (env {OUT_ENV_VAR} overrides the default)")
    sp.add_argument("--seed", type=int, default=0, help="base RNG seed")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for independent runs")
    sp.add_argument("--config", default=None, help="key=value defaults file; flags override")
    if ranking:
        sp.add_argument("--alpha", type=float, default=0.85, help="damping parameter")
        sp.add_argument("--T", type=int, default=walk.DEFAULT_HORIZON,
                        help="quantum averaging horizon (double-steps)")
        sp.add_argument("--tol", type=float, default=1e-12, help="classical fixed-point tolerance")
        sp.add_argument("--max-iter", type=int, default=100_000, help="classical iteration cap")


def _add_generator(sp: argparse.ArgumentParser, *, with_input: bool = False) -> None:
    if with_input:
        sp.add_argument("--input", default=None, help="graph file (.net Pajek, else edge list)")
    sp.add_argument("--family", choices=graphs.FAMILIES, default=None, help="generator family")
    sp.add_argument("--n", type=int, default=64, help="node count (sf, er)")
    sp.add_argument("--p", type=float, default=0.125, help="er edge probability")
    sp.add_argument("--gen", type=int, default=1, help="hierarchical generation index")
    sp.add_argument("--sf-alpha", type=float, default=0.41, help="sf: P(new node with edge to existing)")
    sp.add_argument("--sf-beta", type=float, default=0.54, help="sf: P(edge between existing nodes)")
    sp.add_argument("--sf-gamma", type=float, default=0.05, help="sf: P(existing to new node)")
    sp.add_argument("--sf-delta-in", type=float, default=0.2, help="sf: in-degree offset")
    sp.add_argument("--sf-delta-out", type=float, default=0.0, help="sf: out-degree offset")
    sp.add_argument("--self-loops", action="store_true", help="keep generated self-loops")


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(
        prog="qprank",
        description="Quantum and classical PageRank on directed complex networks.",
    )
    parser.add_argument("--version", action="version", version=f"qprank {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    table: dict[str, argparse.ArgumentParser] = {}

    sp = sub.add_parser("generate", help="write a generated graph to disk")
    _add_generator(sp)
    _add_common(sp, ranking=False)
    sp.set_defaults(func=cmd_generate)
    table["generate"] = sp

    sp = sub.add_parser("rank", help="classical and quantum ranking of one graph")
    _add_generator(sp, with_input=True)
    _add_common(sp)
    sp.add_argument("--trajectory", type=int, default=0,
                    help="also dump instantaneous distributions for this many steps")
    sp.add_argument("--dump-matrix", action="store_true",
                    help="also write the dense transition matrix at full precision")
    sp.set_defaults(func=cmd_rank)
    table["rank"] = sp

    sp = sub.add_parser("ipr", help="inverse participation ratio across graph sizes")
    _add_generator(sp)
    _add_common(sp)
    sp.add_argument("--sizes", default="32,64,128,256", help="comma-separated node counts")
    sp.add_argument("--mode", choices=("quantum", "classical", "both"), default="quantum")
    sp.add_argument("--r", type=int, default=1, help="participation-ratio order")
    sp.set_defaults(func=cmd_ipr)
    table["ipr"] = sp

    sp = sub.add_parser("stability", help="ranking stability across damping values")
    _add_generator(sp, with_input=True)
    _add_common(sp)
    sp.add_argument("--grid", choices=("coarse", "fine", "sweep"), default="coarse")
    sp.add_argument("--points", type=int, default=20, help="coarse grid size")
    sp.add_argument("--alpha-ref", type=float, default=0.85, help="sweep reference damping")
    sp.add_argument("--mode", choices=("quantum", "classical"), default="quantum")
    sp.set_defaults(func=cmd_stability)
    table["stability"] = sp

    sp = sub.add_parser("powerlaw", help="power-law fit of the sorted ranking")
    _add_generator(sp, with_input=True)
    _add_common(sp)
    sp.add_argument("--mode", choices=("quantum", "classical", "both"), default="both")
    sp.add_argument("--ensemble", type=int, default=29, help="graphs in the ensemble (1 = single)")
    sp.add_argument("--i-min", type=int, default=1, help="first 1-based rank index of the fit")
    sp.add_argument("--i-max", type=int, default=None, help="last rank index (default: before the degenerate tail)")
    sp.set_defaults(func=cmd_powerlaw)
    table["powerlaw"] = sp

    sp = sub.add_parser("attack", help="iterated hub removal over a seeded ensemble")
    _add_generator(sp, with_input=True)
    _add_common(sp)
    sp.add_argument("--mode", choices=("quantum", "classical", "both"), default="both")
    sp.add_argument("--removals", type=int, default=5, help="nodes to remove, one per round")
    sp.add_argument("--ensemble", type=int, default=100, help="graphs in the ensemble")
    sp.set_defaults(func=cmd_attack)
    table["attack"] = sp

    return parser, table


def _read_config_file(path: str) -> dict[str, str]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read config {path}: {exc}") from exc
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"expected key=value, got {line!r}", lineno)
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


def _inject_config(argv: list[str], table: dict[str, argparse.ArgumentParser]) -> list[str]:
    """Splice config-file entries in as flags right after the subcommand.

    User flags appear later on the command line and therefore win. Keys the
    chosen subcommand does not define are skipped, so one config file can
    serve several subcommands.
    """
    if "--config" not in argv:
        return argv
    path = argv[argv.index("--config") + 1]
    values = _read_config_file(path)
    command = next((tok for tok in argv if not tok.startswith("-")), None)
    sp = table.get(command)
    if sp is None:
        return argv
    known_flags = {s for action in sp._actions for s in action.option_strings}
    store_true = {
        s for action in sp._actions if isinstance(action, argparse._StoreTrueAction)
        for s in action.option_strings
    }
    injected: list[str] = []
    for key, value in values.items():
        flag = "--" + key.replace("_", "-")
        if flag not in known_flags:
            continue
        if flag in store_true:
            if value.lower() in ("1", "true", "yes"):
                injected.append(flag)
        else:
            injected += [flag, value]
    at = argv.index(command) + 1
    return argv[:at] + injected + argv[at:]


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, table = build_parser()
    try:
        argv = _inject_config(argv, table)
        args = parser.parse_args(argv)
        return args.func(args)
    except ParseError as exc:
        print(f"error [stage=input]: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ConvergenceError as exc:
        print(f"error [stage=iteration]: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except ParameterError as exc:
        print(f"error [stage=parameters]: {exc}", file=sys.stderr)
        return EXIT_PARAMETER


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
