"""Command-line entry point: count, gen, bench, and fit subcommands.

Exit codes are stable: 0 success, 2 parse or option errors, 3 brute-force
oracle above its limit, 4 kernel disagreement (correctness tripwire),
5 degenerate model fit. Option precedence: explicit flags override config
file values, which override built-in defaults. ``TRIGAUGE_WORKERS`` supplies
the default worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bench import emit_records, read_records, run_benchmark
from .count import ALGORITHMS, DEFAULT_ORACLE_LIMIT, OracleLimitError, count_triangles
from .generate import GRAPH500_PROBS, GenSpec, write_metadata_sidecar
from .graph import ParseError, load_graph, write_tsv
from .modelfit import DegenerateFitError, emit_fit_table, fit_loglog, fit_piecewise, fit_table_csv, plot_data_csv

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ORACLE_LIMIT = 3
EXIT_KERNEL_MISMATCH = 4
EXIT_DEGENERATE_FIT = 5

_MODEL_TAGS = {"er": "erdos_renyi", "kron": "kron_power", "rmat": "stochastic_kron"}

_DEFAULTS: dict[str, dict] = {
    "count": {"algo": "adj2", "workers": None, "oracle_limit": DEFAULT_ORACLE_LIMIT},
    "gen": {
        "model": None,
        "out": None,
        "n": None,
        "p": None,
        "seed_graph": None,
        "k": None,
        "scale": None,
        "factor": None,
        "probs": None,
        "rng_seed": 0,
    },
    "bench": {
        "input": None,
        "model": None,
        "n": None,
        "p": None,
        "seed_graph": None,
        "k": None,
        "scale": None,
        "factor": None,
        "probs": None,
        "rng_seed": 0,
        "algos": "all",
        "reps": 5,
        "records": None,
        "graph_id": None,
        "workers": None,
        "oracle_limit": DEFAULT_ORACLE_LIMIT,
    },
    "fit": {
        "records": None,
        "min_edges": None,
        "breakpoint": None,
        "table_out": None,
        "table_csv_out": None,
        "plot_out": None,
    },
}


class KernelMismatchError(RuntimeError):
    """Two kernels disagreed on the same graph."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trigauge", description=__doc__)
    sub = parser.add_subparsers(dest="cmd", required=True)
    S = argparse.SUPPRESS

    p_count = sub.add_parser("count", help="count triangles in a TSV edge list")
    p_count.add_argument("--input", required=True)
    p_count.add_argument("--algo", choices=ALGORITHMS + ("all",), default=S)
    p_count.add_argument("--workers", type=int, default=S)
    p_count.add_argument("--oracle-limit", type=int, default=S)
    p_count.add_argument("--config", default=S)

    p_gen = sub.add_parser("gen", help="generate a synthetic graph")
    p_gen.add_argument("--model", choices=sorted(_MODEL_TAGS), default=S)
    p_gen.add_argument("--out", default=S)
    _add_generator_flags(p_gen)
    p_gen.add_argument("--config", default=S)

    p_bench = sub.add_parser("bench", help="time counting kernels, append CSV records")
    p_bench.add_argument("--input", default=S)
    p_bench.add_argument("--model", choices=sorted(_MODEL_TAGS), default=S)
    _add_generator_flags(p_bench)
    p_bench.add_argument("--algos", default=S, help="comma list of kernels, or 'all'")
    p_bench.add_argument("--reps", type=int, default=S)
    p_bench.add_argument("--records", required=True)
    p_bench.add_argument("--graph-id", default=S)
    p_bench.add_argument("--workers", type=int, default=S)
    p_bench.add_argument("--oracle-limit", type=int, default=S)
    p_bench.add_argument("--config", default=S)

    p_fit = sub.add_parser("fit", help="fit the power-law time model to records")
    p_fit.add_argument("--records", required=True)
    p_fit.add_argument("--min-edges", type=float, default=S)
    p_fit.add_argument("--breakpoint", type=float, default=S)
    p_fit.add_argument("--table-out", default=S)
    p_fit.add_argument("--table-csv-out", default=S)
    p_fit.add_argument("--plot-out", default=S)
    p_fit.add_argument("--config", default=S)
    return parser


def _add_generator_flags(p: argparse.ArgumentParser) -> None:
    S = argparse.SUPPRESS
    p.add_argument("--n", type=int, default=S)
    p.add_argument("--p", type=float, default=S)
    p.add_argument("--seed-graph", default=S, help="TSV seed graph for --model kron")
    p.add_argument("--k", type=int, default=S)
    p.add_argument("--scale", type=int, default=S)
    p.add_argument("--factor", type=int, default=S)
    p.add_argument("--probs", default=S, help="a,b,c,d quadrant probabilities for --model rmat")
    p.add_argument("--rng-seed", type=int, default=S)


def _resolve_options(args: argparse.Namespace) -> dict:
    """defaults < config file < explicit flags."""
    explicit = {k: v for k, v in vars(args).items() if k != "cmd"}
    opts = dict(_DEFAULTS[args.cmd])
    config_path = explicit.pop("config", None)
    if config_path is not None:
        with open(config_path, "r", encoding="utf-8") as f:
            config = json.load(f)
        if not isinstance(config, dict):
            raise ValueError("config file must hold a JSON object")
        for key, value in config.items():
            dest = key.replace("-", "_")
            if dest not in opts:
                raise ValueError(f"unknown config key {key!r} for subcommand {args.cmd!r}")
            opts[dest] = value
    opts.update(explicit)
    return opts


def _workers(opts: dict) -> int:
    w = opts.get("workers")
    if w is None:
        w = int(os.environ.get("TRIGAUGE_WORKERS", "1"))
    if w < 1:
        raise ValueError("workers must be >= 1")
    return w


def _gen_spec(opts: dict) -> GenSpec:
    model_flag = opts.get("model")
    if model_flag is None:
        raise ValueError("--model is required")
    model = _MODEL_TAGS[model_flag]
    rng_seed = int(opts.get("rng_seed") or 0)
    if model == "erdos_renyi":
        if opts.get("n") is None or opts.get("p") is None:
            raise ValueError("--model er requires --n and --p")
        return GenSpec(model=model, rng_seed=rng_seed, n=opts["n"], p=opts["p"])
    if model == "kron_power":
        if opts.get("seed_graph") is None or opts.get("k") is None:
            raise ValueError("--model kron requires --seed-graph and --k")
        return GenSpec(model=model, rng_seed=rng_seed, seed_graph=load_graph(opts["seed_graph"]), k=opts["k"])
    if opts.get("scale") is None or opts.get("factor") is None:
        raise ValueError("--model rmat requires --scale and --factor")
    probs = opts.get("probs")
    if probs is None:
        probs = GRAPH500_PROBS
    elif isinstance(probs, str):
        probs = tuple(float(x) for x in probs.split(","))
    else:
        probs = tuple(float(x) for x in probs)
    if len(probs) != 4:
        raise ValueError("--probs needs exactly 4 comma-separated values")
    return GenSpec(
        model=model, rng_seed=rng_seed, probs=probs, scale=opts["scale"], edge_factor=opts["factor"]
    )


def cmd_count(opts: dict) -> int:
    path = Path(opts["input"])
    if not path.is_file():
        raise ValueError(f"input file not found: {path}")
    g = load_graph(path)
    workers = _workers(opts)
    algos = ALGORITHMS if opts["algo"] == "all" else (opts["algo"],)
    results = [
        count_triangles(g, a, workers=workers, oracle_limit=opts["oracle_limit"]) for a in algos
    ]
    for res in results:
        print(f"triangles={res.count} algo={res.algorithm} n_edges={g.n_edges}")
    if len({res.count for res in results}) > 1:
        raise KernelMismatchError(
            "kernel disagreement: " + ", ".join(f"{r.algorithm}={r.count}" for r in results)
        )
    return EXIT_OK


def cmd_gen(opts: dict) -> int:
    if opts.get("out") is None:
        raise ValueError("--out is required")
    spec = _gen_spec(opts)
    g = spec.generate()
    out = Path(opts["out"])
    write_tsv(g, out)
    write_metadata_sidecar(spec, g, out.with_name(out.name + ".meta.json"))
    print(f"n_edges={g.n_edges} n_vertices={g.n_vertices} out={out}")
    return EXIT_OK


def cmd_bench(opts: dict) -> int:
    if (opts.get("input") is None) == (opts.get("model") is None):
        raise ValueError("provide exactly one of --input or --model")
    if opts.get("input") is not None:
        path = Path(opts["input"])
        if not path.is_file():
            raise ValueError(f"input file not found: {path}")
        g = load_graph(path)
        graph_id = opts.get("graph_id") or path.stem
    else:
        spec = _gen_spec(opts)
        g = spec.generate()
        graph_id = opts.get("graph_id") or spec.graph_id()
    workers = _workers(opts)
    algos = ALGORITHMS if opts["algos"] == "all" else tuple(opts["algos"].split(","))
    unknown = [a for a in algos if a not in ALGORITHMS]
    if unknown:
        raise ValueError(f"unknown algorithms: {unknown}")
    records = [
        run_benchmark(
            g,
            a,
            repetitions=opts["reps"],
            graph_id=graph_id,
            workers=workers,
            oracle_limit=opts["oracle_limit"],
        )
        for a in algos
    ]
    counts = {rec.algorithm: rec.triangle_count for rec in records}
    if len(set(counts.values())) > 1:
        raise KernelMismatchError(f"kernel disagreement on {graph_id}: {counts}")
    emit_records(records, opts["records"])
    for rec in records:
        print(
            f"graph_id={rec.graph_id} algo={rec.algorithm} n_edges={rec.n_edges} "
            f"t_tri={rec.t_tri_seconds:.6g}s rate={rec.rate_eps:.6g} "
            f"triangles={rec.triangle_count}"
        )
    return EXIT_OK


def cmd_fit(opts: dict) -> int:
    records = read_records(opts["records"])
    if not records:
        raise DegenerateFitError("degenerate fit: records file is empty")
    by_algo: dict[str, list] = {}
    for rec in records:
        by_algo.setdefault(rec.algorithm, []).append(rec)
    groups = {}
    for algo, recs in sorted(by_algo.items()):
        pairs = [(r.n_edges, r.t_tri_seconds) for r in recs]
        try:
            if opts.get("breakpoint") is not None:
                bp = opts["breakpoint"]
                low_fit, high_fit = fit_piecewise(pairs, bp, min_edges=opts.get("min_edges"))
                groups[f"{algo}<{bp:g}"] = ([r for r in recs if r.n_edges < bp], low_fit)
                groups[f"{algo}>={bp:g}"] = ([r for r in recs if r.n_edges >= bp], high_fit)
            else:
                groups[algo] = (recs, fit_loglog(pairs, min_edges=opts.get("min_edges")))
        except DegenerateFitError as exc:
            raise DegenerateFitError(f"group {algo!r}: {exc}") from None
    fits = {name: fit for name, (_, fit) in groups.items()}
    table = emit_fit_table(fits)
    sys.stdout.write(table)
    if opts.get("table_out"):
        Path(opts["table_out"]).write_text(table, encoding="utf-8")
    if opts.get("table_csv_out"):
        Path(opts["table_csv_out"]).write_text(fit_table_csv(fits), encoding="utf-8")
    if opts.get("plot_out"):
        Path(opts["plot_out"]).write_text(plot_data_csv(groups), encoding="utf-8")
    return EXIT_OK


_DISPATCH = {"count": cmd_count, "gen": cmd_gen, "bench": cmd_bench, "fit": cmd_fit}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = _resolve_options(args)
        return _DISPATCH[args.cmd](opts)
    except ParseError as exc:
        where = f" (line {exc.line_number})" if exc.line_number else ""
        print(f"error: {exc}{where}", file=sys.stderr)
        return EXIT_USAGE
    except OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE_LIMIT
    except KernelMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_KERNEL_MISMATCH
    except DegenerateFitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE_FIT
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
