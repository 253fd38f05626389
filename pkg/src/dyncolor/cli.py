"""Command line interface.

Subcommands:
  gen      write an update trace to a file
  general  replay a trace through the interval engine, write per-step CSV
  arb      same engine behind an orientation + degeneracy oracle
  lds      replay a trace through the layered engine
  bins     play the balls-and-bins game against a chosen adversary
  suite    run acceptance criteria, write summary CSV, sample runs, figures

Run CSVs always hold integers only; a PNG with the same stem is rendered
next to each CSV unless --no-figures is given. The suite reads a flat
key=value config file (outdir, figures, criteria, quick, workers); command
line flags override file values.
"""

from __future__ import annotations

import argparse
import os
import sys

from .graph import read_trace, write_trace
from .interval import EngineConfig
from .lds import LdsConfig
from .metrics import (CheckFailure, run_arb, run_bins, run_general, run_lds,
                      write_csv)
from .traces import TRACE_KINDS, gen_trace

WORKERS_ENV = "DYNCOLOR_WORKERS"


def _add_trace_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--trace", help="read the update trace from this file")
    p.add_argument("--kind", default="union_of_forests",
                   choices=sorted(TRACE_KINDS),
                   help="generate the trace with this generator instead")
    p.add_argument("--n", type=int, default=256)
    p.add_argument("--steps", type=int, default=10000)
    p.add_argument("--trace-seed", type=int, default=0)
    p.add_argument("--trace-alpha", type=int, default=2,
                   help="forest count for union_of_forests traces")
    p.add_argument("--insert-prob", type=float, default=0.6)
    p.add_argument("--delete-frac", type=float, default=0.3)
    p.add_argument("--window", type=int, default=100)


def _load_trace(args):
    if args.trace:
        return read_trace(args.trace)
    params = {}
    if args.kind == "random_graph":
        params["insert_prob"] = args.insert_prob
    elif args.kind in ("random_forest", "union_of_forests"):
        params["delete_frac"] = args.delete_frac
        if args.kind == "union_of_forests":
            params["alpha"] = args.trace_alpha
    elif args.kind == "sliding_window":
        params["window"] = args.window
    return gen_trace(args.kind, args.n, args.steps, args.trace_seed, **params)


def _add_output_args(p: argparse.ArgumentParser, default_out: str) -> None:
    p.add_argument("--out", default=default_out, help="CSV output path")
    p.add_argument("--no-figures", action="store_true",
                   help="skip rendering the PNG next to the CSV")
    p.add_argument("--metrics-every", type=int, default=1,
                   help="sample a CSV row every this many updates (0: none)")
    p.add_argument("--check-every", type=int, default=0,
                   help="run invariant checks every this many updates (0: off)")


def _emit(result, args, title: str) -> None:
    if args.metrics_every:
        write_csv(args.out, result.columns, result.rows)
        print(f"wrote {args.out} ({len(result.rows)} rows)")
        if not args.no_figures:
            from .figures import render
            png = os.path.splitext(args.out)[0] + ".png"
            render(result.columns, result.rows, png, title=title)
            print(f"wrote {png}")
    for key, val in result.totals.items():
        print(f"{key}={val:.3f}" if isinstance(val, float) else f"{key}={val}")


def cmd_gen(args) -> int:
    trace = _load_trace(args)
    write_trace(args.out, trace)
    print(f"wrote {args.out} ({len(trace.events)} events, n={trace.n})")
    return 0


def cmd_general(args) -> int:
    trace = _load_trace(args)
    cfg = EngineConfig.for_n(trace.n, beta=args.beta, mode=args.mode,
                             deamortized=args.deamortized, seed=args.seed,
                             gprime_bound=args.gprime_bound)
    result = run_general(trace, cfg, metrics_every=args.metrics_every,
                         check_every=args.check_every)
    _emit(result, args, f"interval engine n={cfg.n} {args.mode}")
    return 0


def cmd_arb(args) -> int:
    trace = _load_trace(args)
    cfg = EngineConfig.for_n(trace.n, beta=args.beta, mode=args.mode,
                             deamortized=args.deamortized, seed=args.seed,
                             gprime_bound=args.gprime_bound)
    result = run_arb(trace, cfg, alpha=args.alpha, cap=args.cap,
                     metrics_every=args.metrics_every,
                     check_every=args.check_every)
    _emit(result, args, f"arboricity pipeline n={cfg.n} alpha={args.alpha}")
    return 0


def cmd_lds(args) -> int:
    trace = _load_trace(args)
    cfg = LdsConfig(n=trace.n, alpha=args.alpha, d=args.d,
                    d_prime=args.d_prime, k_cap=args.k_cap,
                    validate=not args.no_validate)
    result = run_lds(trace, cfg, metrics_every=args.metrics_every,
                     check_every=args.check_every, deep_every=args.deep_every)
    _emit(result, args, f"layered engine n={trace.n} alpha={args.alpha}")
    return 0


def cmd_bins(args) -> int:
    result = run_bins(args.bins, args.k, args.steps, args.variant,
                      args.adversary, seed=args.seed,
                      metrics_every=args.metrics_every)
    _emit(result, args, f"bins N={args.bins} k={args.k} {args.variant} "
                        f"{args.adversary}")
    return 0


def _parse_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, val = line.split("=", 1)
            out[key.strip()] = val.strip()
    return out


def _as_bool(s: str) -> bool:
    if s.lower() in ("1", "true", "yes", "on"):
        return True
    if s.lower() in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {s!r}")


def cmd_suite(args) -> int:
    from .acceptance import CRITERIA, run_suite
    cfg = _parse_config(args.config) if args.config else {}
    outdir = args.outdir or cfg.get("outdir", "results")
    figures = not args.no_figures and _as_bool(cfg.get("figures", "true"))
    quick = args.quick or _as_bool(cfg.get("quick", "false"))
    raw = args.criteria or cfg.get("criteria", "all")
    criteria = "all" if raw == "all" else [int(c) for c in raw.split(",")]
    workers = int(os.environ.get(WORKERS_ENV, cfg.get("workers", "1")))
    selected = sorted(CRITERIA) if criteria == "all" else sorted(criteria)
    if workers > 1 and len(selected) > 1:
        results_list = _run_parallel(selected, workers, quick)
        for r in results_list:
            print(r.line(), flush=True)
        if outdir:
            _write_suite_outputs(results_list, outdir, figures)
    else:
        results_list = run_suite(criteria, outdir=outdir, figures=figures,
                                 quick=quick)
    failed = [r for r in results_list if not r.passed]
    print(f"{len(results_list) - len(failed)}/{len(results_list)} criteria passed")
    return 1 if failed else 0


def _run_parallel(selected, workers: int, quick: bool):
    import multiprocessing as mp
    from .acceptance import CRITERIA

    with mp.get_context("spawn").Pool(workers) as pool:
        jobs = [(num, quick) for num in selected]
        return pool.starmap(_run_one, jobs)


def _run_one(num: int, quick: bool):
    from .acceptance import CRITERIA
    return CRITERIA[num](quick=quick)


def _write_suite_outputs(results, outdir: str, figures: bool) -> None:
    import csv as _csv
    from .acceptance import _write_samples
    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, "criteria_summary.csv"), "w", newline="") as fh:
        w = _csv.writer(fh, lineterminator="\n")
        w.writerow(("criterion", "name", "status", "detail", "elapsed_s"))
        for r in results:
            w.writerow((r.number, r.name, "PASS" if r.passed else "FAIL",
                        r.detail, f"{r.elapsed:.2f}"))
    _write_samples(outdir, figures)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="dyncolor",
        description="dynamic graph coloring engines and benchmark harness")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write an update trace file")
    _add_trace_args(p)
    p.add_argument("--out", default="trace.txt")
    p.set_defaults(func=cmd_gen)

    for name, fn, default_out in (("general", cmd_general, "general.csv"),
                                  ("arb", cmd_arb, "arb.csv")):
        p = sub.add_parser(name)
        _add_trace_args(p)
        _add_output_args(p, default_out)
        p.add_argument("--beta", type=float, default=1.0)
        p.add_argument("--mode", choices=("det", "rand"), default="det")
        p.add_argument("--deamortized", action="store_true")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--gprime-bound", type=int, default=None)
        if name == "arb":
            p.add_argument("--alpha", type=int, required=True)
            p.add_argument("--cap", type=int, default=None)
        p.set_defaults(func=fn)

    p = sub.add_parser("lds")
    _add_trace_args(p)
    _add_output_args(p, "lds.csv")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--d-prime", type=int, default=None)
    p.add_argument("--k-cap", type=int, default=None)
    p.add_argument("--deep-every", type=int, default=250)
    p.add_argument("--no-validate", action="store_true")
    p.set_defaults(func=cmd_lds)

    p = sub.add_parser("bins")
    _add_output_args(p, "bins.csv")
    p.add_argument("--bins", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--steps", type=int, default=10000)
    p.add_argument("--variant", choices=("det", "rand"), default="det")
    p.add_argument("--adversary", default="spread")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bins)

    p = sub.add_parser("suite", help="run the acceptance criteria")
    p.add_argument("--config", help="flat key=value config file")
    p.add_argument("--outdir", default=None)
    p.add_argument("--criteria", default=None,
                   help='"all" or comma-separated criterion numbers')
    p.add_argument("--quick", action="store_true",
                   help="smoke-sized grids (not the acceptance gate)")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_suite)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CheckFailure as exc:
        print(f"invariant check failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
