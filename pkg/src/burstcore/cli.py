"""Command-line entry point: ``burstcore <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import statistics
import sys
import time
from pathlib import Path

from . import __version__
from .core_mining import mdc, mdc_baseline, mdc_plus
from .density import as_fraction
from .generate import GenConfig, write_instance
from .metrics import score
from .pareto import frontier_to_json, pomdc, pomdc_baseline
from .segment_density import CacheStateError
from .temporal_graph import build_graph, read_edge_list

log = logging.getLogger("burstcore")

EXIT_USAGE = 2
EXIT_INTERNAL = 3

MDC_ALGOS = {"baseline": mdc_baseline, "dp": mdc, "incremental": mdc_plus}
BENCH_ALGOS = {**MDC_ALGOS, "pomdc": None, "pomdc-baseline": None}


class UsageError(Exception):
    pass


def _bucket_width(text: str):
    if text == "raw":
        return "raw"
    try:
        width = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bucket width must be 'raw' or a positive integer, got {text!r}")
    if width < 1:
        raise argparse.ArgumentTypeError("bucket width must be positive")
    return width


def _delta(text: str):
    try:
        value = as_fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if value <= 0:
        raise argparse.ArgumentTypeError(f"delta must be > 0, got {text}")
    return value


def _window_len(text: str) -> int:
    try:
        l = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"l must be an integer, got {text!r}")
    if l < 2:
        raise argparse.ArgumentTypeError("l must be >= 2")
    return l


def _probability(text: str) -> float:
    p = float(text)
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {text}")
    return p


def _load(args):
    parsed = read_edge_list(args.input, args.bucket_width)
    log.info("read %s: %d lines, %d edges, %d self-loops, %d duplicates", args.input,
             parsed.stats.lines, parsed.stats.edges, parsed.stats.self_loops, parsed.stats.duplicates)
    return build_graph(parsed, allow_empty=True), parsed.stats


def _emit(args, payload) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_stats(args) -> int:
    g, ingest = _load(args)
    out = g.stats()
    out["ingest"] = {"lines": ingest.lines, "self_loops": ingest.self_loops,
                     "duplicates": ingest.duplicates}
    _emit(args, out)
    return 0


def cmd_mdc(args) -> int:
    g, _ = _load(args)
    algo = MDC_ALGOS[args.algo]
    start = time.perf_counter()
    if args.algo == "dp":
        result = algo(g, args.l, args.delta, threads=args.threads)
    else:
        result = algo(g, args.l, args.delta)
    log.info("%s: %d nodes in %.3fs", args.algo, len(result.nodes), time.perf_counter() - start)
    _emit(args, result.to_json(g))
    return 0


def cmd_pomdc(args) -> int:
    g, _ = _load(args)
    points = pomdc_baseline(g) if args.no_prune else pomdc(g)
    _emit(args, frontier_to_json(points, g))
    return 0


def cmd_metrics(args) -> int:
    g, _ = _load(args)
    labels = []
    with open(args.nodes, encoding="utf-8") as fh:
        for line in fh:
            labels.extend(line.split("#", 1)[0].split())
    try:
        members = {g.node_id(lab) for lab in labels}
    except KeyError as exc:
        raise UsageError(f"node {exc.args[0]!r} is not in the graph") from None
    if not members:
        raise UsageError("node list is empty")
    _emit(args, score(g, members).to_json())
    return 0


def cmd_gen(args) -> int:
    if not args.output:
        raise UsageError("gen needs --output")
    cfg = GenConfig(n=args.n, horizon=args.horizon, p_background=args.p_background,
                    clique_size=args.clique_size, window=tuple(args.window or (1, args.horizon)),
                    p_burst=args.p_burst, seed=args.seed)
    count, sidecar = write_instance(cfg, args.output)
    log.info("wrote %d edges to %s (planted members in %s)", count, args.output, sidecar)
    return 0


def _run_once(name, g, l, delta):
    if name == "pomdc":
        pts = pomdc(g)
        return sum(len(p.nodes) for p in pts)
    if name == "pomdc-baseline":
        pts = pomdc_baseline(g)
        return sum(len(p.nodes) for p in pts)
    return len(MDC_ALGOS[name](g, l, delta).nodes)


def cmd_bench(args) -> int:
    if args.reps < 3:
        raise UsageError("bench needs --reps >= 3")
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in BENCH_ALGOS:
            raise UsageError(f"unknown algorithm {a!r}; choose from {', '.join(BENCH_ALGOS)}")
    rows = []
    for path in args.instances:
        g = build_graph(read_edge_list(path, args.bucket_width), allow_empty=True)
        medians = {}
        for name in algos:
            times, out = [], None
            for _ in range(args.reps):
                start = time.perf_counter()
                out = _run_once(name, g, args.l, args.delta)
                times.append((time.perf_counter() - start) * 1000.0)
            medians[name] = statistics.median(times)
            rows.append((Path(path).name, name, f"{medians[name]:.3f}", out))
            log.info("%s %s: median %.1f ms", path, name, medians[name])
        for slow, fast in (("baseline", "incremental"), ("pomdc-baseline", "pomdc")):
            if slow in medians and fast in medians and medians[fast] > 0:
                print(f"{Path(path).name}: {slow}/{fast} speedup {medians[slow] / medians[fast]:.2f}x",
                      file=sys.stderr)
    fh = open(args.output, "w", newline="", encoding="utf-8") if args.output else sys.stdout
    try:
        writer = csv.writer(fh)
        writer.writerow(["instance", "algo", "median_ms", "nodes_out"])
        writer.writerows(rows)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="burstcore", description="Mine bursting dense cores from temporal edge lists.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def io_args(p, need_input=True):
        if need_input:
            p.add_argument("--input", "-i", required=True, help="edge list with 'u v t' lines")
            p.add_argument("--bucket-width", type=_bucket_width, default=1,
                           help="timestamp bucket width, or 'raw' for the gcd grid (default 1)")
        p.add_argument("--output", "-o", help="output file (default stdout)")

    p = sub.add_parser("stats", help="graph size summary as JSON")
    io_args(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("mdc", help="(l, delta)-maximal dense core as JSON")
    io_args(p)
    p.add_argument("--l", type=_window_len, required=True, help="minimum window length (>= 2)")
    p.add_argument("--delta", type=_delta, required=True, help="density threshold, decimal or p/q")
    p.add_argument("--algo", choices=sorted(MDC_ALGOS), default="incremental")
    p.add_argument("--threads", type=int, default=1, help="workers for initial density pass (dp only)")
    p.set_defaults(func=cmd_mdc)

    p = sub.add_parser("pomdc", help="Pareto frontier of dense cores as JSON")
    io_args(p)
    p.add_argument("--no-prune", action="store_true", help="skip k-core pruning between rounds")
    p.set_defaults(func=cmd_pomdc)

    p = sub.add_parser("metrics", help="AD/AS scores of a node set")
    io_args(p)
    p.add_argument("--nodes", required=True, help="file with whitespace-separated node labels")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("gen", help="write a synthetic edge list with a planted clique")
    io_args(p, need_input=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--p-background", type=_probability, default=0.0)
    p.add_argument("--clique-size", type=int, default=0)
    p.add_argument("--window", type=int, nargs=2, metavar=("START", "END"))
    p.add_argument("--p-burst", type=_probability, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="median wall time per algorithm as CSV")
    p.add_argument("instances", nargs="+", help="edge-list files")
    p.add_argument("--bucket-width", type=_bucket_width, default=1)
    p.add_argument("--l", type=_window_len, default=3)
    p.add_argument("--delta", type=_delta, default=as_fraction(3))
    p.add_argument("--algos", default="baseline,dp,incremental")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--output", "-o", help="CSV file (default stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def _setup_logging() -> None:
    level = os.environ.get("BURSTCORE_LOG", "error").lower()
    levels = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(level=levels.get(level, logging.ERROR), format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except (CacheStateError, AssertionError) as exc:
        print(f"burstcore: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, OSError, ValueError) as exc:
        print(f"burstcore: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
