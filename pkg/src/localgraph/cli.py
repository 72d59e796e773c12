"""Command-line interface.

Results go to stdout, errors go to stderr as a single ``error: ...`` line.
Exit codes: 0 success, 1 parse/domain error, 2 I/O error, 3 unknown vertex,
64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import tempfile
import time
from dataclasses import dataclass

import numpy as np

from .cluster import DEFAULT_ALPHA, acl_cluster_result, spectral_cluster
from .diskgraph import open_disk_graph
from .errors import GraphError, ParseError, UnknownVertexError
from .generators import SbmSpec, erdos_renyi, sbm
from .graph import Graph, conductance, cut_weight, local_conductance, volume
from .graphio import (
    adjacencylist_to_edgelist,
    edgelist_to_adjacencylist,
    load_adjacencylist,
    load_edgelist,
    save_adjacencylist,
    save_edgelist,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_IO = 2
EXIT_UNKNOWN_VERTEX = 3
EXIT_USAGE = 64

_FORMATS = ("edgelist", "adjacencylist")
_EXTENSIONS = {".el": "edgelist", ".edgelist": "edgelist",
               ".al": "adjacencylist", ".adjacencylist": "adjacencylist"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"error: {message}\n")


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def _infer_format(path: str, explicit: str | None, parser: _Parser) -> str:
    if explicit:
        return explicit
    ext = os.path.splitext(path)[1].lower()
    if ext in _EXTENSIONS:
        return _EXTENSIONS[ext]
    parser.error(f"cannot infer graph format from {path!r}; pass --format")


def _load(path: str, fmt: str) -> Graph:
    return load_edgelist(path) if fmt == "edgelist" else load_adjacencylist(path)


# -- convert -------------------------------------------------------------------


def _cmd_convert(args, parser) -> int:
    src, dst = args.from_format, args.to_format
    if src == "edgelist" and dst == "adjacencylist":
        edgelist_to_adjacencylist(args.input, args.output)
    elif src == "adjacencylist" and dst == "edgelist":
        adjacencylist_to_edgelist(args.input, args.output)
    elif src == dst == "edgelist":
        save_edgelist(load_edgelist(args.input), args.output)
    else:
        save_adjacencylist(load_adjacencylist(args.input), args.output)
    return EXIT_OK


# -- local-cluster ---------------------------------------------------------------


def _cmd_local_cluster(args, parser) -> int:
    fmt = _infer_format(args.graph, args.format, parser)
    if (args.alpha is None) != (args.epsilon is None):
        parser.error("--alpha and --epsilon must be given together")
    if args.alpha is None and args.target_volume is None:
        parser.error("either --target-volume or --alpha/--epsilon is required")
    if args.mode == "disk":
        if fmt != "adjacencylist":
            parser.error("disk mode requires an adjacencylist graph")
        g = open_disk_graph(args.graph)
    else:
        g = _load(args.graph, fmt)
    if args.alpha is not None:
        alpha, epsilon = args.alpha, args.epsilon
    else:
        alpha, epsilon = DEFAULT_ALPHA, 1.0 / (20.0 * args.target_volume)
        if args.target_volume <= 0:
            parser.error("--target-volume must be positive")
    res = acl_cluster_result(g, args.seed, alpha, epsilon)
    print(", ".join(str(v) for v in sorted(res.cluster)) + ",")
    print(f"conductance={_fmt(res.conductance)}")
    return EXIT_OK


# -- gen ---------------------------------------------------------------------


def _save(g: Graph, path: str, fmt: str) -> None:
    if fmt == "edgelist":
        save_edgelist(g, path)
    else:
        save_adjacencylist(g, path)


def _cmd_gen(args, parser) -> int:
    fmt = _infer_format(args.output, args.format, parser)
    if args.model == "sbm":
        for name in ("k", "cluster_size", "p", "q"):
            if getattr(args, name) is None:
                parser.error(f"gen sbm requires --{name.replace('_', '-')}")
        spec = SbmSpec(k=args.k, cluster_size=args.cluster_size,
                       p=args.p, q=args.q, rng_seed=args.rng_seed)
        g, labels = sbm(spec)
        _save(g, args.output, fmt)
        with open(args.output + ".labels", "w") as f:
            f.writelines(f"{c}\n" for c in labels)
    else:
        if args.n is None or args.p is None:
            parser.error("gen er requires --n and --p")
        g = erdos_renyi(args.n, args.p, rng_seed=args.rng_seed)
        _save(g, args.output, fmt)
    return EXIT_OK


# -- bench ---------------------------------------------------------------------


@dataclass
class BenchRecord:
    k: int
    n: int
    mode: str
    load_seconds: float
    cluster_seconds: float
    total_seconds: float
    returned_size: int
    precision_vs_planted: float


def _bench_one(path, labels, seed_vertex, mode, target_volume, k, n) -> BenchRecord:
    epsilon = 1.0 / (20.0 * target_volume)
    t0 = time.perf_counter()
    g = open_disk_graph(path) if mode == "disk" else load_adjacencylist(path)
    t1 = time.perf_counter()
    res = acl_cluster_result(g, seed_vertex, DEFAULT_ALPHA, epsilon)
    t2 = time.perf_counter()
    hits = sum(1 for v in res.cluster if labels[v] == labels[seed_vertex])
    return BenchRecord(
        k=k, n=n, mode=mode, load_seconds=t1 - t0, cluster_seconds=t2 - t1,
        total_seconds=(t1 - t0) + (t2 - t1), returned_size=len(res.cluster),
        precision_vs_planted=hits / len(res.cluster),
    )


def _cmd_bench(args, parser) -> int:
    try:
        ks = [int(tok) for tok in args.ks.split(",") if tok]
    except ValueError:
        parser.error(f"--ks must be a comma-separated integer list, got {args.ks!r}")
    modes = [m.strip() for m in args.modes.split(",") if m.strip()]
    for m in modes:
        if m not in ("memory", "disk"):
            parser.error(f"unknown mode {m!r}")
    records = []
    with tempfile.TemporaryDirectory(prefix="bench-") as tmpdir:
        for k in ks:
            for rep in range(args.repeats):
                rng = np.random.default_rng(
                    np.random.SeedSequence(args.rng_seed, spawn_key=(k, rep))
                )
                spec = SbmSpec(k=k, cluster_size=args.cluster_size, p=0.01,
                               q=0.001 / k, rng_seed=int(rng.integers(2**63)))
                g, labels = sbm(spec)
                path = os.path.join(tmpdir, f"sbm-k{k}-r{rep}.al")
                save_adjacencylist(g, path)
                seed_vertex = int(rng.integers(g.n))
                for _ in range(1000):
                    if g.degree(seed_vertex) > 0:
                        break
                    seed_vertex = int(rng.integers(g.n))
                else:
                    print("error: no seed vertex with positive degree", file=sys.stderr)
                    return EXIT_PARSE
                del g
                for mode in modes:
                    rec = _bench_one(path, labels, seed_vertex, mode,
                                     args.target_volume, k, spec.n)
                    records.append(rec)
                    print(f"k={rec.k} mode={rec.mode} load={rec.load_seconds:.3f}s "
                          f"cluster={rec.cluster_seconds:.3f}s "
                          f"size={rec.returned_size} precision={rec.precision_vs_planted:.3f}",
                          file=sys.stderr)
    with open(args.output, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["k", "n", "mode", "load_seconds", "cluster_seconds",
                         "total_seconds", "returned_size", "precision"])
        for r in records:
            # serialize total as the sum of the rounded parts so the CSV
            # satisfies total = load + cluster exactly as written
            load = round(r.load_seconds, 6)
            cluster = round(r.cluster_seconds, 6)
            writer.writerow([r.k, r.n, r.mode, f"{load:.6f}",
                             f"{cluster:.6f}", f"{load + cluster:.6f}",
                             r.returned_size, f"{r.precision_vs_planted:.6f}"])
    return EXIT_OK


# -- spectral-cluster -------------------------------------------------------------


def _cmd_spectral(args, parser) -> int:
    fmt = _infer_format(args.graph, args.format, parser)
    g = _load(args.graph, fmt)
    labels = spectral_cluster(g, args.k, rng_seed=args.rng_seed)
    for v, c in enumerate(labels):
        print(f"{v} {c}")
    return EXIT_OK


# -- stats ---------------------------------------------------------------------


def _cmd_stats(args, parser) -> int:
    fmt = _infer_format(args.graph, args.format, parser)
    g = _load(args.graph, fmt)
    try:
        members = [int(tok) for tok in args.set.split(",") if tok.strip() != ""]
    except ValueError:
        parser.error(f"--set must be a comma-separated vertex list, got {args.set!r}")
    fields = [f"volume={_fmt(volume(g, members))}", f"cut={_fmt(cut_weight(g, members))}"]
    try:
        fields.append(f"conductance={_fmt(conductance(g, members))}")
    except ValueError:
        fields.append("conductance=error")
    try:
        fields.append(f"local_conductance={_fmt(local_conductance(g, members))}")
    except ValueError:
        fields.append("local_conductance=error")
    print(" ".join(fields))
    return EXIT_OK


# -- wiring --------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="localgraph", description="Local graph clustering toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert between graph file formats")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--from", dest="from_format", required=True, choices=_FORMATS)
    p.add_argument("--to", dest="to_format", required=True, choices=_FORMATS)
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("local-cluster", help="find a cluster around a seed vertex")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=_FORMATS)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--target-volume", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--mode", choices=("memory", "disk"), default="memory")
    p.set_defaults(fn=_cmd_local_cluster)

    p = sub.add_parser("gen", help="generate a random graph file")
    p.add_argument("model", choices=("sbm", "er"))
    p.add_argument("--output", required=True)
    p.add_argument("--format", choices=_FORMATS)
    p.add_argument("--k", type=int)
    p.add_argument("--cluster-size", type=int, dest="cluster_size")
    p.add_argument("--p", type=float)
    p.add_argument("--q", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--rng-seed", type=int, default=0, dest="rng_seed")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("bench", help="time local clustering in memory vs on disk")
    p.add_argument("--ks", required=True)
    p.add_argument("--target-volume", type=float, default=20000.0)
    p.add_argument("--modes", default="memory,disk")
    p.add_argument("--rng-seed", type=int, default=0, dest="rng_seed")
    p.add_argument("--output", required=True)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--cluster-size", type=int, default=1000, dest="cluster_size")
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("spectral-cluster", help="partition the whole graph spectrally")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=_FORMATS)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rng-seed", type=int, default=0, dest="rng_seed")
    p.set_defaults(fn=_cmd_spectral)

    p = sub.add_parser("stats", help="vertex-set statistics")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=_FORMATS)
    p.add_argument("--set", required=True)
    p.set_defaults(fn=_cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, parser)
    except UnknownVertexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_VERTEX
    except (ParseError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
