"""Command line front end: ``algbfs run|compare|stats|verify``.

Graphs come from ``--graph``: a SNAP edge list, a FLAB1 cache, or
``gnp:<n>:<p>`` for a seeded random graph (``--seed``).
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import math
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import algebra, corpus
from .graph import EdgeList, GraphError, build_csr, degree_stats
from .ingest import load_graph, search_source, stats as graph_stats
from .kernels import run_variant
from .oracle import bfs_combinatorial
from .results import Variant
from .semiring import SEMIRINGS, get_semiring

EXIT_USAGE = 2
EXIT_MISMATCH = 3

ALGOS = [
    "combinatorial",
    "spmv",
    "spmspv",
    "spmmspv",
    "submatrix",
    "submatrix-allnz",
    "parallel",
]
COMPARE_ALGOS = ["submatrix", "submatrix-allnz", "spmmspv", "spmspv", "spmv", "parallel"]


@dataclass
class RunRecord:
    graph: str
    n: int
    m: int
    source: int
    variant: str
    semiring: str
    workers: int
    steps: int
    reached: int
    semiring_evals: int | None
    nonzeros_touched: int | None
    wallclock_seconds: float | None


RUN_FIELDS = [f.name for f in dataclasses.fields(RunRecord)]


class UsageError(Exception):
    pass


def _load(args) -> tuple[str, EdgeList]:
    spec = args.graph
    if spec.startswith("gnp:"):
        try:
            _, n, p = spec.split(":")
            g = corpus.gnp(int(n), float(p), seed=args.seed, directed=args.directed)
        except ValueError:
            raise UsageError(f"bad random graph spec {spec!r}; expected gnp:<n>:<p>") from None
        return spec, g
    path = Path(spec)
    if not path.is_file():
        raise UsageError(f"graph file not found: {spec}")
    try:
        return path.stem, load_graph(path, directed=args.directed)
    except (GraphError, OSError) as exc:
        raise UsageError(str(exc)) from None


def _source(args, g: EdgeList, a) -> int:
    if args.source is None:
        if g.n == 0:
            raise UsageError("graph has no vertices")
        return search_source(a, seed=args.seed or 0)[0]
    try:
        return g.vertex_of(args.source)
    except GraphError as exc:
        raise UsageError(f"bad source: {exc}") from None


def _emit(rows: list[dict], fields: list[str], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
        return
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if row[k] is None else row[k] for k in fields})


def _execute(algo: str, a, source: int, s, workers: int):
    if algo == "combinatorial":
        t0 = time.perf_counter()
        out = bfs_combinatorial(a, source)
        return out, None, time.perf_counter() - t0
    t0 = time.perf_counter()
    run = run_variant(algo, a, source, s, workers=workers)
    return run.output, run, time.perf_counter() - t0


def cmd_run(args, out) -> int:
    name, g = _load(args)
    a = build_csr(g)
    source = _source(args, g, a)
    s = get_semiring(args.semiring)
    workers = args.threads if args.algo == "parallel" else 1
    output, run, seconds = _execute(args.algo, a, source, s, workers)
    rec = RunRecord(
        name,
        g.n,
        g.m,
        g.label_of(source),
        args.algo,
        s.name,
        workers,
        len(output.frontier_sizes),
        output.reached,
        run.ops.semiring_evals if run and args.count_ops else None,
        run.ops.nonzeros_touched if run and args.count_ops else None,
        round(seconds, 6) if args.time else None,
    )
    _emit([dataclasses.asdict(rec)], RUN_FIELDS, args.format, out)
    if args.check:
        oracle = bfs_combinatorial(a, source)
        if not np.array_equal(oracle.levels, output.levels):
            print("error: levels differ from the combinatorial oracle", file=sys.stderr)
            return EXIT_MISMATCH
    return 0


COMPARE_FIELDS = [
    "graph",
    "source",
    "variant",
    "steps",
    "reached",
    "semiring_evals",
    "nonzeros_touched",
    "ratio_to_submatrix",
    "log10_evals",
]


def cmd_compare(args, out) -> int:
    name, g = _load(args)
    a = build_csr(g)
    source = _source(args, g, a)
    s = get_semiring(args.semiring)
    oracle = bfs_combinatorial(a, source) if args.check else None
    runs = [(algo, run_variant(algo, a, source, s, workers=args.threads)) for algo in COMPARE_ALGOS]
    base = runs[0][1].ops.semiring_evals
    rows = []
    mismatch = False
    for algo, run in runs:
        evals = run.ops.semiring_evals
        rows.append(
            {
                "graph": name,
                "source": g.label_of(source),
                "variant": algo,
                "steps": run.ops.steps,
                "reached": run.output.reached,
                "semiring_evals": evals,
                "nonzeros_touched": run.ops.nonzeros_touched,
                "ratio_to_submatrix": round(evals / base, 6) if base else None,
                "log10_evals": round(math.log10(evals), 6) if evals else None,
            }
        )
        if oracle is not None and not np.array_equal(oracle.levels, run.levels):
            mismatch = True
    _emit(rows, COMPARE_FIELDS, args.format, out)
    if mismatch:
        print("error: levels differ from the combinatorial oracle", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


STATS_FIELDS = [
    "graph", "n", "m", "source", "eccentricity", "reached", "min_deg", "max_deg", "mean_deg",
]


def cmd_stats(args, out) -> int:
    name, g = _load(args)
    a = build_csr(g)
    source = _source(args, g, a)
    st = graph_stats(g, source, a)
    row = {
        "graph": name,
        "n": st.n,
        "m": st.m,
        "source": g.label_of(source),
        "eccentricity": st.eccentricity_from_source,
        "reached": st.components_reached,
        "min_deg": None,
        "max_deg": None,
        "mean_deg": None,
    }
    if not g.directed:
        ds = degree_stats(a)
        assert ds.m == st.m
        row.update(min_deg=ds.min_deg, max_deg=ds.max_deg, mean_deg=round(ds.mean_deg, 6))
    _emit([row], STATS_FIELDS, args.format, out)
    return 0


def cmd_verify(args, out) -> int:
    """Randomized check of the selection-matrix identities, one line per claim."""
    rng = np.random.default_rng(args.seed)
    tally = {
        "S_(k+1) S_k = S_(k+1)": 0,
        "A_(k+1) = S_(k+1) A_k S_(k+1) = S_(k+1) A S_(k+1)": 0,
        "x_(k+1) = A_k A^(k-1) x_1": 0,
        "A_k y_k = A_k x_k": 0,
        "frontiers match submatrix kernel": 0,
    }
    semirings = list(SEMIRINGS.values())
    for _ in range(args.graphs):
        n = int(rng.integers(2, args.max_n + 1))
        p = float(rng.choice([0.05, 0.1, 0.2, 0.4]))
        g = corpus.gnp(n, p, seed=int(rng.integers(0, 2**32)))
        a = build_csr(g)
        source = int(rng.integers(0, n))
        frontiers = [f.tolist() for f in bfs_combinatorial(a, source).frontiers()]
        for s in semirings:
            rep = algebra.verify_identities(a, source, s)
            tally["S_(k+1) S_k = S_(k+1)"] += not rep.selection_product
            tally["A_(k+1) = S_(k+1) A_k S_(k+1) = S_(k+1) A S_(k+1)"] += not rep.recurrence_vs_direct
            tally["x_(k+1) = A_k A^(k-1) x_1"] += not rep.transform
            tally["A_k y_k = A_k x_k"] += not rep.intermediate
            seq = algebra.selection_sequence(a, source, s)
            kern = run_variant(Variant.SUBMATRIX, a, source, s).output.frontiers()
            seq_f = [st.frontier.tolist() for st in seq]
            tally["frontiers match submatrix kernel"] += not (
                seq_f == frontiers == [f.tolist() for f in kern]
            )
    for claim, failures in tally.items():
        status = "PASS" if failures == 0 else "FAIL"
        print(f"{status}  {claim}  ({failures} failures over {args.graphs} graphs x 3 semirings)", file=out)
    return 0 if not any(tally.values()) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="SNAP edge list, FLAB1 cache, or gnp:<n>:<p>")
    common.add_argument("--directed", action="store_true", help="treat edges as directed")
    common.add_argument("--source", type=int, help="external vertex id (default: searched)")
    common.add_argument("--semiring", choices=sorted(SEMIRINGS), default="boolean")
    common.add_argument("--threads", type=int, default=1, help="workers for the parallel kernel")
    common.add_argument("--check", action="store_true", help="compare levels to the oracle")
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="algbfs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", parents=[common], help="run one BFS variant")
    p.add_argument("--algo", choices=ALGOS, default="submatrix")
    p.add_argument("--count-ops", action="store_true", help="report semiring evaluation counts")
    p.add_argument("--time", action="store_true", help="report kernel wallclock seconds")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("compare", parents=[common], help="operation counts of every variant")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("stats", parents=[common], help="graph size and source eccentricity")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="randomized check of the masked-matrix identities")
    p.add_argument("--graphs", type=int, default=200)
    p.add_argument("--max-n", type=int, default=32)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "verify":
        if not args.graph:
            parser.error("--graph is required")
        if args.threads < 1:
            parser.error("--threads must be >= 1")
    else:
        if not 2 <= args.max_n <= algebra.MAX_DENSE_N:
            parser.error(f"--max-n must be in 2..{algebra.MAX_DENSE_N}")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
