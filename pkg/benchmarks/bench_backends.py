"""Wallclock of each kernel on the compiled and pure-Python backends.

    python benchmarks/bench_backends.py --n 20000 --degree 8 --repeat 3
"""

import argparse
import timeit

from algbfs import _backend, corpus
from algbfs.graph import build_csr
from algbfs.ingest import search_source
from algbfs.kernels import run_variant

KERNELS = ["spmv", "spmspv", "spmmspv", "submatrix", "submatrix-allnz", "parallel"]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=20000)
    ap.add_argument("--degree", type=float, default=8.0, help="expected mean degree")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    g = corpus.connected_gnp(args.n, args.degree / args.n, seed=args.seed)
    a = build_csr(g)
    source, ecc = search_source(a, tries=2, seed=args.seed)
    backends = _backend.available()
    print(f"n={g.n} m={g.m} source={source} ecc={ecc} backends={','.join(backends)}")
    print(f"{'kernel':<16}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name in KERNELS:
        best = {}
        for b in backends:
            call = lambda: run_variant(name, a, source, workers=args.workers, backend=b)  # noqa: E731
            best[b] = min(timeit.repeat(call, number=1, repeat=args.repeat))
        cells = "".join(f"{best[b]:>11.4f}s" for b in backends)
        ratio = best["python"] / best["compiled"] if len(best) == 2 else float("nan")
        print(f"{name:<16}{cells}{ratio:>9.1f}x")


if __name__ == "__main__":
    main()
