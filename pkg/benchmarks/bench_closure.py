#!/usr/bin/env python3
"""Benchmark the compiled closure kernel against the pure-Python fallback.

The closure BFS dominates the runtime of every classification, so this is
the package's hot loop.  Usage:

    python benchmarks/bench_closure.py [--repeat N]
"""

import argparse
import time

import twosilt as ts
from twosilt import _kernel
from twosilt._kernel import pure

try:
    from twosilt._kernel import _closure as compiled
except ImportError:
    compiled = None

CASES = [("A", 5), ("A", 6), ("D", 5), ("E", 6)]


def run(graph, impl, repeat):
    gen_seqs = tuple((i,) for i in range(graph.rank))
    best = float("inf")
    size = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        table = _kernel.closure(graph.rank, graph.adjacency0, gen_seqs, 10 ** 7, impl=impl)
        best = min(best, time.perf_counter() - t0)
        size = table.size
    return size, best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"{'type':>6} {'elements':>9} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for family, rank in CASES:
        graph = ts.build_dynkin(family, rank)
        size, t_pure = run(graph, pure, args.repeat)
        if compiled is not None:
            _, t_comp = run(graph, compiled, args.repeat)
            print(f"{family}{rank:>5} {size:>9} {t_pure:>10.3f} {t_comp:>13.3f} "
                  f"{t_pure / t_comp:>7.1f}x")
        else:
            print(f"{family}{rank:>5} {size:>9} {t_pure:>10.3f} {'(not built)':>13} {'-':>8}")


if __name__ == "__main__":
    main()
