#!/usr/bin/env python3
"""Benchmark the pure-Python path-count kernel against the compiled one.

Two regimes matter: with sparse gap sets the counts stay inside 64 bits and
the compiled kernel runs the whole triple loop in C integers; with the full
gap range the counts blow past 64 bits almost immediately, the kernel falls
back to Python integers, and only the loop overhead is saved.
"""

import argparse
import time

from gapwords.counting import gap_adjacency
from gapwords._kernel_py import path_count_kernel as pure_kernel

try:
    from gapwords._kernel import path_count_kernel as fast_kernel
except ImportError:
    fast_kernel = None

CASES = [
    ("sparse 3-5", 40, range(3, 6)),
    ("sparse 3-5", 80, range(3, 6)),
    ("sparse 3-5", 160, range(3, 6)),
    ("sparse 3-5", 240, range(3, 6)),
    ("all gaps", 40, None),
    ("all gaps", 80, None),
    ("all gaps", 120, None),
]


def best_of(kernel, rows, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        kernel(rows)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3, help="take the best of this many runs")
    args = parser.parse_args()

    if fast_kernel is None:
        print("compiled kernel not built; showing pure-Python times only")

    header = f"{'case':<12} {'n':>4} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, n, gaps in CASES:
        rows = gap_adjacency(n, gaps if gaps is not None else range(1, n))
        t_pure = best_of(pure_kernel, rows, args.repeats)
        if fast_kernel is None:
            print(f"{label:<12} {n:>4} {t_pure:>10.4f} {'-':>13} {'-':>8}")
            continue
        assert fast_kernel(rows) == pure_kernel(rows), "kernels disagree"
        t_fast = best_of(fast_kernel, rows, args.repeats)
        print(f"{label:<12} {n:>4} {t_pure:>10.4f} {t_fast:>13.4f} {t_pure / t_fast:>7.1f}x")


if __name__ == "__main__":
    main()
