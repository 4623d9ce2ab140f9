#!/usr/bin/env python3
"""Scaling study: all-winners computation vs the cubic widest-path baseline.

Emits ``m,algo,seconds`` CSV rows on stdout and a short summary on stderr
(near-quadratic scaling ratio and the baseline slowdown at the largest size
both algorithms share).

Usage examples:
    python scripts/bench_scaling.py
    python scripts/bench_scaling.py --sizes 250,500,1000,2000 --bound 25
"""

import argparse
import sys
import time

from schulze.bottleneck import apbp, winners_from_bottlenecks
from schulze.majority_graph import random_margin_graph
from schulze.winners import find_all_winners


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="250,500,1000,2000")
    parser.add_argument("--bound", type=int, default=25, help="weight magnitude bound")
    parser.add_argument("--baseline-cap", type=int, default=1000,
                        help="largest size to run the cubic baseline at")
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    print("m,algo,seconds")
    fast_times = {}
    slow_times = {}
    for idx, m in enumerate(sizes):
        graph = random_margin_graph(m, args.bound, seed=args.seed + idx)
        fast, t_fast = timed(lambda: find_all_winners(graph))
        fast_times[m] = t_fast
        print(f"{m},dscc,{t_fast:.4f}")
        if m <= args.baseline_cap:
            slow, t_slow = timed(lambda: winners_from_bottlenecks(apbp(graph)))
            slow_times[m] = t_slow
            print(f"{m},baseline,{t_slow:.4f}")
            if fast != slow:
                print(f"MISMATCH at m={m}", file=sys.stderr)
                return 1

    for small, large in zip(sizes, sizes[1:]):
        if large == 2 * small and small in fast_times:
            ratio = fast_times[large] / fast_times[small]
            print(
                f"t({large})/t({small}) = {ratio:.2f} (quadratic would be 4.0)",
                file=sys.stderr,
            )
    shared = [m for m in sizes if m in slow_times]
    if shared:
        m = max(shared)
        print(
            f"baseline/dscc at m={m}: x{slow_times[m] / fast_times[m]:.2f}",
            file=sys.stderr,
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
