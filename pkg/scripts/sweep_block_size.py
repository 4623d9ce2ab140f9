#!/usr/bin/env python3
"""Bucket-size sweep for the dominance-route tally kernel.

For each (candidates, voters) point, times the naive tally and the
dominance-count route across bucket sizes, checking the outputs stay
bit-identical. CSV rows ``m,n,algo,seconds`` on stdout.

Usage:
    python scripts/sweep_block_size.py --points 32:64,64:128 --seed 1
"""

import argparse
import sys
import time

from schulze.ballots import random_profile
from schulze.majority_graph import build_wmg_fast, build_wmg_naive


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", default="16:32,32:64,64:128",
                        help="comma-separated m:n pairs")
    parser.add_argument("--tie-prob", type=float, default=0.3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print("m,n,algo,seconds")
    for point in args.points.split(","):
        m, n = (int(x) for x in point.split(":"))
        profile = random_profile(m, n, args.tie_prob, args.seed)
        start = time.perf_counter()
        reference = build_wmg_naive(profile)
        print(f"{m},{n},naive,{time.perf_counter() - start:.4f}")
        block = 1
        while block <= 2 * m:
            start = time.perf_counter()
            fast = build_wmg_fast(profile, block_size=block)
            elapsed = time.perf_counter() - start
            print(f"{m},{n},fast_s{block},{elapsed:.4f}")
            if fast != reference:
                print(f"MISMATCH at m={m} block={block}", file=sys.stderr)
                return 1
            block *= 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
