#!/usr/bin/env python3
"""Sweep the block decomposition over a range of orders.

For each n, report the minimal root order, the block parameters, and the
time taken to build and self-check the blocks.
"""

from __future__ import annotations

import argparse
import time

from butson.construct import BlockParams, block_count, build_blocks, min_h


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=64)
    ap.add_argument("--m", type=int, default=1,
                    help="off-diagonal multiplier (must be coprime to n)")
    args = ap.parse_args()

    print(f"{'n':>4} {'h':>4} {'k':>4} {'case':<10} {'blocks':>6} {'ms':>8}")
    for n in range(1, args.max_n + 1):
        h = min_h(n)
        try:
            params = BlockParams.plan(n, args.m)
        except Exception as exc:  # noqa: BLE001 - report and move on
            print(f"{n:>4} {h:>4}    - {type(exc).__name__}")
            continue
        t0 = time.perf_counter()
        build_blocks(params)
        ms = (time.perf_counter() - t0) * 1000.0
        print(f"{n:>4} {h:>4} {params.k:>4} {params.case:<10} "
              f"{block_count(n, h):>6} {ms:>8.2f}")


if __name__ == "__main__":
    main()
