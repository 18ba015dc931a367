#!/usr/bin/env python3
"""Run the randomized property suites over several seeds and tabulate the outcomes."""
from __future__ import annotations

import argparse
import sys

from puretop.suites import run_all, suite_seed


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds")
    ap.add_argument("--seed", type=int, default=None, help="first seed (default PURETOP_SEED)")
    args = ap.parse_args()
    first = suite_seed(args.seed)
    failed = 0
    print(f"{'seed':>10}  {'suite':<14} {'n':>4} {'fail':>4} {'time':>7}  counts")
    for seed in range(first, first + args.seeds):
        for r in run_all(seed):
            counts = " ".join(f"{k}={v}" for k, v in sorted(r.counts.items()))
            print(f"{seed:>10}  {r.name:<14} {r.instances:>4} {len(r.failures):>4} {r.elapsed:>6.2f}s  {counts}")
            for f in r.failures[:5]:
                print(f"{'':>12}{f}")
            failed += len(r.failures)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
