#!/usr/bin/env python3
"""Exercise the recursive criterion against the direct rank oracle.

Runs the exhaustive scans at t = 0 and t = 1 and a seeded random sample at
t = 2, reporting agreement counts.
"""
import argparse
import sys
import time

from char2interp.enumeration import exhaustive_agreement, sampled_agreement


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=10000, help="samples at t=2")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    all_ok = True
    for scan_fn, label in (
        (lambda: exhaustive_agreement(0), "t=0 exhaustive"),
        (lambda: exhaustive_agreement(1), "t=1 exhaustive"),
        (lambda: sampled_agreement(2, args.count, args.seed), f"t=2 sample({args.count})"),
    ):
        start = time.monotonic()
        scan = scan_fn()
        elapsed = time.monotonic() - start
        print(f"{label}: {scan.agreements}/{scan.total} agree ({elapsed:.1f}s)")
        all_ok &= scan.all_agree
        for s in scan.disagreements[:5]:
            print("  DISAGREEMENT on", sorted(s))
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
