#!/usr/bin/env python3
"""Sweep the tree shift identities over growing random-tree sizes.

Runs the verification harness for a ladder of size caps and reports trees
checked, failures, and wall time per rung. With a correct implementation
every rung ends with zero failures; the point of the script is to make
that cheap to re-confirm at sizes larger than the test suite uses.
"""

import argparse
import sys
import time

from hosoya import verify_identities


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[10, 50, 100, 200, 400])
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    total_failures = 0
    for n_max in args.sizes:
        start = time.perf_counter()
        report = verify_identities(n_max, args.trials, args.seed)
        elapsed = time.perf_counter() - start
        total_failures += len(report.failures)
        print(
            f"n_max {n_max:>5}: {report.trees_checked} trees, "
            f"{len(report.failures)} failures, {elapsed:.2f}s"
        )
        for failure in report.failures:
            print(
                f"  seed {failure.seed} {failure.identity}: "
                f"expected {failure.expected}, got {failure.actual}"
            )
    return 1 if total_failures else 0


if __name__ == "__main__":
    sys.exit(main())
