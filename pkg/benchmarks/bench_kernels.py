#!/usr/bin/env python3
"""Compare the compiled sweep kernel against the pure-Python twin.

Runs the closed sweeps (full count, corner split, k=3 corner census)
through both backends on desk-scale cases, checks that the results
agree, and prints wall times plus the speedup.  Pass --full for the
larger cases (the pure kernel takes tens of seconds there).
"""

import argparse
import time

from lambdakit import _kernel_py

try:
    from lambdakit import _speedups
except ImportError:
    _speedups = None

DEFAULT_CASES = [
    ("count_all", (5, 2)),
    ("count_all", (6, 2)),
    ("count_all", (6, 3)),
    ("count_split", (6, 3)),
    ("corner_census3", (6,)),
]

FULL_CASES = [
    ("count_all", (7, 2)),
    ("count_split", (7, 3)),
    ("corner_census3", (7,)),
]


def timed(kernel, op, args):
    start = time.perf_counter()
    result = getattr(kernel, op)(*args)
    return result, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true",
                        help="include the larger cases (slow in pure Python)")
    opts = parser.parse_args()

    cases = DEFAULT_CASES + (FULL_CASES if opts.full else [])
    header = f"{'case':<28}{'python':>12}{'cython':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for op, args in cases:
        label = f"{op}{args}"
        pure_result, pure_time = timed(_kernel_py, op, args)
        if _speedups is None:
            print(f"{label:<28}{pure_time:>11.3f}s{'n/a':>12}{'n/a':>10}")
            continue
        fast_result, fast_time = timed(_speedups, op, args)
        if pure_result != fast_result:
            raise SystemExit(f"backend mismatch on {label}: "
                             f"{pure_result} vs {fast_result}")
        ratio = pure_time / fast_time if fast_time else float("inf")
        print(f"{label:<28}{pure_time:>11.3f}s{fast_time:>11.3f}s{ratio:>9.1f}x")
    if _speedups is None:
        print("\ncompiled kernel not built; showing pure-Python times only")


if __name__ == "__main__":
    main()
