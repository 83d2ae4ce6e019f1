#!/usr/bin/env python3
"""Tabulate Var(C_n)/n^2 against its limit 7 - 2*pi^2/3 for geometric n.

Emits CSV to stdout; pipe into a plotting tool to see the O(log n / n)
approach to the limit.
"""

import argparse

from quickvar.moments import ASYMPTOTIC_VARIANCE_RATIO, variance_ratio


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-exp", type=int, default=18, help="largest power of two for n")
    args = parser.parse_args()

    limit = ASYMPTOTIC_VARIANCE_RATIO
    print("n,ratio,limit,rel_gap")
    for exp in range(1, args.max_exp + 1):
        n = 2**exp
        ratio = variance_ratio(n)
        print(f"{n},{ratio:.10f},{limit:.10f},{abs(ratio - limit) / limit:.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
