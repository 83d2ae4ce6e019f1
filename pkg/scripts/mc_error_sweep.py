#!/usr/bin/env python3
"""Monte Carlo convergence check: sample-mean error vs trial count.

For a fixed instance size, doubles the trial count and reports the error of
the sample mean against the exact mean, normalized by the exact standard
error sqrt(Var/samples).  The normalized column should hover within a few
units of zero at every scale.  Emits CSV to stdout.
"""

import argparse
import math

from quickvar.moments import mean_comparisons, variance_closed
from quickvar.simulator import SimConfig, run_trials


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=30, help="instance size")
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--min-samples", type=int, default=500)
    parser.add_argument("--doublings", type=int, default=7)
    args = parser.parse_args()

    exact_mean = float(mean_comparisons(args.n))
    exact_var = float(variance_closed(args.n))
    print("samples,sample_mean,exact_mean,error,error_over_se")
    samples = args.min_samples
    for _ in range(args.doublings + 1):
        stats = run_trials(SimConfig(n=args.n, samples=samples, seed=args.seed))
        err = stats.sample_mean - exact_mean
        se = math.sqrt(exact_var / samples)
        print(f"{samples},{stats.sample_mean:.6f},{exact_mean:.6f},{err:+.6f},{err / se:+.3f}")
        samples *= 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
