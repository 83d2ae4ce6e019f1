"""Command-line front end: moments tables, exact distributions, identity
verification, and seeded simulation, with JSON/CSV output for scripts and CI.

Exit statuses: 0 success/pass, 1 check failure, 2 usage error, 3 capacity
guard.  Exact rationals are rendered as ``num/den`` strings; floats appear
only in float-named columns, rounded to 4 decimals in csv/human modes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import exact_dist, moments, simulator
from .errors import CapacityError
from .harmonic import IdentityId, closed_sum, direct_sum, format_rational, parse_rational

OUTPUT_FORMATS = ("json", "csv", "human")


def _f4(x: float) -> str:
    r = round(x, 4)
    if r == 0:
        r = 0.0  # normalize -0.0
    return str(r)


def moment_record(n: int, *, guard: int = moments.EXACT_GUARD) -> dict:
    """One moments-table record with exact strings and float companions."""
    rep = moments.report(n, guard=guard)
    return {
        "n": n,
        "mean": format_rational(rep.mean),
        "second_factorial": format_rational(rep.second_factorial),
        "variance": format_rational(rep.variance),
        "mean_float": float(rep.mean),
        "variance_float": float(rep.variance),
        "variance_ratio": moments.variance_ratio(n) if n >= 1 else 0.0,
    }


def record_to_report(record: dict) -> moments.MomentReport:
    """Rebuild the exact report from a JSON record (round-trip inverse)."""
    return moments.MomentReport(
        n=record["n"],
        mean=parse_rational(record["mean"]),
        second_factorial=parse_rational(record["second_factorial"]),
        variance=parse_rational(record["variance"]),
    )


def zreport_record(z: simulator.ZReport) -> dict:
    return {
        "n": z.n,
        "exact_mean": z.exact_mean,
        "exact_variance": z.exact_variance,
        "mean_z": z.mean_z,
        "variance_z": z.variance_z,
        "pass": z.passed,
    }


def record_to_zreport(record: dict) -> simulator.ZReport:
    return simulator.ZReport(
        n=record["n"],
        exact_mean=record["exact_mean"],
        exact_variance=record["exact_variance"],
        mean_z=record["mean_z"],
        variance_z=record["variance_z"],
        passed=record["pass"],
    )


def cmd_moments(n_min: int, n_max: int, fmt: str = "human", *, guard: int = moments.EXACT_GUARD) -> int:
    records = [moment_record(n, guard=guard) for n in range(n_min, n_max + 1)]
    if fmt == "json":
        print(json.dumps(records, indent=2))
    elif fmt == "csv":
        print("n,mean,variance,mean_float,variance_float,variance_ratio")
        for r in records:
            print(
                f"{r['n']},{r['mean']},{r['variance']},"
                f"{_f4(r['mean_float'])},{_f4(r['variance_float'])},{_f4(r['variance_ratio'])}"
            )
    else:
        print(f"{'n':>6} {'mean':>16} {'variance':>20} {'mean_float':>12} {'var_float':>12} {'ratio':>8}")
        for r in records:
            print(
                f"{r['n']:>6} {r['mean']:>16} {r['variance']:>20} "
                f"{_f4(r['mean_float']):>12} {_f4(r['variance_float']):>12} {_f4(r['variance_ratio']):>8}"
            )
    return 0


def cmd_dist(n: int, fmt: str = "human", *, guard: int = exact_dist.DIST_GUARD) -> int:
    dist = exact_dist.distribution(n, guard=guard)
    rep = exact_dist.moments_of(dist)
    if fmt == "json":
        payload = exact_dist.to_json_dict(dist)
        payload["mean"] = format_rational(rep.mean)
        payload["variance"] = format_rational(rep.variance)
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        for row in exact_dist.to_csv_rows(dist):
            print(row)
        print(f"# mean,{format_rational(rep.mean)}")
        print(f"# variance,{format_rational(rep.variance)}")
    else:
        print(f"comparison count distribution for n={n}")
        for k, p in dist.nonzero():
            print(f"  P(C={k}) = {format_rational(p)}")
        print(f"mean = {format_rational(rep.mean)}  variance = {format_rational(rep.variance)}")
    return 0


def cmd_verify(
    n_max: int,
    *,
    exact_guard: int = moments.EXACT_GUARD,
    dist_guard: int = exact_dist.DIST_GUARD,
    oracle_guard: int = exact_dist.ORACLE_GUARD,
) -> int:
    failures: list[str] = []

    def run_family(label: str, checks) -> None:
        total = passed = 0
        for name, ok in checks:
            total += 1
            if ok:
                passed += 1
            else:
                failures.append(f"{label}: {name}")
        print(f"{label}: {passed}/{total}")

    def identity_checks():
        for tag in IdentityId:
            for n in range(1, n_max + 1):
                c = closed_sum(tag, n, mean=moments.mean_comparisons)
                d = direct_sum(tag, n, mean=moments.mean_comparisons)
                yield f"({tag.value}, n={n})", c == d

    def b_checks():
        for n in range(0, min(n_max, exact_guard) + 1):
            ok = moments.b_recurrence(n, guard=exact_guard) == moments.b_closed(n, guard=exact_guard)
            ok = ok and moments.variance_from_b(n, guard=exact_guard) == moments.variance_closed(
                n, guard=exact_guard
            )
            yield f"(B, n={n})", ok

    def dist_checks():
        for n in range(1, min(n_max, 25) + 1):
            rep = exact_dist.moments_of(exact_dist.distribution(n, guard=dist_guard))
            ok = (
                rep.mean == moments.mean_comparisons(n, guard=exact_guard)
                and rep.second_factorial == 2 * moments.b_closed(n, guard=exact_guard)
                and rep.variance == moments.variance_closed(n, guard=exact_guard)
            )
            yield f"(distribution moments, n={n})", ok

    def oracle_checks():
        for n in range(1, min(n_max, 8) + 1):
            ok = exact_dist.distribution(n, guard=dist_guard) == exact_dist.permutation_oracle(
                n, guard=oracle_guard
            )
            yield f"(oracle, n={n})", ok

    run_family(f"identities I1-I11 closed vs direct (n <= {n_max})", identity_checks())
    run_family(f"B recurrence vs closed form (n <= {min(n_max, exact_guard)})", b_checks())
    run_family(f"distribution moments vs closed forms (n <= {min(n_max, 25)})", dist_checks())
    run_family(f"distribution vs permutation oracle (n <= {min(n_max, 8)})", oracle_checks())

    if failures:
        print(f"first failure: {failures[0]}", file=sys.stderr)
        print(f"VERIFY: FAIL ({len(failures)} mismatches)")
        return 1
    print("VERIFY: PASS")
    return 0


def cmd_simulate(n: int, samples: int, seed: int, fmt: str = "human") -> int:
    config = simulator.SimConfig(n=n, samples=samples, seed=seed)
    stats = simulator.run_trials(config)
    zrep = simulator.compare_to_exact(stats)
    histogram = [{"k": k, "count": c} for k, c in stats.histogram.items()]
    if fmt == "json":
        payload = {
            "config": {"n": n, "samples": samples, "seed": seed, "input_mode": config.input_mode},
            "sample_mean": stats.sample_mean,
            "sample_variance": stats.sample_variance,
            "report": zreport_record(zrep),
            "histogram": histogram,
        }
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        print(f"# n,{n}")
        print(f"# samples,{samples}")
        print(f"# seed,{seed}")
        print(f"# sample_mean,{_f4(stats.sample_mean)}")
        print(f"# sample_variance,{_f4(stats.sample_variance)}")
        print(f"# exact_mean,{_f4(zrep.exact_mean)}")
        print(f"# exact_variance,{_f4(zrep.exact_variance)}")
        print(f"# mean_z,{_f4(zrep.mean_z)}")
        print(f"# variance_z,{_f4(zrep.variance_z)}")
        print(f"# pass,{str(zrep.passed).lower()}")
        print("k,count")
        for entry in histogram:
            print(f"{entry['k']},{entry['count']}")
    else:
        print(f"simulation n={n} samples={samples} seed={seed}")
        print(f"sample mean     = {_f4(stats.sample_mean)}  (exact {_f4(zrep.exact_mean)})")
        print(f"sample variance = {_f4(stats.sample_variance)}  (exact {_f4(zrep.exact_variance)})")
        print(f"mean_z = {_f4(zrep.mean_z)}  variance_z = {_f4(zrep.variance_z)}")
        print(f"result: {'PASS' if zrep.passed else 'FAIL'}")
        print("histogram (k count):")
        for entry in histogram:
            print(f"  {entry['k']} {entry['count']}")
    return 0 if zrep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quickvar",
        description="Exact moments, distribution, identity checks, and simulation "
        "of the randomized-quicksort comparison count.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_moments = sub.add_parser("moments", help="exact mean/variance table over a range of n")
    p_moments.add_argument("--from", dest="n_min", type=int, required=True, metavar="N")
    p_moments.add_argument("--to", dest="n_max", type=int, required=True, metavar="N")
    p_moments.add_argument("--format", choices=OUTPUT_FORMATS, default="human")
    p_moments.add_argument("--exact-guard", type=int, default=moments.EXACT_GUARD)

    p_dist = sub.add_parser("dist", help="exact pmf of the comparison count for one n")
    p_dist.add_argument("--n", type=int, required=True)
    p_dist.add_argument("--format", choices=OUTPUT_FORMATS, default="human")
    p_dist.add_argument("--guard", type=int, default=exact_dist.DIST_GUARD)

    p_verify = sub.add_parser("verify", help="run the full exact verification suite")
    p_verify.add_argument("--n-max", type=int, required=True)
    p_verify.add_argument("--exact-guard", type=int, default=moments.EXACT_GUARD)
    p_verify.add_argument("--dist-guard", type=int, default=exact_dist.DIST_GUARD)
    p_verify.add_argument("--oracle-guard", type=int, default=exact_dist.ORACLE_GUARD)

    p_sim = sub.add_parser("simulate", help="seeded Monte Carlo run gated against exact moments")
    p_sim.add_argument("--n", type=int, required=True)
    p_sim.add_argument("--samples", type=int, required=True)
    p_sim.add_argument("--seed", type=int, required=True)
    p_sim.add_argument("--format", choices=OUTPUT_FORMATS, default="human")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "moments":
            if args.n_min < 0 or args.n_min > args.n_max:
                parser.error(f"need 0 <= from <= to, got {args.n_min}..{args.n_max}")
            return cmd_moments(args.n_min, args.n_max, args.format, guard=args.exact_guard)
        if args.command == "dist":
            if args.n < 0:
                parser.error(f"need n >= 0, got {args.n}")
            return cmd_dist(args.n, args.format, guard=args.guard)
        if args.command == "verify":
            if args.n_max < 1:
                parser.error(f"need n-max >= 1, got {args.n_max}")
            return cmd_verify(
                args.n_max,
                exact_guard=args.exact_guard,
                dist_guard=args.dist_guard,
                oracle_guard=args.oracle_guard,
            )
        if args.command == "simulate":
            try:
                return cmd_simulate(args.n, args.samples, args.seed, args.format)
            except ValueError as exc:
                parser.error(str(exc))
        raise AssertionError(f"unhandled command {args.command}")
    except CapacityError as exc:
        print(f"capacity guard: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
