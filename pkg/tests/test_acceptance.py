"""Acceptance suite: one test per criterion, at the stated exact tolerance.

Run with ``pytest tests/test_acceptance.py -v`` for one pass/fail line per
criterion (the prints below repeat the verdicts under ``-s``).
"""

import math
from fractions import Fraction
from math import factorial

from quickvar.cli import main
from quickvar.exact_dist import distribution, moments_of, permutation_oracle, pgf_recurrence_check
from quickvar.harmonic import IdentityId, closed_sum, direct_sum
from quickvar.moments import (
    ASYMPTOTIC_VARIANCE_RATIO,
    b_closed,
    b_recurrence,
    mean_comparisons,
    variance_closed,
    variance_from_b,
    variance_ratio,
)
from quickvar.simulator import SimConfig, compare_to_exact, run_trials


def test_criterion_01_closed_form_consistency():
    for n in range(0, 201):
        assert b_recurrence(n) == b_closed(n), f"B routes disagree at n={n}"
        assert variance_from_b(n) == variance_closed(n), f"variance routes disagree at n={n}"
    print("ACCEPTANCE 1 closed-form consistency (n <= 200): PASS")


def test_criterion_02_distribution_vs_formula():
    for n in range(1, 26):
        rep = moments_of(distribution(n))
        assert rep.mean == mean_comparisons(n), f"mean mismatch at n={n}"
        assert rep.second_factorial == 2 * b_closed(n), f"second factorial mismatch at n={n}"
        assert rep.variance == variance_closed(n), f"variance mismatch at n={n}"
    print("ACCEPTANCE 2 distribution vs formula (n <= 25): PASS")


def test_criterion_03_oracle_equivalence():
    for n in range(1, 9):
        assert distribution(n) == permutation_oracle(n), f"oracle mismatch at n={n}"
    print("ACCEPTANCE 3 oracle equivalence (n <= 8): PASS")


def test_criterion_04_identity_suite():
    for tag in IdentityId:
        for n in range(1, 501):
            c = closed_sum(tag, n, mean=mean_comparisons)
            d = direct_sum(tag, n, mean=mean_comparisons)
            assert c == d, f"identity {tag.value} fails at n={n}: closed={c} direct={d}"
    print("ACCEPTANCE 4 identity suite I1-I11 (n <= 500): PASS")


def test_criterion_05_spot_values():
    assert variance_closed(1) == 0
    assert variance_closed(2) == 0
    assert variance_closed(3) == Fraction(2, 9)
    assert mean_comparisons(3) == Fraction(8, 3)
    assert b_closed(3) == Fraction(7, 3)
    assert distribution(4).nonzero() == [
        (4, Fraction(1, 2)),
        (5, Fraction(1, 6)),
        (6, Fraction(1, 3)),
    ]
    # the derived spot values against the exhaustive enumeration oracle
    assert permutation_oracle(4) == distribution(4)
    oracle3 = moments_of(permutation_oracle(3))
    assert oracle3.mean == Fraction(8, 3)
    assert oracle3.variance == Fraction(2, 9)
    assert oracle3.second_factorial == 2 * Fraction(7, 3)
    print("ACCEPTANCE 5 spot values: PASS")


def test_criterion_06_worst_case_mass():
    for n in range(1, 13):
        expected = Fraction(2 ** (n - 1), factorial(n))
        assert distribution(n).probs[-1] == expected, f"worst-case mass wrong at n={n}"
    print("ACCEPTANCE 6 worst-case mass (n <= 12): PASS")


def test_criterion_07_asymptotic_constant():
    ratio = variance_ratio(10**4)
    rel = abs(ratio - ASYMPTOTIC_VARIANCE_RATIO) / ASYMPTOTIC_VARIANCE_RATIO
    assert rel <= 0.02, f"ratio {ratio} off limit by {rel:.4f}"
    print(f"ACCEPTANCE 7 asymptotic constant (rel gap {rel:.4f} <= 0.02): PASS")


def test_criterion_08_monte_carlo_gate():
    stats = run_trials(SimConfig(n=100, samples=100_000, seed=1))
    exact_mean = float(mean_comparisons(100))
    exact_variance = float(variance_closed(100))
    z = compare_to_exact(stats)
    assert abs(stats.sample_mean - exact_mean) <= 4 * math.sqrt(exact_variance / 100_000)
    assert abs(z.variance_z) <= 6
    assert z.passed
    print(f"ACCEPTANCE 8 Monte Carlo gate (mean_z={z.mean_z:.3f}, variance_z={z.variance_z:.3f}): PASS")


def test_criterion_09_pgf_recurrence():
    for n in range(1, 13):
        for z in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)):
            lhs, rhs = pgf_recurrence_check(n, z)
            assert lhs == rhs, f"recurrence mismatch at n={n}, z={z}"
    print("ACCEPTANCE 9 generating-function recurrence (n <= 12): PASS")


def test_criterion_10_simulate_determinism(capsys):
    argv = ["simulate", "--n", "50", "--samples", "10000", "--seed", "9"]
    code_first = main(list(argv))
    first = capsys.readouterr()
    code_second = main(list(argv))
    second = capsys.readouterr()
    assert code_first == code_second == 0
    assert first.out == second.out
    assert first.err == second.err
    print("ACCEPTANCE 10 simulate determinism: PASS")
