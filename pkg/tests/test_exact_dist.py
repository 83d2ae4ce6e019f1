import json
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quickvar.errors import CapacityError
from quickvar.exact_dist import (
    ComparisonDistribution,
    distribution,
    from_json_dict,
    moments_of,
    permutation_oracle,
    pgf_eval,
    pgf_recurrence_check,
    to_csv_rows,
    to_json_dict,
)
from quickvar.moments import b_closed, mean_comparisons, variance_closed


def test_distribution_small_cases():
    assert distribution(0).probs == (Fraction(1),)
    assert distribution(1).nonzero() == [(0, Fraction(1))]
    assert distribution(3).nonzero() == [(2, Fraction(1, 3)), (3, Fraction(2, 3))]
    assert distribution(4).nonzero() == [
        (4, Fraction(1, 2)),
        (5, Fraction(1, 6)),
        (6, Fraction(1, 3)),
    ]


def test_moments_of_distribution():
    rep2 = moments_of(distribution(2))
    assert (rep2.mean, rep2.second_factorial, rep2.variance) == (1, 0, 0)
    rep3 = moments_of(distribution(3))
    assert rep3.mean == Fraction(8, 3)
    assert rep3.second_factorial == Fraction(14, 3)
    assert rep3.variance == Fraction(2, 9)
    assert moments_of(distribution(10)).variance == variance_closed(10)


@given(st.integers(min_value=0, max_value=16))
def test_distribution_moments_match_closed_forms(n):
    rep = moments_of(distribution(n))
    assert rep.mean == mean_comparisons(n)
    assert rep.second_factorial == 2 * b_closed(n)
    assert rep.variance == variance_closed(n)


def test_pgf_eval_examples():
    assert pgf_eval(distribution(5), Fraction(1)) == 1
    assert pgf_eval(distribution(2), Fraction(1, 2)) == Fraction(1, 2)
    assert pgf_eval(distribution(3), Fraction(1, 2)) == Fraction(1, 6)


def test_pgf_recurrence_check_examples():
    assert pgf_recurrence_check(3, Fraction(1)) == (1, 1)
    lhs, rhs = pgf_recurrence_check(4, Fraction(1, 2))
    assert lhs == rhs
    lhs, rhs = pgf_recurrence_check(6, Fraction(2, 3))
    assert lhs == rhs


def test_permutation_oracle_small_cases():
    assert permutation_oracle(1).nonzero() == [(0, Fraction(1))]
    assert permutation_oracle(3).nonzero() == [(2, Fraction(1, 3)), (3, Fraction(2, 3))]


def test_oracle_agrees_with_recurrence():
    for n in range(1, 7):
        assert permutation_oracle(n) == distribution(n)


def test_worst_case_mass():
    for n in range(1, 13):
        dist = distribution(n)
        assert dist.probs[-1] == Fraction(2 ** (n - 1), factorial(n))


def test_support_floor():
    for n in range(1, 13):
        dist = distribution(n)
        least = min(k for k, p in dist.nonzero())
        assert least >= n - 1
        assert all(p == 0 for p in dist.probs[: n - 1])


def test_distribution_validation_rejects_corruption():
    good = distribution(3)
    with pytest.raises(ValueError):
        ComparisonDistribution(n=3, probs=good.probs[:-1])  # wrong width
    with pytest.raises(ValueError):
        ComparisonDistribution(n=3, probs=(0, 0, Fraction(2, 3), Fraction(1, 3)))  # bad worst mass
    with pytest.raises(ValueError):
        ComparisonDistribution(n=3, probs=(Fraction(1, 3), 0, 0, Fraction(2, 3)))  # mass below floor
    with pytest.raises(ValueError):
        ComparisonDistribution(n=3, probs=(0, 0, Fraction(1, 3), Fraction(1, 3)))  # sum != 1
    with pytest.raises(ValueError):
        ComparisonDistribution(
            n=3, probs=(0, Fraction(-1, 3), Fraction(2, 3), Fraction(2, 3))
        )  # negative entry


def test_json_round_trip():
    for n in (0, 1, 4, 7):
        dist = distribution(n)
        payload = json.loads(json.dumps(to_json_dict(dist)))
        assert from_json_dict(payload) == dist


def test_csv_rows():
    assert to_csv_rows(distribution(3)) == ["k,p_num,p_den", "2,1,3", "3,2,3"]


def test_guards():
    with pytest.raises(CapacityError):
        distribution(65)
    with pytest.raises(CapacityError):
        permutation_oracle(10)
    with pytest.raises(ValueError):
        distribution(-1)
    with pytest.raises(ValueError):
        permutation_oracle(0)
    # guards are per-call overridable
    assert permutation_oracle(5, guard=5).n == 5
    with pytest.raises(CapacityError):
        distribution(5, guard=4)
