import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quickvar.errors import CapacityError
from quickvar.exact_dist import permutation_oracle
from quickvar.harmonic import IdentityId, closed_sum
from quickvar.moments import (
    ASYMPTOTIC_VARIANCE_RATIO,
    MomentReport,
    b_closed,
    b_recurrence,
    m_cross_sum,
    mean_comparisons,
    report,
    variance_closed,
    variance_from_b,
    variance_ratio,
)


def test_mean_values():
    assert mean_comparisons(0) == 0
    assert mean_comparisons(1) == 0
    assert mean_comparisons(2) == 1
    assert mean_comparisons(3) == Fraction(8, 3)


def test_b_closed_values():
    assert b_closed(0) == 0
    assert b_closed(1) == 0
    assert b_closed(2) == 0
    assert b_closed(3) == Fraction(7, 3)


def test_b_recurrence_values():
    assert b_recurrence(0) == 0
    assert b_recurrence(3) == Fraction(7, 3)
    assert b_recurrence(10) == b_closed(10)


def test_b_closed_matches_enumeration():
    # independent oracle: E[C(C-1)]/2 from the exhaustive permutation pmf
    for n in range(1, 7):
        dist = permutation_oracle(n)
        second = sum(k * (k - 1) * p for k, p in dist.nonzero())
        assert 2 * b_closed(n) == second


def test_m_cross_sum_values():
    assert m_cross_sum(3) == 0
    assert m_cross_sum(4) == 0
    assert m_cross_sum(5) == 1


def test_m_cross_sum_matches_literal_products():
    means = [mean_comparisons(i) for i in range(201)]
    for n in range(1, 201):
        literal = sum(means[j - 1] * means[n - j] for j in range(1, n + 1))
        assert m_cross_sum(n) == literal


def test_variance_values():
    assert variance_closed(1) == 0
    assert variance_closed(2) == 0
    assert variance_closed(3) == Fraction(2, 9)
    assert variance_from_b(2) == 0
    assert variance_from_b(3) == Fraction(2, 9)
    assert variance_from_b(12) == variance_closed(12)


@given(st.integers(min_value=0, max_value=150))
def test_recurrence_and_closed_routes_agree(n):
    assert b_recurrence(n) == b_closed(n)
    assert variance_from_b(n) == variance_closed(n)


def test_variance_positive_beyond_two():
    for n in range(3, 201):
        assert variance_closed(n) > 0


def test_mean_prefix_sum_matches_closed_form():
    running = Fraction(0)
    for n in range(1, 501):
        running += mean_comparisons(n - 1)
        assert running == closed_sum(IdentityId.I2, n)


def test_mean_satisfies_pivot_split_recurrence():
    # M(n) = (n-1) + 2/n * sum_{j=1..n} M(j-1)
    running = Fraction(0)
    for n in range(1, 501):
        running += mean_comparisons(n - 1)
        assert mean_comparisons(n) == (n - 1) + Fraction(2, n) * running


def test_variance_ratio_values():
    assert variance_ratio(1) == 0.0
    exact = float(variance_closed(100)) / 100**2
    assert abs(variance_ratio(100) - exact) <= 1e-9 * exact
    limit = ASYMPTOTIC_VARIANCE_RATIO
    assert abs(variance_ratio(10**4) - limit) / limit <= 0.02


def test_asymptotic_constant_matches_its_definition():
    assert ASYMPTOTIC_VARIANCE_RATIO == pytest.approx(7 - 2 * math.pi**2 / 3, rel=1e-15)


def test_report_values():
    rep2 = report(2)
    assert (rep2.mean, rep2.second_factorial, rep2.variance) == (1, 0, 0)
    rep3 = report(3)
    assert rep3.mean == Fraction(8, 3)
    assert rep3.second_factorial == Fraction(14, 3)
    assert rep3.variance == Fraction(2, 9)
    rep4 = report(4)
    assert rep4.mean == Fraction(29, 6)
    assert rep4.second_factorial == 2 * b_closed(4)
    assert rep4.variance == 2 * b_closed(4) + rep4.mean - rep4.mean**2


def test_report_matches_enumeration_at_four():
    # pmf of C(4) is {4: 1/2, 5: 1/6, 6: 1/3}
    dist = permutation_oracle(4)
    assert dist.nonzero() == [
        (4, Fraction(1, 2)),
        (5, Fraction(1, 6)),
        (6, Fraction(1, 3)),
    ]
    rep = report(4)
    assert rep.mean == sum(k * p for k, p in dist.nonzero())
    assert rep.variance == Fraction(29, 36)


def test_report_rejects_inconsistent_fields():
    with pytest.raises(ValueError):
        MomentReport(n=3, mean=Fraction(8, 3), second_factorial=Fraction(14, 3), variance=Fraction(1, 9))
    with pytest.raises(ValueError):
        MomentReport(n=3, mean=Fraction(8, 3), second_factorial=Fraction(14, 3), variance=Fraction(0))
    with pytest.raises(ValueError):
        MomentReport(n=5, mean=Fraction(1), second_factorial=Fraction(0), variance=Fraction(1))


def test_exact_guard():
    with pytest.raises(CapacityError):
        mean_comparisons(10_001)
    with pytest.raises(CapacityError):
        variance_closed(10_001)
    with pytest.raises(ValueError):
        b_closed(-1)
    with pytest.raises(ValueError):
        variance_ratio(0)
