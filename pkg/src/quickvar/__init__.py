"""Exact analysis and seeded simulation of randomized-quicksort comparisons.

The analytic core works in exact rational arithmetic: closed forms and
recurrences for the mean and variance of the comparison count, the exact
probability mass function via generating-function convolution, a registry of
the harmonic-sum identities behind the closed forms, and a reproducible
Monte Carlo simulator gated against the exact values.
"""

from .errors import CapacityError
from .exact_dist import (
    ComparisonDistribution,
    distribution,
    moments_of,
    permutation_oracle,
    pgf_eval,
    pgf_recurrence_check,
)
from .harmonic import (
    HarmonicTable,
    IdentityId,
    Rational,
    closed_sum,
    direct_sum,
    format_rational,
    harmonic,
    harmonic_float,
    harmonic_order,
    parse_rational,
)
from .moments import (
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
from .simulator import (
    SampleStats,
    SimConfig,
    SplitMix64,
    ZReport,
    compare_to_exact,
    quicksort_count,
    run_trials,
)

__version__ = "0.1.0"

__all__ = [
    "ASYMPTOTIC_VARIANCE_RATIO",
    "CapacityError",
    "ComparisonDistribution",
    "HarmonicTable",
    "IdentityId",
    "MomentReport",
    "Rational",
    "SampleStats",
    "SimConfig",
    "SplitMix64",
    "ZReport",
    "b_closed",
    "b_recurrence",
    "closed_sum",
    "compare_to_exact",
    "direct_sum",
    "distribution",
    "format_rational",
    "harmonic",
    "harmonic_float",
    "harmonic_order",
    "m_cross_sum",
    "mean_comparisons",
    "moments_of",
    "parse_rational",
    "permutation_oracle",
    "pgf_eval",
    "pgf_recurrence_check",
    "quicksort_count",
    "report",
    "run_trials",
    "variance_closed",
    "variance_from_b",
    "variance_ratio",
]
