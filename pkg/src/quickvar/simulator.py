"""Seeded randomized-quicksort trials and comparison against exact moments.

Randomness comes from SplitMix64 (the published 64-bit avalanche
mixer/generator, https://prng.di.unimi.it/splitmix64.c).  Trial t of a run
gets its own child generator seeded with ``mix64(seed + t*GOLDEN)``, so
results are independent of trial scheduling and bit-for-bit reproducible
from the config alone.  Pivot indices are drawn by rejection sampling to
keep the uniformity claim literal rather than modulo-approximate.

The sort itself is the comparison-counting model: a uniformly random pivot,
an order-preserving two-way split, and count = sum over recursion nodes of
(node size - 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .moments import mean_comparisons, variance_closed

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

INPUT_MODES = ("identity", "random_permutation")


def mix64(x: int) -> int:
    """SplitMix64 finalizer: full-avalanche 64-bit mix."""
    x &= _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


class SplitMix64:
    """Deterministic 64-bit random source."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return mix64(self._state)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased via rejection sampling."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        threshold = (1 << 64) - (1 << 64) % bound
        while True:
            u = self.next_u64()
            if u < threshold:
                return u % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def _child_source(seed: int, trial: int) -> SplitMix64:
    return SplitMix64(mix64((seed + trial * _GOLDEN) & _MASK64))


@dataclass(frozen=True)
class SimConfig:
    """One reproducible Monte Carlo run: size, trial count, seed, input mode."""

    n: int
    samples: int
    seed: int
    input_mode: str = "identity"

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.input_mode not in INPUT_MODES:
            raise ValueError(f"input_mode must be one of {INPUT_MODES}, got {self.input_mode!r}")


@dataclass(frozen=True)
class SampleStats:
    """Aggregated trial results; histogram maps comparison count to occurrences."""

    config: SimConfig
    sample_mean: float
    sample_variance: float
    histogram: dict[int, int]
    min_k: int
    max_k: int


@dataclass(frozen=True)
class ZReport:
    """Sample-vs-exact gate: |mean_z| <= 4 and |variance_z| <= 6 to pass."""

    n: int
    exact_mean: float
    exact_variance: float
    mean_z: float
    variance_z: float
    passed: bool

    def __post_init__(self) -> None:
        if self.passed != (abs(self.mean_z) <= 4.0 and abs(self.variance_z) <= 6.0):
            raise ValueError("pass flag inconsistent with the z gates")


def _sorted_count(items: list, rng: SplitMix64) -> tuple[list, int]:
    if len(items) <= 1:
        return list(items), 0
    p = rng.below(len(items))
    pivot = items[p]
    rest = items[:p] + items[p + 1 :]
    less = []
    greater = []
    for x in rest:
        if x < pivot:
            less.append(x)
        else:
            greater.append(x)
    sorted_less, c_less = _sorted_count(less, rng)
    sorted_greater, c_greater = _sorted_count(greater, rng)
    return sorted_less + [pivot] + sorted_greater, len(items) - 1 + c_less + c_greater


def quicksort_count(items, rng: SplitMix64) -> tuple[list, int]:
    """Sort distinct keys with uniformly random pivots; return (sorted, count).

    Count follows the recursive decomposition: each node with s > 1 elements
    contributes s - 1 comparisons against its pivot.  Duplicate keys are
    rejected; the model assumes a total order on distinct objects.
    """
    items = list(items)
    if len(set(items)) != len(items):
        raise ValueError("duplicate keys are not supported")
    return _sorted_count(items, rng)


def run_trials(config: SimConfig) -> SampleStats:
    """Run ``config.samples`` independent seeded trials and aggregate.

    Mean and unbiased variance are computed from exact integer sums over the
    final histogram, so the aggregation is order-independent.
    """
    histogram: dict[int, int] = {}
    for t in range(config.samples):
        rng = _child_source(config.seed, t)
        items = list(range(1, config.n + 1))
        if config.input_mode == "random_permutation":
            rng.shuffle(items)
        _, count = _sorted_count(items, rng)
        histogram[count] = histogram.get(count, 0) + 1

    histogram = dict(sorted(histogram.items()))
    s = config.samples
    total = sum(k * c for k, c in histogram.items())
    total_sq = sum(k * k * c for k, c in histogram.items())
    mean = total / s
    if s > 1:
        variance = (s * total_sq - total * total) / (s * (s - 1))
    else:
        variance = 0.0  # single trial: unbiased variance undefined, report 0
    return SampleStats(
        config=config,
        sample_mean=mean,
        sample_variance=variance,
        histogram=histogram,
        min_k=min(histogram),
        max_k=max(histogram),
    )


def _fourth_central_moment(stats: SampleStats) -> float:
    mean = stats.sample_mean
    s = stats.config.samples
    return sum(c * (k - mean) ** 4 for k, c in stats.histogram.items()) / s


def compare_to_exact(stats: SampleStats) -> ZReport:
    """Z-scores of the sample mean and variance against the exact formulas.

    mean_z uses sqrt(Var/samples); variance_z uses the asymptotic standard
    error of the unbiased sample variance estimated from the sample's fourth
    central moment.  Degenerate sizes (exact variance 0, i.e. n <= 2) report
    both z-scores as 0 by convention.
    """
    n = stats.config.n
    s = stats.config.samples
    exact_mean = float(mean_comparisons(n))
    exact_variance = float(variance_closed(n))
    if exact_variance == 0.0:
        mean_z = 0.0 if stats.sample_mean == exact_mean else math.inf
        variance_z = 0.0
    else:
        mean_z = (stats.sample_mean - exact_mean) / math.sqrt(exact_variance / s)
        sv = stats.sample_variance
        m4 = _fourth_central_moment(stats)
        inner = (m4 - sv * sv * (s - 3) / (s - 1)) / s if s > 1 else 0.0
        se_var = math.sqrt(inner) if inner > 0 else 0.0
        if se_var == 0.0:
            variance_z = 0.0 if sv == exact_variance else math.inf
        else:
            variance_z = (sv - exact_variance) / se_var
    passed = abs(mean_z) <= 4.0 and abs(variance_z) <= 6.0
    return ZReport(
        n=n,
        exact_mean=exact_mean,
        exact_variance=exact_variance,
        mean_z=mean_z,
        variance_z=variance_z,
        passed=passed,
    )
