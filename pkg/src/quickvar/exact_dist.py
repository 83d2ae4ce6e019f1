"""Exact probability mass function of the quicksort comparison count.

The pmf of C(n) is built bottom-up through the generating-function
self-convolution

    f(n, z) = z^(n-1)/n * sum_{j=1..n} f(j-1, z) * f(n-j, z),
    f(0) = f(1) = 1,

realized as exact polynomial coefficient arithmetic: one convolution per
split point j, coefficients summed in ascending j, the z^(n-1) shift applied
once at the end.  Coefficient k of f(n) is P(C(n) = k).

``permutation_oracle`` recomputes the same law without generating functions:
deterministic first-element-pivot quicksort with order-preserving partition
is run over every permutation of {1..n} and the counts are tallied.  By
exchangeability of the sub-permutations this equals the random-pivot law, so
exact equality of the two routes is a strong end-to-end check.
"""

from __future__ import annotations

import itertools
import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import CapacityError
from .harmonic import format_rational, parse_rational
from .moments import MomentReport

DIST_GUARD = 64
ORACLE_GUARD = 9


@dataclass(frozen=True)
class ComparisonDistribution:
    """Dense exact pmf of C(n): probs[k] = P(C(n) = k) for k = 0..n(n-1)/2."""

    n: int
    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "probs", tuple(self.probs))
        n = self.n
        width = n * (n - 1) // 2 + 1
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        if len(self.probs) != width:
            raise ValueError(f"n={n}: expected {width} coefficients, got {len(self.probs)}")
        if any(p < 0 for p in self.probs):
            raise ValueError(f"n={n}: negative probability")
        if sum(self.probs) != 1:
            raise ValueError(f"n={n}: probabilities do not sum to 1")
        if n >= 1:
            if self.probs[-1] != Fraction(2 ** (n - 1), factorial(n)):
                raise ValueError(f"n={n}: worst-case mass is not 2^(n-1)/n!")
            if any(self.probs[k] != 0 for k in range(min(n - 1, width))):
                raise ValueError(f"n={n}: nonzero mass below the n-1 comparison floor")

    def nonzero(self) -> list[tuple[int, Fraction]]:
        """(k, P(C(n)=k)) pairs with positive mass, ascending in k."""
        return [(k, p) for k, p in enumerate(self.probs) if p != 0]


_levels_lock = threading.Lock()
_levels: list[list[Fraction]] = [[Fraction(1)], [Fraction(1)]]  # f(0), f(1)


def _build_levels(n: int) -> None:
    with _levels_lock:
        while len(_levels) <= n:
            m = len(_levels)
            acc = [Fraction(0)] * ((m - 1) * (m - 2) // 2 + 1)
            for j in range(1, m + 1):
                a = _levels[j - 1]
                b = _levels[m - j]
                for ia, ca in enumerate(a):
                    if ca:
                        for ib, cb in enumerate(b):
                            if cb:
                                acc[ia + ib] += ca * cb
            inv_m = Fraction(1, m)
            # single shift by z^(m-1) after summing the convolutions
            _levels.append([Fraction(0)] * (m - 1) + [c * inv_m for c in acc])


def distribution(n: int, *, guard: int = DIST_GUARD) -> ComparisonDistribution:
    """Exact pmf of C(n) via the generating-function recurrence."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > guard:
        raise CapacityError("exact distribution", n, guard)
    if len(_levels) <= n:
        _build_levels(n)
    return ComparisonDistribution(n=n, probs=tuple(_levels[n]))


def moments_of(dist: ComparisonDistribution) -> MomentReport:
    """Exact mean, second factorial moment, and variance of the pmf."""
    mean = sum((k * p for k, p in enumerate(dist.probs)), Fraction(0))
    second = sum((k * (k - 1) * p for k, p in enumerate(dist.probs)), Fraction(0))
    return MomentReport(
        n=dist.n,
        mean=mean,
        second_factorial=second,
        variance=second + mean - mean * mean,
    )


def pgf_eval(dist: ComparisonDistribution, z: Fraction | int) -> Fraction:
    """sum_k probs[k] * z^k, exactly, by Horner evaluation."""
    acc = Fraction(0)
    for c in reversed(dist.probs):
        acc = acc * z + c
    return acc


def pgf_recurrence_check(n: int, z: Fraction | int, *, guard: int = DIST_GUARD) -> tuple[Fraction, Fraction]:
    """Both sides of the generating-function recurrence at z, evaluated
    independently: lhs from the coefficients of f(n), rhs from the
    convolution sum over lower orders.  Callers assert lhs == rhs."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lhs = pgf_eval(distribution(n, guard=guard), z)
    z = Fraction(z)
    total = sum(
        (
            pgf_eval(distribution(j - 1, guard=guard), z) * pgf_eval(distribution(n - j, guard=guard), z)
            for j in range(1, n + 1)
        ),
        Fraction(0),
    )
    rhs = z ** (n - 1) / n * total
    return lhs, rhs


def _count_fixed_pivot(seq: list) -> int:
    # first element as pivot, order-preserving two-way split
    if len(seq) <= 1:
        return 0
    pivot = seq[0]
    less = [x for x in seq[1:] if x < pivot]
    greater = [x for x in seq[1:] if x > pivot]
    return len(seq) - 1 + _count_fixed_pivot(less) + _count_fixed_pivot(greater)


def permutation_oracle(n: int, *, guard: int = ORACLE_GUARD) -> ComparisonDistribution:
    """Empirical exact pmf from all n! permutations under first-element-pivot
    quicksort; equals :func:`distribution` by exchangeability."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > guard:
        raise CapacityError("permutation oracle", n, guard)
    counts = Counter(_count_fixed_pivot(list(p)) for p in itertools.permutations(range(1, n + 1)))
    total = factorial(n)
    probs = [Fraction(0)] * (n * (n - 1) // 2 + 1)
    for k, c in counts.items():
        probs[k] = Fraction(c, total)
    return ComparisonDistribution(n=n, probs=tuple(probs))


def to_json_dict(dist: ComparisonDistribution) -> dict:
    """JSON-ready form: nonzero entries ascending in k, rationals as strings."""
    return {
        "n": dist.n,
        "probabilities": [{"k": k, "p": format_rational(p)} for k, p in dist.nonzero()],
    }


def from_json_dict(data: dict) -> ComparisonDistribution:
    """Inverse of :func:`to_json_dict`; revalidates all invariants."""
    n = data["n"]
    probs = [Fraction(0)] * (n * (n - 1) // 2 + 1)
    for entry in data["probabilities"]:
        probs[entry["k"]] = parse_rational(entry["p"])
    return ComparisonDistribution(n=n, probs=tuple(probs))


def to_csv_rows(dist: ComparisonDistribution) -> list[str]:
    """CSV lines with header ``k,p_num,p_den``, nonzero entries ascending."""
    rows = ["k,p_num,p_den"]
    rows.extend(f"{k},{p.numerator},{p.denominator}" for k, p in dist.nonzero())
    return rows
