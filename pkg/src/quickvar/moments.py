"""Closed-form and recurrence routes to the comparison-count moments.

For randomized quicksort on n distinct keys, with C(n) the random number of
pairwise comparisons, the exact quantities computed here are

    M(n)   = 2*(n+1)*H(n) - 4n                       (mean)
    B(n)   = E[C(C-1)]/2
           = 2*(n+1)^2*(H(n)^2 - H(n,2))
             - (8n+2)*(n+1)*H(n) + n*(23n+17)/2      (closed form)
    Var(n) = 7n^2 - 4*(n+1)^2*H(n,2) - 2*(n+1)*H(n) + 13n

``b_recurrence`` re-derives B(n) bottom-up from the pivot-split recurrence

    B(n) = binom(n-1,2) + 2(n-1)/n * sum_{j=1..n} M(j-1)
         + 2/n * sum_{j=1..n} B(j-1) + 1/n * sum_{j=1..n} M(j-1)*M(n-j)

with the cross term as the literal double product, so recurrence-vs-closed
equality exercises the whole derivation end to end.  ``Var = 2B + M - M^2``
links B to the variance through the generating function.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import CapacityError
from .harmonic import DEFAULT_MAX_N, IdentityId, closed_sum, default_table, harmonic_float

EXACT_GUARD = 10_000

# 7 - 2*pi^2/3, the limit of Var(C(n))/n^2 as H(n,2) -> pi^2/6.
ASYMPTOTIC_VARIANCE_RATIO = 0.4202637326070944


@dataclass(frozen=True)
class MomentReport:
    """Exact mean, second factorial moment, and variance for one size n."""

    n: int
    mean: Fraction
    second_factorial: Fraction
    variance: Fraction

    def __post_init__(self) -> None:
        if self.variance != self.second_factorial + self.mean - self.mean * self.mean:
            raise ValueError(f"n={self.n}: variance does not match f''(1) + f'(1) - f'(1)^2")
        if self.variance < 0:
            raise ValueError(f"n={self.n}: negative variance")
        if (self.variance == 0) != (self.n <= 2):
            raise ValueError(f"n={self.n}: variance must vanish exactly for n <= 2")
        if self.n >= 1 and self.mean < self.n - 1:
            raise ValueError(f"n={self.n}: mean below the comparison lower bound n-1")


def _check(n: int, guard: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > guard:
        raise CapacityError("exact moments", n, guard)
    if guard > DEFAULT_MAX_N:
        default_table().grow_bound(guard)


def _h(n: int) -> Fraction:
    return default_table().value(n, 1)


def _h2(n: int) -> Fraction:
    return default_table().value(n, 2)


def mean_comparisons(n: int, *, guard: int = EXACT_GUARD) -> Fraction:
    """Exact mean M(n) = 2*(n+1)*H(n) - 4n; zero for n <= 1."""
    _check(n, guard)
    return 2 * (n + 1) * _h(n) - 4 * n


def b_closed(n: int, *, guard: int = EXACT_GUARD) -> Fraction:
    """Exact B(n) = E[C(C-1)]/2 from the closed form."""
    _check(n, guard)
    h = _h(n)
    return 2 * (n + 1) ** 2 * (h * h - _h2(n)) - (8 * n + 2) * (n + 1) * h + Fraction(n * (23 * n + 17), 2)


class _RecurrenceSolver:
    """Bottom-up memoized solver for the B(n) pivot-split recurrence."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._b: list[Fraction] = [Fraction(0)]
        self._m: list[Fraction] = [Fraction(0)]
        self._b_sum = Fraction(0)  # sum of all cached B values
        self._m_sum = Fraction(0)  # sum of all cached M values

    def value(self, n: int) -> Fraction:
        if len(self._b) <= n:
            self._extend(n)
        return self._b[n]

    def _extend(self, n: int) -> None:
        with self._lock:
            while len(self._b) <= n:
                m = len(self._b)
                while len(self._m) < m:
                    i = len(self._m)
                    self._m.append(mean_comparisons(i))
                    self._m_sum += self._m[i]
                # cross term stays the literal double product on purpose
                mv = self._m
                cross = sum((mv[i] * mv[m - 1 - i] for i in range(m)), Fraction(0))
                b = (
                    comb(m - 1, 2)
                    + Fraction(2 * (m - 1), m) * self._m_sum
                    + Fraction(2, m) * self._b_sum
                    + Fraction(1, m) * cross
                )
                self._b.append(b)
                self._b_sum += b


_SOLVER = _RecurrenceSolver()


def b_recurrence(n: int, *, guard: int = EXACT_GUARD) -> Fraction:
    """B(n) by bottom-up iteration of the pivot-split recurrence."""
    _check(n, guard)
    return _SOLVER.value(n)


def m_cross_sum(n: int, *, guard: int = EXACT_GUARD) -> Fraction:
    """sum_{j=1..n} M(j-1)*M(n-j), evaluated through its harmonic closed form."""
    _check(n, guard)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return closed_sum(IdentityId.I11, n)


def variance_closed(n: int, *, guard: int = EXACT_GUARD) -> Fraction:
    """Exact Var(C(n)) = 7n^2 - 4*(n+1)^2*H(n,2) - 2*(n+1)*H(n) + 13n."""
    _check(n, guard)
    return 7 * n * n - 4 * (n + 1) ** 2 * _h2(n) - 2 * (n + 1) * _h(n) + 13 * n


def variance_from_b(n: int, *, guard: int = EXACT_GUARD) -> Fraction:
    """Var(C(n)) assembled as 2*B(n) + M(n) - M(n)^2 with B from the recurrence."""
    _check(n, guard)
    m = mean_comparisons(n, guard=guard)
    return 2 * b_recurrence(n, guard=guard) + m - m * m


def variance_ratio(n: int) -> float:
    """Var(C(n))/n^2 in floating point; approaches 7 - 2*pi^2/3."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    h1 = harmonic_float(n, 1)
    h2 = harmonic_float(n, 2)
    var = 7.0 * n * n - 4.0 * (n + 1) * (n + 1) * h2 - 2.0 * (n + 1) * h1 + 13.0 * n
    return var / (n * n)


def report(n: int, *, guard: int = EXACT_GUARD) -> MomentReport:
    """Assemble the closed-form moments for n into a validated report."""
    return MomentReport(
        n=n,
        mean=mean_comparisons(n, guard=guard),
        second_factorial=2 * b_closed(n, guard=guard),
        variance=variance_closed(n, guard=guard),
    )
