"""Exact harmonic numbers and the harmonic-sum identity registry.

Everything exact is carried by ``fractions.Fraction`` (aliased ``Rational``
below).  ``H(n, k)`` denotes the generalized harmonic number
``sum(1/j**k for j in 1..n)`` with the convention ``H(0, k) = 0``.

The identity registry pairs, for each tag I1..I11, a closed-form evaluator
with a literal term-by-term evaluator of the same sum.  The two routes share
nothing but the memoized harmonic values, so exact agreement of
``closed_sum`` and ``direct_sum`` over a range of n is the verification
contract used by the test suite and the ``verify`` CLI command.

Two identities (I2, I11) sum products of mean comparison counts M(j); the
mean evaluator is injected as a callable so this module stays independent of
the moments module.
"""

from __future__ import annotations

import enum
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .errors import CapacityError

Rational = Fraction

MeanFn = Callable[[int], Fraction]

DEFAULT_MAX_N = 10_000

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def format_rational(q: Fraction) -> str:
    """Render a rational as ``num/den``, or plain ``num`` when integral."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or ``"num"`` (``"11/6"``, ``"-3"``, ``"4/1"``)."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(s)


class HarmonicTable:
    """Memoized exact harmonic numbers H(n, k), one column per order k.

    Entries are written once and never rewritten; concurrent warm-up is
    idempotent because every writer computes the identical value.  ``max_n``
    bounds the index so runaway exact computations fail fast.
    """

    def __init__(self, max_n: int = DEFAULT_MAX_N) -> None:
        self.max_n = max_n
        self._lock = threading.Lock()
        self._columns: dict[int, list[Fraction]] = {}

    def value(self, n: int, k: int = 1) -> Fraction:
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        if k < 1:
            raise ValueError(f"harmonic order must be >= 1, got {k}")
        if n > self.max_n:
            raise CapacityError("harmonic table", n, self.max_n)
        column = self._columns.get(k)
        if column is None or len(column) <= n:
            self._extend(k, n)
            column = self._columns[k]
        return column[n]

    def grow_bound(self, max_n: int) -> None:
        """Raise the index bound (monotone; existing entries untouched)."""
        with self._lock:
            if max_n > self.max_n:
                self.max_n = max_n

    def _extend(self, k: int, n: int) -> None:
        with self._lock:
            column = self._columns.setdefault(k, [Fraction(0)])
            for j in range(len(column), n + 1):
                column.append(column[j - 1] + Fraction(1, j**k))


_TABLE = HarmonicTable()


def default_table() -> HarmonicTable:
    """The process-wide memo table behind :func:`harmonic`."""
    return _TABLE


def harmonic(n: int) -> Fraction:
    """Exact H(n) = 1 + 1/2 + ... + 1/n; harmonic(0) == 0."""
    return _TABLE.value(n, 1)


def harmonic_order(n: int, k: int) -> Fraction:
    """Exact H(n, k) = sum(1/j**k for j in 1..n); k == 0 is rejected."""
    return _TABLE.value(n, k)


def harmonic_float(n: int, k: int = 1) -> float:
    """H(n, k) by direct float summation in ascending-j order.

    Ascending order is part of the contract (reproducible bit-for-bit);
    relative error stays below 1e-10 out to n = 1e7.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 1:
        raise ValueError(f"harmonic order must be >= 1, got {k}")
    total = 0.0
    for j in range(1, n + 1):
        total += 1.0 / j**k
    return total


class IdentityId(enum.Enum):
    """Closed set of tags naming the registered harmonic-sum identities."""

    I1 = "I1"
    I2 = "I2"
    I3 = "I3"
    I4 = "I4"
    I5 = "I5"
    I6 = "I6"
    I7 = "I7"
    I8 = "I8"
    I9 = "I9"
    I10 = "I10"
    I11 = "I11"


@dataclass(frozen=True)
class Identity:
    """One registry entry: a summation and its closed form, as evaluators."""

    lhs: str
    rhs: str
    closed: Callable[[int], Fraction]
    direct: Callable[..., Fraction]
    needs_mean: bool = False


def _h(n: int) -> Fraction:
    return _TABLE.value(n, 1)


def _h2(n: int) -> Fraction:
    return _TABLE.value(n, 2)


def _sq(n: int) -> Fraction:
    # H(n)^2 - H(n,2): the quadratic combination recurring in I6..I10
    h = _h(n)
    return h * h - _h2(n)


def _closed_i1(n: int) -> Fraction:
    return Fraction(n * (n + 1), 2) * _h(n + 1) - Fraction(n * (n + 5), 4)


def _closed_i2(n: int) -> Fraction:
    return n * (n + 1) * _h(n + 1) - Fraction(5 * n * n + n, 2)


def _closed_i3(n: int) -> Fraction:
    return (6 * n * (n + 1) * (2 * n + 1) * _h(n + 1) - n * (n + 1) * (4 * n + 23)) / Fraction(36)


def _closed_i4(n: int) -> Fraction:
    return (6 * n * (n * n + 3 * n + 2) * _h(n + 1) - 5 * n**3 - 27 * n * n - 22 * n) / Fraction(36)


def _closed_i5(n: int) -> Fraction:
    return (n + 1) * _h(n) - n


def _closed_i6(n: int) -> Fraction:
    return _sq(n + 1)


def _closed_i7(n: int) -> Fraction:
    return (n + 2) * _sq(n + 1) - 2 * (n + 1) * (_h(n + 1) - 1)


def _closed_i9(n: int) -> Fraction:
    return (n + 1) * (_sq(n + 1) - 2 * (_h(n + 1) - 1))


def _closed_i10(n: int) -> Fraction:
    return comb(n + 2, 2) * (_sq(n + 1) - 2 * (_h(n + 1) - 1))


def _closed_i11(n: int) -> Fraction:
    inner = sum((j * _h(j - 1) * (n - j + 1) * _h(n - j) for j in range(1, n + 1)), Fraction(0))
    return 4 * inner - Fraction(8, 3) * n * (n * n - 1) * _h(n + 1) + Fraction(44 * n, 9) * (n * n - 1)


def _direct_i1(n: int) -> Fraction:
    return sum((j * _h(j - 1) for j in range(1, n + 1)), Fraction(0))


def _direct_i2(n: int, mean: MeanFn) -> Fraction:
    return sum((mean(j - 1) for j in range(1, n + 1)), Fraction(0))


def _direct_i3(n: int) -> Fraction:
    return sum((j * j * _h(j - 1) for j in range(1, n + 1)), Fraction(0))


def _direct_i4(n: int) -> Fraction:
    return sum((j * (n - j + 1) * _h(n - j) for j in range(1, n + 1)), Fraction(0))


def _direct_i5(n: int) -> Fraction:
    return sum((_h(j) for j in range(1, n + 1)), Fraction(0))


def _direct_i6(n: int) -> Fraction:
    return sum((_h(n + 1 - j) / j for j in range(1, n + 1)), Fraction(0))


def _direct_i7(n: int) -> Fraction:
    return sum((_h(i) * _h(n + 1 - i) for i in range(1, n + 1)), Fraction(0))


def _direct_i8(n: int) -> Fraction:
    return 2 * sum((_h(j) / (j + 1) for j in range(1, n + 1)), Fraction(0))


def _direct_i9(n: int) -> Fraction:
    return sum((_h(i) * _h(n - i) for i in range(1, n + 1)), Fraction(0))


def _direct_i10(n: int) -> Fraction:
    return sum((j * _h(j - 1) * _h(n + 1 - j) for j in range(1, n + 1)), Fraction(0))


def _direct_i11(n: int, mean: MeanFn) -> Fraction:
    return sum((mean(j - 1) * mean(n - j) for j in range(1, n + 1)), Fraction(0))


IDENTITY_REGISTRY: dict[IdentityId, Identity] = {
    IdentityId.I1: Identity(
        lhs="sum_{j=1..n} j*H(j-1)",
        rhs="n*(n+1)*H(n+1)/2 - n*(n+5)/4",
        closed=_closed_i1,
        direct=_direct_i1,
    ),
    IdentityId.I2: Identity(
        lhs="sum_{j=1..n} M(j-1)",
        rhs="n*(n+1)*H(n+1) - (5n^2+n)/2",
        closed=_closed_i2,
        direct=_direct_i2,
        needs_mean=True,
    ),
    IdentityId.I3: Identity(
        lhs="sum_{j=1..n} j^2*H(j-1)",
        rhs="(6n(n+1)(2n+1)*H(n+1) - n(n+1)(4n+23)) / 36",
        closed=_closed_i3,
        direct=_direct_i3,
    ),
    IdentityId.I4: Identity(
        lhs="sum_{j=1..n} j*(n-j+1)*H(n-j)",
        rhs="(6n*H(n+1)*(n^2+3n+2) - 5n^3 - 27n^2 - 22n) / 36",
        closed=_closed_i4,
        direct=_direct_i4,
    ),
    IdentityId.I5: Identity(
        lhs="sum_{j=1..n} H(j)",
        rhs="(n+1)*H(n) - n",
        closed=_closed_i5,
        direct=_direct_i5,
    ),
    IdentityId.I6: Identity(
        lhs="sum_{j=1..n} H(n+1-j)/j",
        rhs="H(n+1)^2 - H(n+1,2)",
        closed=_closed_i6,
        direct=_direct_i6,
    ),
    IdentityId.I7: Identity(
        lhs="sum_{i=1..n} H(i)*H(n+1-i)",
        rhs="(n+2)*(H(n+1)^2 - H(n+1,2)) - 2*(n+1)*(H(n+1) - 1)",
        closed=_closed_i7,
        direct=_direct_i7,
    ),
    IdentityId.I8: Identity(
        lhs="2 * sum_{j=1..n} H(j)/(j+1)",
        rhs="H(n+1)^2 - H(n+1,2)",
        closed=_closed_i6,
        direct=_direct_i8,
    ),
    IdentityId.I9: Identity(
        lhs="sum_{i=1..n} H(i)*H(n-i)",
        rhs="(n+1)*((H(n+1)^2 - H(n+1,2)) - 2*(H(n+1) - 1))",
        closed=_closed_i9,
        direct=_direct_i9,
    ),
    IdentityId.I10: Identity(
        lhs="sum_{j=1..n} j*H(j-1)*H(n+1-j)",
        rhs="binom(n+2,2)*((H(n+1)^2 - H(n+1,2)) - 2*(H(n+1) - 1))",
        closed=_closed_i10,
        direct=_direct_i10,
    ),
    IdentityId.I11: Identity(
        lhs="sum_{j=1..n} M(j-1)*M(n-j)",
        rhs="4*sum_{j=1..n} j*H(j-1)*(n-j+1)*H(n-j) - 8n(n^2-1)*H(n+1)/3 + 44n(n^2-1)/9",
        closed=_closed_i11,
        direct=_direct_i11,
        needs_mean=True,
    ),
}


def _lookup(identity: IdentityId | str, n: int) -> Identity:
    if isinstance(identity, str):
        identity = IdentityId(identity)  # raises ValueError on unknown tags
    if n < 1:
        raise ValueError(f"identities are defined for n >= 1, got {n}")
    return IDENTITY_REGISTRY[identity]


def closed_sum(identity: IdentityId | str, n: int, mean: MeanFn | None = None) -> Fraction:
    """Evaluate the closed-form side of the identity at n, exactly.

    ``mean`` is accepted for symmetry with :func:`direct_sum`; no closed
    side needs it.
    """
    return _lookup(identity, n).closed(n)


def direct_sum(identity: IdentityId | str, n: int, mean: MeanFn | None = None) -> Fraction:
    """Evaluate the summation side literally, term by term.

    No algebraic simplification is applied, so this is the independent
    oracle for :func:`closed_sum`.  Tags I2 and I11 sum mean comparison
    counts and require ``mean`` (e.g. ``moments.mean_comparisons``).
    """
    entry = _lookup(identity, n)
    if entry.needs_mean:
        if mean is None:
            tag = identity.value if isinstance(identity, IdentityId) else identity
            raise ValueError(f"identity {tag} requires a mean evaluator")
        return entry.direct(n, mean)
    return entry.direct(n)
