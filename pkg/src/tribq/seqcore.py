"""Exact integer sequences built on the order-3 recurrence x(n) = x(n-1) + x(n-2) + x(n-3).

Two base sequences share that recurrence: the Tribonacci numbers T (seeds
0, 1, 1) and the Tribonacci-Lucas numbers K (seeds 3, 1, 3).  Both extend to
negative indices through the inverted recurrence x(n) = x(n+3) - x(n+2) - x(n+1).
Four derived sequences sit on top:

    R(n) = 3*T(n+1) - T(n)                       n >= 0
    U(n) = T(n-1) + T(n-2), with U(0) = U(1) = 0  n >= 0
    C(n) = K(-n)                                  all integers
    S(m) = T(0) + T(1) + ... + T(m)               m >= 0

C(n) is the second elementary symmetric function of the n-th powers of the
characteristic roots; because the three roots multiply to 1, it collapses to
K(-n), which keeps every evaluation exact.  The high-precision module
confirms the collapse numerically.

All values are plain Python ints, so arithmetic is exact at any magnitude.
Every function is pure; the internal caches are lock-protected and only ever
append values, so concurrent callers always see identical results.
"""

from __future__ import annotations

import threading
from enum import Enum


class IndexDomainError(ValueError):
    """An index fell outside the declared domain of a sequence."""


class SequenceKind(Enum):
    T = "T"
    K = "K"
    R = "R"
    U = "U"
    C = "C"
    S = "S"


# Lowest admissible index per kind; None means unbounded below.
DOMAIN_MIN = {
    SequenceKind.T: None,
    SequenceKind.K: None,
    SequenceKind.C: None,
    SequenceKind.R: 0,
    SequenceKind.U: 0,
    SequenceKind.S: 0,
}

TRIBONACCI_SEEDS = (0, 1, 1)
LUCAS_SEEDS = (3, 1, 3)


def as_kind(kind) -> SequenceKind:
    """Coerce a SequenceKind or its one-letter name to the enum."""
    if isinstance(kind, SequenceKind):
        return kind
    try:
        return SequenceKind(str(kind))
    except ValueError:
        raise ValueError(f"unknown sequence kind {kind!r}") from None


def _check_domain(kind: SequenceKind, n: int) -> None:
    lo = DOMAIN_MIN[kind]
    if lo is not None and n < lo:
        raise IndexDomainError(
            f"{kind.value} is defined for n >= {lo}, got n = {n}"
        )


def iterate_value(seeds, n: int) -> int:
    """Evaluate the recurrence at n by plain iteration, touching no cache.

    seeds are (x(0), x(1), x(2)).  Kept separate from the cached path so the
    two can be compared against each other.
    """
    a, b, c = seeds
    if n >= 0:
        if n == 0:
            return a
        if n == 1:
            return b
        for _ in range(n - 2):
            a, b, c = b, c, a + b + c
        return c
    for _ in range(-n):
        a, b, c = c - b - a, a, b
    return a


class _Backbone:
    """Append-only two-sided cache for one instance of the recurrence."""

    def __init__(self, seeds):
        self._fwd = list(seeds)  # x(0), x(1), x(2), ...
        self._bwd = []           # x(-1), x(-2), ...
        self._lock = threading.Lock()

    def _at(self, i):
        return self._fwd[i] if i >= 0 else self._bwd[-i - 1]

    def value(self, n: int) -> int:
        with self._lock:
            if n >= 0:
                fwd = self._fwd
                while n >= len(fwd):
                    fwd.append(fwd[-1] + fwd[-2] + fwd[-3])
                return fwd[n]
            bwd = self._bwd
            while -n > len(bwd):
                m = -len(bwd) - 1
                bwd.append(self._at(m + 3) - self._at(m + 2) - self._at(m + 1))
            return bwd[-n - 1]


class _PrefixSums:
    """Append-only cache of partial sums of a backbone, from index 0 up."""

    def __init__(self, backbone: _Backbone):
        self._backbone = backbone
        self._sums = []
        self._lock = threading.Lock()

    def value(self, m: int) -> int:
        with self._lock:
            sums = self._sums
            while m >= len(sums):
                term = self._backbone.value(len(sums))
                sums.append(term if not sums else sums[-1] + term)
            return sums[m]


_T = _Backbone(TRIBONACCI_SEEDS)
_K = _Backbone(LUCAS_SEEDS)
_S = _PrefixSums(_T)


def tribonacci(n: int) -> int:
    """T(n) for any integer n."""
    return _T.value(n)


def tribonacci_lucas(n: int) -> int:
    """K(n) for any integer n."""
    return _K.value(n)


def derived_scalar(kind, n: int) -> int:
    """R(n), U(n), C(n) or S(n), with the kind's domain enforced.

    U keeps its fixed seeds U(0) = U(1) = 0 even though the defining sum
    would give U(0) = 1; identities sensitive to that seed are the audit's
    business, not this function's.
    """
    kind = as_kind(kind)
    if kind in (SequenceKind.T, SequenceKind.K):
        raise ValueError(
            f"derived_scalar handles R, U, C, S; use tribonacci/tribonacci_lucas for {kind.value}"
        )
    _check_domain(kind, n)
    if kind is SequenceKind.R:
        return 3 * _T.value(n + 1) - _T.value(n)
    if kind is SequenceKind.U:
        return 0 if n < 2 else _T.value(n - 1) + _T.value(n - 2)
    if kind is SequenceKind.C:
        return _K.value(-n)
    return _S.value(n)


def sequence_value(kind, n: int) -> int:
    """Uniform dispatcher over all six kinds (used by the CLI)."""
    kind = as_kind(kind)
    if kind is SequenceKind.T:
        return tribonacci(n)
    if kind is SequenceKind.K:
        return tribonacci_lucas(n)
    return derived_scalar(kind, n)
