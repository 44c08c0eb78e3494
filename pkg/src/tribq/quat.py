"""Exact quaternion algebra over integer components.

Quaternions carry four Python ints over the basis (1, i, j, k) with the
Hamilton table i*j = k, j*k = i, k*i = j and i*i = j*j = k*k = -1.  On top of
the raw algebra this module defines the sequence quaternions

    Q(n)      components (T(n), T(n+1), T(n+2), T(n+3))
    Q~(n)     same layout over K
    R~(n)     same layout over R, n >= 0
    U~(n)     same layout over U, n >= 0
    C_(j)     components (C(j), C(j-1), C(j-2), C(j-3)), note the descent

and exact progression sums over them.  Q and Q~ accept every integer index;
evaluating the ascending component windows at negative n reproduces the
usual negative-subscript quaternions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .seqcore import (
    IndexDomainError,
    SequenceKind,
    derived_scalar,
    tribonacci,
    tribonacci_lucas,
)


@dataclass(frozen=True)
class Quaternion:
    """a0 + a1 i + a2 j + a3 k with exact integer components."""

    a0: int = 0
    a1: int = 0
    a2: int = 0
    a3: int = 0

    def components(self):
        return (self.a0, self.a1, self.a2, self.a3)

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(
            self.a0 + other.a0,
            self.a1 + other.a1,
            self.a2 + other.a2,
            self.a3 + other.a3,
        )

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(
            self.a0 - other.a0,
            self.a1 - other.a1,
            self.a2 - other.a2,
            self.a3 - other.a3,
        )

    def __neg__(self):
        return Quaternion(-self.a0, -self.a1, -self.a2, -self.a3)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a0, a1, a2, a3 = self.components()
            b0, b1, b2, b3 = other.components()
            return Quaternion(
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            )
        if isinstance(other, int):
            return Quaternion(
                self.a0 * other, self.a1 * other, self.a2 * other, self.a3 * other
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a0, -self.a1, -self.a2, -self.a3)

    def norm(self) -> int:
        return self.a0 ** 2 + self.a1 ** 2 + self.a2 ** 2 + self.a3 ** 2

    def is_zero(self) -> bool:
        return self == ZERO

    def __str__(self):
        parts = [str(self.a0)]
        for coef, unit in ((self.a1, "i"), (self.a2, "j"), (self.a3, "k")):
            sign = "-" if coef < 0 else "+"
            parts.append(f"{sign} {abs(coef)} {unit}")
        return " ".join(parts)

    def to_json(self) -> dict:
        """Decimal-string serialization, safe at any magnitude."""
        return {
            "a0": str(self.a0),
            "a1": str(self.a1),
            "a2": str(self.a2),
            "a3": str(self.a3),
        }


ZERO = Quaternion()
ONE = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


@dataclass(frozen=True)
class RationalQuaternion:
    """numerator / denominator with a positive integer denominator.

    Not reduced to lowest terms; it only has to witness q * conj(q) = N(q).
    """

    numerator: Quaternion
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")


def qadd(p: Quaternion, q: Quaternion) -> Quaternion:
    return p + q


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product; the single source of truth for multiplication."""
    return p * q


def qconj(q: Quaternion) -> Quaternion:
    return q.conjugate()


def qnorm(q: Quaternion) -> int:
    """N(q), the sum of squared components; the scalar part of q * conj(q)."""
    return q.norm()


def qinv(q: Quaternion) -> RationalQuaternion:
    """Inverse as conj(q) over N(q); raises on the zero quaternion."""
    if q.is_zero():
        raise ZeroDivisionError("the zero quaternion has no inverse")
    return RationalQuaternion(q.conjugate(), q.norm())


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cconj(a):
    return (a[0], -a[1])


def cd_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Product through the complex-pair split q = q1 + q2*j.

    q1 = a0 + a1 i and q2 = a2 + a3 i form the unique split consistent with
    the basis table (q2*j = a2 j + a3 k).  Expanding (p1 + p2 j)(q1 + q2 j)
    and commuting j leftward via j*z = conj(z)*j gives

        p*q = [p1*q1 - conj(q2)*p2] + j*[conj(q2)*conj(p1) + conj(p2)*q1].

    Second implementation kept purely as a cross-check of qmul; the two must
    agree everywhere.
    """
    p1 = (p.a0, p.a1)
    p2 = (p.a2, p.a3)
    q1 = (q.a0, q.a1)
    q2 = (q.a2, q.a3)
    scalar = tuple(
        x - y for x, y in zip(_cmul(p1, q1), _cmul(_cconj(q2), p2))
    )
    jpart = tuple(
        x + y for x, y in zip(_cmul(_cconj(q2), _cconj(p1)), _cmul(_cconj(p2), q1))
    )
    return Quaternion(scalar[0], scalar[1], jpart[0], -jpart[1])


class QuatSeqKind(Enum):
    Q = "Q"
    Qtilde = "Qtilde"
    Rtilde = "Rtilde"
    Utilde = "Utilde"
    Cunder = "Cunder"


# Lowest admissible index per kind; None means unbounded below.
QUAT_DOMAIN_MIN = {
    QuatSeqKind.Q: None,
    QuatSeqKind.Qtilde: None,
    QuatSeqKind.Cunder: None,
    QuatSeqKind.Rtilde: 0,
    QuatSeqKind.Utilde: 0,
}


def as_quat_kind(kind) -> QuatSeqKind:
    if isinstance(kind, QuatSeqKind):
        return kind
    try:
        return QuatSeqKind(str(kind))
    except ValueError:
        raise ValueError(f"unknown quaternion sequence kind {kind!r}") from None


def seq_quaternion(kind, n: int) -> Quaternion:
    """The n-th sequence quaternion of the given kind.

    Q, Q~, R~ and U~ window their scalar sequence upward from n; C_ windows
    C downward from n.
    """
    kind = as_quat_kind(kind)
    lo = QUAT_DOMAIN_MIN[kind]
    if lo is not None and n < lo:
        raise IndexDomainError(
            f"{kind.value} is defined for n >= {lo}, got n = {n}"
        )
    if kind is QuatSeqKind.Q:
        return Quaternion(
            tribonacci(n), tribonacci(n + 1), tribonacci(n + 2), tribonacci(n + 3)
        )
    if kind is QuatSeqKind.Qtilde:
        return Quaternion(
            tribonacci_lucas(n),
            tribonacci_lucas(n + 1),
            tribonacci_lucas(n + 2),
            tribonacci_lucas(n + 3),
        )
    if kind is QuatSeqKind.Rtilde:
        r = SequenceKind.R
        return Quaternion(
            derived_scalar(r, n),
            derived_scalar(r, n + 1),
            derived_scalar(r, n + 2),
            derived_scalar(r, n + 3),
        )
    if kind is QuatSeqKind.Utilde:
        u = SequenceKind.U
        return Quaternion(
            derived_scalar(u, n),
            derived_scalar(u, n + 1),
            derived_scalar(u, n + 2),
            derived_scalar(u, n + 3),
        )
    c = SequenceKind.C
    return Quaternion(
        derived_scalar(c, n),
        derived_scalar(c, n - 1),
        derived_scalar(c, n - 2),
        derived_scalar(c, n - 3),
    )


def q_progression_sum(kind, start: int, stride: int, count: int) -> Quaternion:
    """Exact sum of seq_quaternion(kind, start + t*stride) for t = 0..count-1."""
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    total = ZERO
    index = start
    for _ in range(count):
        total = total + seq_quaternion(kind, index)
        index += stride
    return total
