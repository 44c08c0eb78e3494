"""Brute-force twin of the audit checker, sharing no arithmetic with the library.

Every sequence value here comes from plain loop iteration on the raw
recurrences, quaternions are bare 4-tuples with the Hamilton product written
out inline, and series coefficients come from a local convolution.  The
point is to re-derive each cataloged verdict along a second, independent
path: if `audit.check_identity` and `oracle_check` ever disagree on a
verdict or on a counterexample set, one of them is wrong.

The grid walk, the in-domain filtering and the 16-counterexample cap mirror
the checker so that the two outputs are compared field by field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

CAP = 16


def trib(n: int) -> int:
    a, b, c = 0, 1, 1
    if n >= 0:
        for _ in range(n):
            a, b, c = b, c, a + b + c
        return a
    for _ in range(-n):
        a, b, c = c - b - a, a, b
    return a


def lucas(n: int) -> int:
    a, b, c = 3, 1, 3
    if n >= 0:
        for _ in range(n):
            a, b, c = b, c, a + b + c
        return a
    for _ in range(-n):
        a, b, c = c - b - a, a, b
    return a


def rseq(n: int) -> int:
    return 3 * trib(n + 1) - trib(n)


def useq(n: int) -> int:
    return 0 if n < 2 else trib(n - 1) + trib(n - 2)


def cseq(n: int) -> int:
    return lucas(-n)


def ssum(m: int) -> int:
    return sum(trib(k) for k in range(m + 1))


def qq(n):
    return (trib(n), trib(n + 1), trib(n + 2), trib(n + 3))


def qlucas(n):
    return (lucas(n), lucas(n + 1), lucas(n + 2), lucas(n + 3))


def qr(n):
    return (rseq(n), rseq(n + 1), rseq(n + 2), rseq(n + 3))


def qu(n):
    return (useq(n), useq(n + 1), useq(n + 2), useq(n + 3))


def qc(n):
    return (cseq(n), cseq(n - 1), cseq(n - 2), cseq(n - 3))


def add(p, q):
    return (p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3])


def sub(p, q):
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3])


def smul(c, q):
    return (c * q[0], c * q[1], c * q[2], c * q[3])


def mul(p, q):
    a0, a1, a2, a3 = p
    b0, b1, b2, b3 = q
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def conj(q):
    return (q[0], -q[1], -q[2], -q[3])


def norm(q):
    return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]


def sq(q):
    return mul(q, q)


def scalar(x):
    return (x, 0, 0, 0)


def shat(n):
    total = (0, 0, 0, 0)
    for k in range(n + 1):
        total = add(total, qq(k))
    return total


def sum_qq(start, stride, count):
    total = (0, 0, 0, 0)
    for t in range(count):
        total = add(total, qq(start + t * stride))
    return total


def sum_qlucas(start, stride, count):
    total = (0, 0, 0, 0)
    for t in range(count):
        total = add(total, qlucas(start + t * stride))
    return total


def sum_qu(start, stride, count):
    total = (0, 0, 0, 0)
    for t in range(count):
        total = add(total, qu(start + t * stride))
    return total


def sum_qr(start, stride, count):
    total = (0, 0, 0, 0)
    for t in range(count):
        total = add(total, qr(start + t * stride))
    return total


def norm_series_coefficient(n: int) -> int:
    # local convolution over the expanded denominator product
    fac_a = (1, -3, -1, -1)
    fac_b = (1, 1, 1, -1)
    den = [0] * (len(fac_a) + len(fac_b) - 1)
    for i, x in enumerate(fac_a):
        for j, y in enumerate(fac_b):
            den[i + j] += x * y
    num = (6, 10, 8, -4, -2, -2)
    coeffs = []
    for t in range(n + 1):
        acc = num[t] if t < len(num) else 0
        for k in range(1, min(t, len(den) - 1) + 1):
            acc -= den[k] * coeffs[t - k]
        coeffs.append(acc)  # den[0] == 1
    return coeffs[n]


def _i5_cross(n):
    return smul(2, mul(add(qq(n + 1), qq(n + 2)), qq(n + 3)))


# id -> (variables, per-variable domain floor or None, lhs, rhs)
CASES = {
    "I1.1": (
        ("n",),
        {"n": 0},
        lambda n: sq(qq(n)),
        lambda n: sub(smul(2 * trib(n), qq(n)), mul(qq(n), conj(qq(n)))),
    ),
    "I1.2": (
        ("n",),
        {"n": 0},
        lambda n: add(qq(n), conj(qq(n))),
        lambda n: scalar(2 * trib(n)),
    ),
    "I1.3": (
        ("n",),
        {"n": None},
        lambda n: qlucas(n),
        lambda n: add(add(qq(n), smul(2, qq(n - 1))), smul(3, qq(n - 2))),
    ),
    "I2.1": (
        ("m", "n"),
        {"m": None, "n": None},
        lambda m, n: qq(m + n),
        lambda m, n: add(
            sub(smul(lucas(n), qq(m)), smul(cseq(n), qq(m - n))), qq(m - 2 * n)
        ),
    ),
    "I2.2": (
        ("m", "n"),
        {"m": None, "n": None},
        lambda m, n: qlucas(m + n),
        lambda m, n: add(
            sub(smul(lucas(n), qlucas(m)), smul(cseq(n), qlucas(m - n))),
            qc(2 * n - m),
        ),
    ),
    "I2.3": (
        ("m", "n"),
        {"m": None, "n": None},
        lambda m, n: qq(n + 2 * m),
        lambda m, n: add(
            sub(smul(lucas(m), qq(n + m)), smul(lucas(-m), qq(n))), qq(n - 2 * m)
        ),
    ),
    "I3": (
        ("m", "n"),
        {"m": 3, "n": 0},
        lambda m, n: qq(n + m),
        lambda m, n: add(
            add(
                smul(trib(m - 2), qq(n)),
                smul(trib(m - 3) + trib(m - 2), qq(n + 1)),
            ),
            smul(trib(m - 1), qq(n + 2)),
        ),
    ),
    "I4.1": (
        ("n",),
        {"n": 4},
        lambda n: smul(2, qq(n)),
        lambda n: sub(shat(n), shat(n - 4)),
    ),
    "I4.2": (
        ("m", "n"),
        {"m": 5, "n": 0},
        lambda m, n: shat(n + m),
        lambda m, n: add(
            sub(
                sub(smul(-ssum(m - 3), shat(n)), smul(ssum(m - 4), shat(n + 1))),
                smul(ssum(m - 5), shat(n + 2)),
            ),
            smul(ssum(m - 2), shat(n + 3)),
        ),
    ),
    "I5": (
        ("n",),
        {"n": 0},
        lambda n: add(sq(mul(qq(n), qq(n + 4))), sq(_i5_cross(n))),
        lambda n: sq(add(sq(qq(n)), _i5_cross(n))),
    ),
    "I6.1": (
        ("n",),
        {"n": 0},
        lambda n: qr(n + 3),
        lambda n: add(add(qr(n + 2), qr(n + 1)), qr(n)),
    ),
    "I6.2": (
        ("n",),
        {"n": 0},
        lambda n: qu(n + 3),
        lambda n: add(add(qu(n + 2), qu(n + 1)), qu(n)),
    ),
    "I6.3a": (
        ("n",),
        {"n": 2},
        lambda n: sub(sq(qq(n)), sq(qq(n - 1))),
        lambda n: mul(qu(n + 1), qu(n - 1)),
    ),
    "I6.3b": (
        ("n",),
        {"n": 2},
        lambda n: sub(sq(qq(n)), sq(qq(n - 1))),
        lambda n: mul(qu(n - 1), qu(n + 1)),
    ),
    "I6.4": (
        ("n",),
        {"n": 2},
        lambda n: add(sq(qu(n + 1)), sq(qu(n - 1))),
        lambda n: smul(2, add(sq(qq(n - 1)), sq(qq(n)))),
    ),
    "I7.1": (
        ("n",),
        {"n": 0},
        lambda n: smul(2, sum_qq(0, 1, n + 1)),
        lambda n: sub(add(add(qq(n + 2), qq(n)), qq(0)), qq(2)),
    ),
    "I7.2": (
        ("n",),
        {"n": 0},
        lambda n: smul(2, sum_qq(0, 2, n + 1)),
        lambda n: sub(add(qq(2 * n + 1), qq(2 * n)), (1, 0, 1, 2)),
    ),
    "I7.3": (
        ("n",),
        {"n": 0},
        lambda n: smul(2, sum_qq(1, 2, n + 1)),
        lambda n: sub(add(qq(2 * n + 2), qq(2 * n + 1)), (0, 1, 2, 3)),
    ),
    "I7.4": (
        ("n",),
        {"n": 0},
        lambda n: smul(2, sum_qq(0, 3, n + 1)),
        lambda n: sub(sub(qq(3 * n + 2), qq(3 * n)), (1, -1, 1, 1)),
    ),
    "I7.5": (
        ("n",),
        {"n": 0},
        lambda n: smul(4, sum_qq(0, 4, n + 1)),
        lambda n: sub(add(qq(4 * n + 2), qq(4 * n)), (1, -1, 1, 1)),
    ),
    "I7.6": (
        ("n",),
        {"n": 0},
        lambda n: sum_qu(0, 1, n + 1),
        lambda n: sub(qq(n + 1), (1, 1, 1, 2)),
    ),
    "I7.7": (
        ("n",),
        {"n": 1},
        lambda n: sum_qlucas(1, 1, n),
        lambda n: sub(add(smul(2, qu(n + 2)), qu(n)), (3, 4, 7, 14)),
    ),
    "I7.8": (
        ("n",),
        {"n": 0},
        lambda n: smul(2, sum_qq(0, 1, n + 1)),
        lambda n: sub(add(qu(n + 2), qu(n + 1)), (1, 1, 3, 5)),
    ),
    "I7.9": (
        ("n",),
        {"n": 0},
        lambda n: smul(2, sum_qr(0, 1, n + 1)),
        lambda n: sub(
            sub(add(smul(3, qu(n + 3)), smul(2, qu(n + 2))), qu(n + 1)),
            (2, 8, 12, 22),
        ),
    ),
    "I7.10": (
        ("n",),
        {"n": 0},
        lambda n: sum_qu(0, 3, n + 1),
        lambda n: sub(qq(3 * n), (0, 1, 0, 0)),
    ),
    "I7.11": (
        ("n",),
        {"n": 0},
        lambda n: sum_qu(1, 3, n + 1),
        lambda n: sub(qq(3 * n + 1), (1, 0, 0, 1)),
    ),
    "N1": (
        ("n",),
        {"n": 0},
        lambda n: scalar(
            trib(n) ** 2 + trib(n + 1) ** 2 + trib(n + 2) ** 2 + trib(n + 3) ** 2
        ),
        lambda n: scalar(norm_series_coefficient(n)),
    ),
    "X1": (
        ("m", "n"),
        {"m": None, "n": None},
        lambda m, n: qc(2 * n - m),
        lambda m, n: qlucas(m - 2 * n),
    ),
}


@dataclass
class OracleVerdict:
    id: str
    status: str
    counterexample_count: int
    counterexamples: list  # [{"indices": {...}, "lhs": tuple, "rhs": tuple}]
    minimal_counterexample: Optional[dict]


def oracle_check(identity_id: str, bounds: dict) -> OracleVerdict:
    """Re-derive the verdict for one identity over an inclusive bounds box."""
    variables, floors, lhs_fn, rhs_fn = CASES[identity_id]
    ranges = []
    for var in variables:
        lo, hi = bounds[var]
        if floors[var] is not None:
            lo = max(lo, floors[var])
        ranges.append(range(lo, hi + 1))
    counterexamples = []
    count = 0
    for point in itertools.product(*ranges):
        lhs = lhs_fn(*point)
        rhs = rhs_fn(*point)
        if lhs != rhs:
            count += 1
            if len(counterexamples) < CAP:
                counterexamples.append(
                    {"indices": dict(zip(variables, point)), "lhs": lhs, "rhs": rhs}
                )
    return OracleVerdict(
        id=identity_id,
        status="fail" if count else "pass",
        counterexample_count=count,
        counterexamples=counterexamples,
        minimal_counterexample=(
            dict(counterexamples[0]["indices"]) if counterexamples else None
        ),
    )
