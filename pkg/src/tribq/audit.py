"""Machine-checked audit of the quaternion identity catalog.

Every cataloged statement is an equation between two exactly computable
quaternion expressions, quantified over one index (n) or two (m, n).  The
checker walks an inclusive integer grid in lexicographic order, evaluates
both sides exactly, and reports pass/fail with the complete counterexample
count and up to 16 stored counterexamples; the first stored counterexample
is the lexicographically least one.  A failing identity is a result, not an
error: the catalog records statements as printed, including the ones that
exact arithmetic refutes.

Statements with a rational constant (the halved and quartered progression
sums) are stored with denominators cleared, so every comparison stays in
integer arithmetic; the `statement` strings show the cleared form.

The checker's twin in `oracle.py` re-derives everything from raw recurrences
with no shared arithmetic code; agreement between the two is the module's
overall correctness criterion.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Callable, Optional

from . import series
from .quat import Quaternion, QuatSeqKind, q_progression_sum, qconj, qnorm, seq_quaternion
from .seqcore import SequenceKind, derived_scalar, tribonacci, tribonacci_lucas

COUNTEREXAMPLE_CAP = 16

DEFAULT_SINGLE_MAX = 200
DEFAULT_DOUBLE_MAX = 50
NEGATIVE_BOX_MIN = -25  # two-variable shift identities also sweep negative indices

AUDIT_NOTES = (
    "2x2 basis matrix K is ((0,-i),(-i,0)); the variant ((0,-i),(i,0)) breaks "
    "I*J = K and the multiplicativity of the quaternion-to-matrix map, so the "
    "corrected form is used throughout.",
    "Statements involving a rational constant are checked with denominators "
    "cleared (2*sum or 4*sum against the integer numerator).",
    "Progression-sum statements are read with the running index k under the "
    "summation sign.",
    "U(0) is fixed at 0 by definition; the window sum formula would give 1, "
    "which is why the U~ recurrence check starts failing exactly at n = 0.",
)


class UnknownIdentityError(ValueError):
    """No catalog entry carries the requested id."""


class EmptyRangeError(ValueError):
    """The requested bounds contain no in-domain grid point."""


@dataclass(frozen=True)
class IdentityCase:
    """One checkable statement: an id, a domain, and two exact evaluators."""

    id: str
    variables: tuple
    domain: str
    lower: dict          # per-variable domain floor, None if unbounded below
    default_lower: dict  # floor used by the default audit profile
    description: str
    statement: str       # ASCII form of the equation actually compared
    lhs: Callable
    rhs: Callable


@dataclass
class VerdictReport:
    """Outcome of checking one identity over one bounds box."""

    id: str
    statement: str
    domain: str
    checked: dict
    status: str
    counterexample_count: int
    counterexamples: list
    minimal_counterexample: Optional[dict]
    elapsed_ms: int

    def to_json_dict(self, stable: bool = False) -> dict:
        return {
            "id": self.id,
            "paper_ref": self.statement,
            "domain": self.domain,
            "checked": {v: [lo, hi] for v, (lo, hi) in self.checked.items()},
            "status": self.status,
            "counterexample_count": self.counterexample_count,
            "counterexamples": [
                {
                    "indices": dict(ce["indices"]),
                    "lhs": ce["lhs"].to_json(),
                    "rhs": ce["rhs"].to_json(),
                }
                for ce in self.counterexamples
            ],
            "elapsed_ms": 0 if stable else self.elapsed_ms,
        }


def _s(x: int) -> Quaternion:
    return Quaternion(x, 0, 0, 0)


def _T(n):
    return tribonacci(n)


def _K(n):
    return tribonacci_lucas(n)


def _C(n):
    return derived_scalar(SequenceKind.C, n)


def _S(n):
    return derived_scalar(SequenceKind.S, n)


def _Q(n):
    return seq_quaternion(QuatSeqKind.Q, n)


def _Qt(n):
    return seq_quaternion(QuatSeqKind.Qtilde, n)


def _Rt(n):
    return seq_quaternion(QuatSeqKind.Rtilde, n)


def _Ut(n):
    return seq_quaternion(QuatSeqKind.Utilde, n)


def _Cu(n):
    return seq_quaternion(QuatSeqKind.Cunder, n)


def _Shat(n):
    return q_progression_sum(QuatSeqKind.Q, 0, 1, n + 1)


def _norm_series_coefficient(n):
    return series.expand(series.builtin_series("normT"), n + 1)[n]


def _i5_cross(n):
    # 2*(Q(n+1)+Q(n+2))*Q(n+3), shared by both sides of I5
    return 2 * ((_Q(n + 1) + _Q(n + 2)) * _Q(n + 3))


_CATALOG = (
    IdentityCase(
        id="I1.1",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="square of Q(n) from its scalar part and conjugate product",
        statement="Q(n)^2 = 2*T(n)*Q(n) - Q(n)*conj(Q(n))",
        lhs=lambda n: _Q(n) ** 2,
        rhs=lambda n: (2 * _T(n)) * _Q(n) - _Q(n) * qconj(_Q(n)),
    ),
    IdentityCase(
        id="I1.2",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="quaternion plus conjugate collapses to twice the scalar part",
        statement="Q(n) + conj(Q(n)) = 2*T(n)",
        lhs=lambda n: _Q(n) + qconj(_Q(n)),
        rhs=lambda n: _s(2 * _T(n)),
    ),
    IdentityCase(
        id="I1.3",
        variables=("n",),
        domain="all integers",
        lower={"n": None},
        default_lower={"n": 0},
        description="Q~ as a fixed 3-term combination of shifted Q",
        statement="Q~(n) = Q(n) + 2*Q(n-1) + 3*Q(n-2)",
        lhs=lambda n: _Qt(n),
        rhs=lambda n: _Q(n) + 2 * _Q(n - 1) + 3 * _Q(n - 2),
    ),
    IdentityCase(
        id="I2.1",
        variables=("m", "n"),
        domain="all integers",
        lower={"m": None, "n": None},
        default_lower={"m": NEGATIVE_BOX_MIN, "n": NEGATIVE_BOX_MIN},
        description="index addition for Q through K and C",
        statement="Q(m+n) = Q(m)*K(n) - Q(m-n)*C(n) + Q(m-2n)",
        lhs=lambda m, n: _Q(m + n),
        rhs=lambda m, n: _K(n) * _Q(m) - _C(n) * _Q(m - n) + _Q(m - 2 * n),
    ),
    IdentityCase(
        id="I2.2",
        variables=("m", "n"),
        domain="all integers",
        lower={"m": None, "n": None},
        default_lower={"m": NEGATIVE_BOX_MIN, "n": NEGATIVE_BOX_MIN},
        description="index addition for Q~ with the descending C window as remainder",
        statement="Q~(m+n) = Q~(m)*K(n) - Q~(m-n)*C(n) + C_(2n-m)",
        lhs=lambda m, n: _Qt(m + n),
        rhs=lambda m, n: _K(n) * _Qt(m) - _C(n) * _Qt(m - n) + _Cu(2 * n - m),
    ),
    IdentityCase(
        id="I2.3",
        variables=("m", "n"),
        domain="all integers",
        lower={"m": None, "n": None},
        default_lower={"m": NEGATIVE_BOX_MIN, "n": NEGATIVE_BOX_MIN},
        description="double-stride index shift for Q, checked exactly as printed",
        statement="Q(n+2m) = K(m)*Q(n+m) - K(-m)*Q(n) + Q(n-2m)",
        lhs=lambda m, n: _Q(n + 2 * m),
        rhs=lambda m, n: _K(m) * _Q(n + m) - _K(-m) * _Q(n) + _Q(n - 2 * m),
    ),
    IdentityCase(
        id="I3",
        variables=("m", "n"),
        domain="m >= 3, n >= 0",
        lower={"m": 3, "n": 0},
        default_lower={"m": 3, "n": 0},
        description="Q index addition with T coefficients only",
        statement="Q(n+m) = T(m-2)*Q(n) + (T(m-3)+T(m-2))*Q(n+1) + T(m-1)*Q(n+2)",
        lhs=lambda m, n: _Q(n + m),
        rhs=lambda m, n: _T(m - 2) * _Q(n)
        + (_T(m - 3) + _T(m - 2)) * _Q(n + 1)
        + _T(m - 1) * _Q(n + 2),
    ),
    IdentityCase(
        id="I4.1",
        variables=("n",),
        domain="n >= 4",
        lower={"n": 4},
        default_lower={"n": 4},
        description="window of four consecutive prefix sums telescopes to 2*Q(n)",
        statement="2*Q(n) = S^(n) - S^(n-4)",
        lhs=lambda n: 2 * _Q(n),
        rhs=lambda n: _Shat(n) - _Shat(n - 4),
    ),
    IdentityCase(
        id="I4.2",
        variables=("m", "n"),
        domain="m >= 5, n >= 0",
        lower={"m": 5, "n": 0},
        default_lower={"m": 5, "n": 0},
        description="prefix-sum index addition with S coefficients",
        statement=(
            "S^(n+m) = -S(m-3)*S^(n) - S(m-4)*S^(n+1) - S(m-5)*S^(n+2) + S(m-2)*S^(n+3)"
        ),
        lhs=lambda m, n: _Shat(n + m),
        rhs=lambda m, n: (-_S(m - 3)) * _Shat(n)
        + (-_S(m - 4)) * _Shat(n + 1)
        + (-_S(m - 5)) * _Shat(n + 2)
        + _S(m - 2) * _Shat(n + 3),
    ),
    IdentityCase(
        id="I5",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="Pythagorean-style square relation, checked exactly as printed",
        statement=(
            "(Q(n)*Q(n+4))^2 + (2*(Q(n+1)+Q(n+2))*Q(n+3))^2"
            " = (Q(n)^2 + 2*(Q(n+1)+Q(n+2))*Q(n+3))^2"
        ),
        lhs=lambda n: (_Q(n) * _Q(n + 4)) ** 2 + _i5_cross(n) ** 2,
        rhs=lambda n: (_Q(n) ** 2 + _i5_cross(n)) ** 2,
    ),
    IdentityCase(
        id="I6.1",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="R~ satisfies the order-3 recurrence",
        statement="R~(n+3) = R~(n+2) + R~(n+1) + R~(n)",
        lhs=lambda n: _Rt(n + 3),
        rhs=lambda n: _Rt(n + 2) + _Rt(n + 1) + _Rt(n),
    ),
    IdentityCase(
        id="I6.2",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="U~ satisfies the order-3 recurrence",
        statement="U~(n+3) = U~(n+2) + U~(n+1) + U~(n)",
        lhs=lambda n: _Ut(n + 3),
        rhs=lambda n: _Ut(n + 2) + _Ut(n + 1) + _Ut(n),
    ),
    IdentityCase(
        id="I6.3a",
        variables=("n",),
        domain="n >= 2",
        lower={"n": 2},
        default_lower={"n": 2},
        description="difference of consecutive Q squares vs the U~ product, left order",
        statement="Q(n)^2 - Q(n-1)^2 = U~(n+1)*U~(n-1)",
        lhs=lambda n: _Q(n) ** 2 - _Q(n - 1) ** 2,
        rhs=lambda n: _Ut(n + 1) * _Ut(n - 1),
    ),
    IdentityCase(
        id="I6.3b",
        variables=("n",),
        domain="n >= 2",
        lower={"n": 2},
        default_lower={"n": 2},
        description="difference of consecutive Q squares vs the U~ product, right order",
        statement="Q(n)^2 - Q(n-1)^2 = U~(n-1)*U~(n+1)",
        lhs=lambda n: _Q(n) ** 2 - _Q(n - 1) ** 2,
        rhs=lambda n: _Ut(n - 1) * _Ut(n + 1),
    ),
    IdentityCase(
        id="I6.4",
        variables=("n",),
        domain="n >= 2",
        lower={"n": 2},
        default_lower={"n": 2},
        description="sum of U~ squares vs twice the Q squares (order-free)",
        statement="U~(n+1)^2 + U~(n-1)^2 = 2*(Q(n-1)^2 + Q(n)^2)",
        lhs=lambda n: _Ut(n + 1) ** 2 + _Ut(n - 1) ** 2,
        rhs=lambda n: 2 * (_Q(n - 1) ** 2 + _Q(n) ** 2),
    ),
    IdentityCase(
        id="I7.1",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="closed form of the Q prefix sum",
        statement="2*sum(Q(k), k=0..n) = Q(n+2) + Q(n) + Q(0) - Q(2)",
        lhs=lambda n: 2 * q_progression_sum(QuatSeqKind.Q, 0, 1, n + 1),
        rhs=lambda n: _Q(n + 2) + _Q(n) + _Q(0) - _Q(2),
    ),
    IdentityCase(
        id="I7.2",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="closed form of the even-index Q sum",
        statement="2*sum(Q(2k), k=0..n) = Q(2n+1) + Q(2n) - (1 + j + 2k)",
        lhs=lambda n: 2 * q_progression_sum(QuatSeqKind.Q, 0, 2, n + 1),
        rhs=lambda n: _Q(2 * n + 1) + _Q(2 * n) - Quaternion(1, 0, 1, 2),
    ),
    IdentityCase(
        id="I7.3",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="closed form of the odd-index Q sum",
        statement="2*sum(Q(2k+1), k=0..n) = Q(2n+2) + Q(2n+1) - (i + 2j + 3k)",
        lhs=lambda n: 2 * q_progression_sum(QuatSeqKind.Q, 1, 2, n + 1),
        rhs=lambda n: _Q(2 * n + 2) + _Q(2 * n + 1) - Quaternion(0, 1, 2, 3),
    ),
    IdentityCase(
        id="I7.4",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="closed form of the stride-3 Q sum",
        statement="2*sum(Q(3k), k=0..n) = Q(3n+2) - Q(3n) - (1 - i + j + k)",
        lhs=lambda n: 2 * q_progression_sum(QuatSeqKind.Q, 0, 3, n + 1),
        rhs=lambda n: _Q(3 * n + 2) - _Q(3 * n) - Quaternion(1, -1, 1, 1),
    ),
    IdentityCase(
        id="I7.5",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="closed form of the stride-4 Q sum",
        statement="4*sum(Q(4k), k=0..n) = Q(4n+2) + Q(4n) - (1 - i + j + k)",
        lhs=lambda n: 4 * q_progression_sum(QuatSeqKind.Q, 0, 4, n + 1),
        rhs=lambda n: _Q(4 * n + 2) + _Q(4 * n) - Quaternion(1, -1, 1, 1),
    ),
    IdentityCase(
        id="I7.6",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="U~ prefix sum collapses to a shifted Q",
        statement="sum(U~(k), k=0..n) = Q(n+1) - (1 + i + j + 2k)",
        lhs=lambda n: q_progression_sum(QuatSeqKind.Utilde, 0, 1, n + 1),
        rhs=lambda n: _Q(n + 1) - Quaternion(1, 1, 1, 2),
    ),
    IdentityCase(
        id="I7.7",
        variables=("n",),
        domain="n >= 1",
        lower={"n": 1},
        default_lower={"n": 1},
        description="Q~ sum from k = 1 in terms of U~",
        statement="sum(Q~(k), k=1..n) = 2*U~(n+2) + U~(n) - (3 + 4i + 7j + 14k)",
        lhs=lambda n: q_progression_sum(QuatSeqKind.Qtilde, 1, 1, n),
        rhs=lambda n: 2 * _Ut(n + 2) + _Ut(n) - Quaternion(3, 4, 7, 14),
    ),
    IdentityCase(
        id="I7.8",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="Q prefix sum in terms of U~",
        statement="2*sum(Q(k), k=0..n) = U~(n+2) + U~(n+1) - (1 + i + 3j + 5k)",
        lhs=lambda n: 2 * q_progression_sum(QuatSeqKind.Q, 0, 1, n + 1),
        rhs=lambda n: _Ut(n + 2) + _Ut(n + 1) - Quaternion(1, 1, 3, 5),
    ),
    IdentityCase(
        id="I7.9",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="R~ prefix sum in terms of U~",
        statement=(
            "2*sum(R~(k), k=0..n) = 3*U~(n+3) + 2*U~(n+2) - U~(n+1) - (2 + 8i + 12j + 22k)"
        ),
        lhs=lambda n: 2 * q_progression_sum(QuatSeqKind.Rtilde, 0, 1, n + 1),
        rhs=lambda n: 3 * _Ut(n + 3)
        + 2 * _Ut(n + 2)
        - _Ut(n + 1)
        - Quaternion(2, 8, 12, 22),
    ),
    IdentityCase(
        id="I7.10",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="stride-3 U~ sum collapses to a Q minus i",
        statement="sum(U~(3k), k=0..n) = Q(3n) - i",
        lhs=lambda n: q_progression_sum(QuatSeqKind.Utilde, 0, 3, n + 1),
        rhs=lambda n: _Q(3 * n) - Quaternion(0, 1, 0, 0),
    ),
    IdentityCase(
        id="I7.11",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="shifted stride-3 U~ sum collapses to a Q minus (1 + k)",
        statement="sum(U~(3k+1), k=0..n) = Q(3n+1) - (1 + k)",
        lhs=lambda n: q_progression_sum(QuatSeqKind.Utilde, 1, 3, n + 1),
        rhs=lambda n: _Q(3 * n + 1) - Quaternion(1, 0, 0, 1),
    ),
    IdentityCase(
        id="N1",
        variables=("n",),
        domain="n >= 0",
        lower={"n": 0},
        default_lower={"n": 0},
        description="norm of Q(n) equals the generating-function coefficient",
        statement="N(Q(n)) = T(n)^2 + T(n+1)^2 + T(n+2)^2 + T(n+3)^2 = [x^n] normT",
        lhs=lambda n: _s(qnorm(_Q(n))),
        rhs=lambda n: _norm_series_coefficient(n),
    ),
    IdentityCase(
        id="X1",
        variables=("m", "n"),
        domain="all integers",
        lower={"m": None, "n": None},
        default_lower={"m": 0, "n": 0},
        description="descending C window equals the ascending K window at the negated index",
        statement="C_(2n-m) = Q~(m-2n), using C(n) = K(-n)",
        lhs=lambda m, n: _Cu(2 * n - m),
        rhs=lambda m, n: _Qt(m - 2 * n),
    ),
)

_BY_ID = {case.id: case for case in _CATALOG}


def catalog():
    """All identity cases in their stable declaration order."""
    return list(_CATALOG)


def get_case(identity_id: str) -> IdentityCase:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity id {identity_id!r}") from None


def _id_sort_key(identity_id: str):
    # natural ordering: I7.2 sorts before I7.10
    parts = []
    token = ""
    for ch in identity_id:
        if ch.isdigit():
            token += ch
        else:
            if token:
                parts.append((0, int(token)))
                token = ""
            parts.append((1, ch))
    if token:
        parts.append((0, int(token)))
    return parts


def _grid(case: IdentityCase, bounds: dict):
    ranges = []
    for var in case.variables:
        lo, hi = bounds[var]
        floor = case.lower[var]
        if floor is not None:
            lo = max(lo, floor)
        ranges.append(range(lo, hi + 1))
    return itertools.product(*ranges)


def check_identity(identity_id: str, bounds: dict) -> VerdictReport:
    """Evaluate one identity over an inclusive bounds box.

    bounds maps each of the identity's variables to (lo, hi).  Points below
    the identity's domain floor are skipped; if nothing remains the call is
    an error rather than a vacuous pass.
    """
    case = get_case(identity_id)
    if set(bounds) != set(case.variables):
        raise ValueError(
            f"{identity_id} is quantified over {case.variables}, got bounds for {tuple(bounds)}"
        )
    started = time.perf_counter()
    counterexamples = []
    count = 0
    points = 0
    for point in _grid(case, bounds):
        points += 1
        lhs = case.lhs(*point)
        rhs = case.rhs(*point)
        if lhs != rhs:
            count += 1
            if len(counterexamples) < COUNTEREXAMPLE_CAP:
                counterexamples.append(
                    {
                        "indices": dict(zip(case.variables, point)),
                        "lhs": lhs,
                        "rhs": rhs,
                    }
                )
    if points == 0:
        raise EmptyRangeError(
            f"no in-domain grid point for {identity_id} within {bounds}"
        )
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    return VerdictReport(
        id=case.id,
        statement=case.statement,
        domain=case.domain,
        checked={v: tuple(bounds[v]) for v in case.variables},
        status="fail" if count else "pass",
        counterexample_count=count,
        counterexamples=counterexamples,
        minimal_counterexample=(
            dict(counterexamples[0]["indices"]) if counterexamples else None
        ),
        elapsed_ms=elapsed_ms,
    )


def default_bounds(case: IdentityCase, single_max: int = DEFAULT_SINGLE_MAX,
                   double_max: int = DEFAULT_DOUBLE_MAX) -> dict:
    """The default audit box for one identity."""
    hi = single_max if len(case.variables) == 1 else double_max
    return {v: (case.default_lower[v], hi) for v in case.variables}


def run_audit(single_max: int = DEFAULT_SINGLE_MAX, double_max: int = DEFAULT_DOUBLE_MAX,
              ids=None):
    """Check every catalog entry (or the selected ids) over the default profile."""
    if ids is None:
        selected = list(_CATALOG)
    else:
        selected = [get_case(i) for i in ids]
    reports = [
        check_identity(case.id, default_bounds(case, single_max, double_max))
        for case in selected
    ]
    reports.sort(key=lambda r: _id_sort_key(r.id))
    return reports


def minimal_counterexample(identity_id: str, search_bound: int):
    """Lexicographically least in-domain failure within the bound, or None.

    Variables with a domain floor start there; unbounded variables start at
    -search_bound.
    """
    case = get_case(identity_id)
    bounds = {}
    for var in case.variables:
        floor = case.lower[var]
        lo = floor if floor is not None else -search_bound
        bounds[var] = (lo, search_bound)
    for point in _grid(case, bounds):
        if case.lhs(*point) != case.rhs(*point):
            return dict(zip(case.variables, point))
    return None


def render_report(reports, single_max: int = DEFAULT_SINGLE_MAX,
                  double_max: int = DEFAULT_DOUBLE_MAX, stable: bool = False) -> str:
    """Canonical JSON for a list of verdicts.

    stable=True omits the timestamp and zeroes elapsed_ms so that two runs
    over the same bounds are byte-identical.
    """
    doc = {
        "version": 1,
        "bounds": {
            "single_variable": [None, single_max],
            "two_variable": [None, double_max],
            "note": "lower bounds follow each identity's domain floor; see 'checked' per result",
        },
        "results": [r.to_json_dict(stable=stable) for r in reports],
        "notes": list(AUDIT_NOTES),
    }
    if not stable:
        doc["generated_at"] = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
