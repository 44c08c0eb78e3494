"""Exact power-series expansion of rational generating functions.

A series is a numerator/denominator pair of polynomials in ascending powers;
numerator coefficients are quaternions (scalars embed as scalar quaternions)
and denominator coefficients are ints with constant term +-1, which keeps
every expanded coefficient an integer quaternion.  Coefficients come out of
the convolution recurrence

    den[0]*c[n] = num[n] - sum(den[k]*c[n-k] for k = 1..deg den)

rather than any generic polynomial division machinery.

Four generating functions ship built in:

    f      x / (1 - x - x^2 - x^3)                       -> T(n)
    h      (3 - 2x - x^2) / (1 - x - x^2 - x^3)          -> K(n)
    G      quaternion numerator over the same cubic      -> Q(n)
    normT  2(3 + 5x + 4x^2 - 2x^3 - x^4 - x^5) over
           (1 - 3x - x^2 - x^3)(1 + x + x^2 - x^3)       -> N(Q(n))

normT's denominator is stored expanded; the expansion is asserted against a
direct polynomial product in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quat import Quaternion, ZERO


class UnsupportedDenominatorError(ValueError):
    """The denominator cannot drive an exact integer expansion."""


@dataclass(frozen=True)
class RationalSeries:
    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        if not self.denominator:
            raise UnsupportedDenominatorError("denominator polynomial is empty")
        if self.denominator[0] not in (1, -1):
            raise UnsupportedDenominatorError(
                f"denominator constant term must be +1 or -1, got {self.denominator[0]}"
            )


def _scalar_coeffs(values) -> tuple:
    return tuple(Quaternion(v, 0, 0, 0) for v in values)


def expand(series: RationalSeries, count: int):
    """First `count` coefficients of numerator/denominator, exactly."""
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    num = series.numerator
    den = series.denominator
    lead = den[0]
    coeffs = []
    for n in range(count):
        acc = num[n] if n < len(num) else ZERO
        for k in range(1, min(n, len(den) - 1) + 1):
            acc = acc - coeffs[n - k] * den[k]
        # lead is +-1, so dividing by it is multiplying by it.
        coeffs.append(acc * lead)
    return coeffs


def polymul(a, b) -> tuple:
    """Product of two integer polynomials in ascending-power form."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


TRIB_DENOMINATOR = (1, -1, -1, -1)
_NORM_DENOM_FACTORS = ((1, -3, -1, -1), (1, 1, 1, -1))


def builtin_series(name: str) -> RationalSeries:
    """One of the built-in generating functions: f, h, G or normT."""
    if name == "f":
        return RationalSeries(_scalar_coeffs((0, 1)), TRIB_DENOMINATOR)
    if name == "h":
        return RationalSeries(_scalar_coeffs((3, -2, -1)), TRIB_DENOMINATOR)
    if name == "G":
        return RationalSeries(
            (
                Quaternion(0, 1, 1, 2),
                Quaternion(1, 0, 1, 2),
                Quaternion(0, 0, 1, 1),
            ),
            TRIB_DENOMINATOR,
        )
    if name == "normT":
        return RationalSeries(
            _scalar_coeffs((6, 10, 8, -4, -2, -2)),
            polymul(*_NORM_DENOM_FACTORS),
        )
    raise ValueError(f"unknown builtin series {name!r}; expected f, h, G or normT")
