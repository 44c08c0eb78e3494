"""Companion-matrix fast evaluation and the 2x2 complex-matrix picture of quaternions.

The companion matrix of the order-3 recurrence,

    M = | 1 1 1 |
        | 1 0 0 |
        | 0 1 0 |

has determinant 1 and characteristic polynomial x^3 - x^2 - x - 1, so
M^-1 = M^2 - M - I is again an integer matrix and every integer power of M
is exact.  Binary exponentiation of M gives T(n) and K(n) in O(log |n|)
matrix products, an evaluation path fully independent of the iterative one.

Separately, quaternions map onto 2x2 matrices over the Gaussian integers:

    q = a0 + a1 i + a2 j + a3 k  ->  a0 E + a1 I + a2 J + a3 K

with E the identity, I = diag(i, -i), J = ((0, -1), (1, 0)) and
K = ((0, -i), (-i, 0)).  This K differs from the more commonly printed
((0, -i), (i, 0)); the latter breaks I*J = K and the homomorphism property,
so the corrected form is used here and the discrepancy is surfaced as an
audit note.  Images have the shape ((z, -w), (conj(w), conj(z))) and their
determinant equals the quaternion norm.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quat import Quaternion
from .seqcore import SequenceKind, as_kind

Mat3 = tuple

COMPANION: Mat3 = ((1, 1, 1), (1, 0, 0), (0, 1, 0))
COMPANION_INVERSE: Mat3 = ((0, 1, 0), (0, 0, 1), (1, -1, -1))
MAT3_IDENTITY: Mat3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def mat3_mul(a: Mat3, b: Mat3) -> Mat3:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def companion_power(n: int) -> Mat3:
    """M^n by binary exponentiation; negative powers use M^-1 = M^2 - M - I."""
    base = COMPANION if n >= 0 else COMPANION_INVERSE
    e = abs(n)
    result = MAT3_IDENTITY
    while e:
        if e & 1:
            result = mat3_mul(result, base)
        base = mat3_mul(base, base)
        e >>= 1
    return result


_FAST_STATE = {
    SequenceKind.T: (1, 1, 0),  # (T(2), T(1), T(0))
    SequenceKind.K: (3, 1, 3),  # (K(2), K(1), K(0))
}


def fast_seq(kind, n: int) -> int:
    """T(n) or K(n) in O(log |n|) exact steps via the companion matrix."""
    kind = as_kind(kind)
    if kind not in _FAST_STATE:
        raise ValueError(f"fast evaluation covers T and K, got {kind.value}")
    state = _FAST_STATE[kind]
    row = companion_power(n)[2]  # bottom row of M^n applied to (x2, x1, x0)
    return sum(r * s for r, s in zip(row, state))


class NotInImageError(ValueError):
    """The matrix does not have the ((z, -w), (conj w, conj z)) shape."""


@dataclass(frozen=True)
class GaussInt:
    """Exact complex integer re + im*i."""

    re: int = 0
    im: int = 0

    def __add__(self, other):
        if not isinstance(other, GaussInt):
            return NotImplemented
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        if not isinstance(other, GaussInt):
            return NotImplemented
        return GaussInt(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, GaussInt):
            return NotImplemented
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def __str__(self):
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


@dataclass(frozen=True)
class Mat2C:
    """2x2 matrix over GaussInt, row-major."""

    rows: tuple

    def __add__(self, other):
        if not isinstance(other, Mat2C):
            return NotImplemented
        return Mat2C(
            tuple(
                tuple(x + y for x, y in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __mul__(self, other):
        if not isinstance(other, Mat2C):
            return NotImplemented
        a, b = self.rows, other.rows
        return Mat2C(
            tuple(
                tuple(
                    a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)
                )
                for i in range(2)
            )
        )

    def __neg__(self):
        return Mat2C(tuple(tuple(-x for x in row) for row in self.rows))

    def conjugate_transpose(self) -> "Mat2C":
        r = self.rows
        return Mat2C(
            (
                (r[0][0].conjugate(), r[1][0].conjugate()),
                (r[0][1].conjugate(), r[1][1].conjugate()),
            )
        )


def mat2(z00: GaussInt, z01: GaussInt, z10: GaussInt, z11: GaussInt) -> Mat2C:
    return Mat2C(((z00, z01), (z10, z11)))


_ZERO_G = GaussInt(0, 0)
_ONE_G = GaussInt(1, 0)
_I_G = GaussInt(0, 1)

BASIS_E = mat2(_ONE_G, _ZERO_G, _ZERO_G, _ONE_G)
BASIS_I = mat2(_I_G, _ZERO_G, _ZERO_G, -_I_G)
BASIS_J = mat2(_ZERO_G, -_ONE_G, _ONE_G, _ZERO_G)
BASIS_K = mat2(_ZERO_G, -_I_G, -_I_G, _ZERO_G)


def phi(q: Quaternion) -> Mat2C:
    """a0 E + a1 I + a2 J + a3 K, i.e. ((a0+a1 i, -a2-a3 i), (a2-a3 i, a0-a1 i))."""
    return mat2(
        GaussInt(q.a0, q.a1),
        GaussInt(-q.a2, -q.a3),
        GaussInt(q.a2, -q.a3),
        GaussInt(q.a0, -q.a1),
    )


def phi_inverse(m: Mat2C) -> Quaternion:
    """The unique quaternion mapping to m; raises if m is not in the image."""
    (z, mw), (wbar, zbar) = m.rows
    if zbar != z.conjugate() or mw != -wbar.conjugate():
        raise NotInImageError(
            "matrix lacks the ((z, -w), (conj w, conj z)) shape"
        )
    return Quaternion(z.re, z.im, wbar.re, -wbar.im)


def det2(m: Mat2C) -> GaussInt:
    r = m.rows
    return r[0][0] * r[1][1] - r[0][1] * r[1][0]
