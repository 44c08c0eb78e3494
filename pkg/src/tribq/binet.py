"""Closed-form evaluation of T, K and the sequence quaternions in high-precision arithmetic.

The characteristic cubic x^3 - x^2 - x - 1 has one real root alpha in
(1.8, 1.9) and a conjugate pair beta, gamma.  The closed forms are

    T(n) = alpha^(n+1)/((alpha-beta)(alpha-gamma)) + two symmetric terms
    K(n) = alpha^n + beta^n + gamma^n

and the quaternion versions replace each root's unit weight by the weight
quaternion 1 + i*x + j*x^2 + k*x^3 evaluated at that root.

Evaluation happens in mpmath binary floats at a caller-chosen precision.
Results are rounded back to exact integers only when every component sits
within 0.25 of an integer lattice point (real residue and imaginary residue
both); otherwise a PrecisionError is raised rather than returning a silently
wrong value.  The default precision policy adds 96 guard bits on top of the
growth rate, ceil(0.88 * |n|) + 96, which keeps the pre-rounding residue far
below the rejection threshold for every |n| in the supported test ranges.

Roots are found by Newton iteration seeded inside an exactly verified sign
bracket, then cross-checked against the nested-radical closed forms (cube
roots of 19 +- 3*sqrt(33) over 3).  Nested complex radicals are easier to
get wrong than a cubic solve, so Newton is the primary path and the radicals
are the independent confirmation.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp

from .quat import Quaternion
from .seqcore import SequenceKind, as_kind
from .quat import QuatSeqKind, as_quat_kind


class PrecisionError(ArithmeticError):
    """The approximation was too far from the integer lattice to round."""


MIN_PRECISION_BITS = 64
ROUNDING_REJECT = 0.25
_GUARD_BITS = 32

# mpmath's working precision is process-global state; the lock keeps
# concurrent evaluations from trampling each other's precision. Values
# returned from inside the lock are immutable and keep their full mantissas.
_MP_LOCK = threading.RLock()


@dataclass(frozen=True)
class Roots:
    """The three roots of x^3 - x^2 - x - 1 at a stated working precision."""

    alpha: object  # real mpf
    beta: object   # mpc, positive imaginary part
    gamma: object  # mpc, conjugate of beta
    precision_bits: int


@dataclass(frozen=True)
class QuaternionC:
    """Quaternion with complex coefficients (the complex unit commutes with i, j, k)."""

    a0: object
    a1: object
    a2: object
    a3: object

    def components(self):
        return (self.a0, self.a1, self.a2, self.a3)


def policy_precision_bits(n: int) -> int:
    """Default working precision for index n: ceil(0.88|n|) + 96 bits."""
    return math.ceil(0.88 * abs(n)) + 96


def _poly(x):
    return x ** 3 - x ** 2 - x - 1


def _poly_prime(x):
    return 3 * x ** 2 - 2 * x - 1


def _verify_real_bracket():
    # Exact rational sign check: the cubic changes sign on [9/5, 19/10].
    def p(x: Fraction) -> Fraction:
        return x ** 3 - x ** 2 - x - 1

    lo, hi = Fraction(9, 5), Fraction(19, 10)
    if not (p(lo) < 0 < p(hi)):
        raise ArithmeticError("sign bracket for the real root failed")


@lru_cache(maxsize=None)
def compute_roots(precision_bits: int) -> Roots:
    """Roots at the requested precision, Newton-refined and radical-checked."""
    if not isinstance(precision_bits, int) or precision_bits < MIN_PRECISION_BITS:
        raise ValueError(
            f"precision_bits must be an integer >= {MIN_PRECISION_BITS}, got {precision_bits}"
        )
    _verify_real_bracket()
    with _MP_LOCK, mp.workprec(precision_bits + _GUARD_BITS):
        stop = mp.mpf(2) ** (-(precision_bits + _GUARD_BITS - 8))
        x = mp.mpf("1.85")
        for _ in range(80):
            dx = _poly(x) / _poly_prime(x)
            x -= dx
            if abs(dx) < stop:
                break
        else:
            raise ArithmeticError("Newton iteration for the real root did not converge")
        if not (mp.mpf("1.8") < x < mp.mpf("1.9")):
            raise ArithmeticError("real root left its verified bracket")

        # Deflate: the conjugate pair solves y^2 + (x-1)y + 1/x = 0.
        disc = 4 / x - (x - 1) ** 2
        beta = mp.mpc(-(x - 1) / 2, mp.sqrt(disc) / 2)
        beta -= _poly(beta) / _poly_prime(beta)
        gamma = mp.conj(beta)

        # Independent confirmation from the nested-radical closed forms.
        s33 = mp.sqrt(mp.mpf(33))
        c_plus = mp.cbrt(19 + 3 * s33)
        c_minus = mp.cbrt(19 - 3 * s33)
        w = mp.mpc(mp.mpf(-1) / 2, mp.sqrt(mp.mpf(3)) / 2)
        alpha_radical = (1 + c_plus + c_minus) / 3
        beta_radical = (1 + w * c_plus + w * w * c_minus) / 3
        radical_tol = mp.mpf(2) ** (-precision_bits + 8)
        if abs(alpha_radical - x) > radical_tol or abs(beta_radical - beta) > radical_tol:
            raise ArithmeticError("radical closed forms disagree with the Newton roots")

        vieta_tol = mp.mpf(2) ** (-(precision_bits // 2))
        if abs((x + beta + gamma) - 1) > vieta_tol:
            raise ArithmeticError("root sum failed the Vieta check")
        if abs((x * beta + x * gamma + beta * gamma) + 1) > vieta_tol:
            raise ArithmeticError("pairwise product sum failed the Vieta check")
        if abs(x * beta * gamma - 1) > vieta_tol:
            raise ArithmeticError("root product failed the Vieta check")
    return Roots(alpha=x, beta=beta, gamma=gamma, precision_bits=precision_bits)


def _mantissa_bits(value) -> int:
    if hasattr(value, "_mpc_"):
        return max(part[3] for part in value._mpc_)
    if hasattr(value, "_mpf_"):
        return value._mpf_[3]
    return 0


def rounding_residue(value) -> float:
    """Distance from an approximate value to the nearest integer lattice point.

    Measured at the value's own mantissa width, so a high-precision input is
    not flattened to double precision first.
    """
    with _MP_LOCK, mp.workprec(max(53, _mantissa_bits(value)) + 16):
        z = mp.mpc(value)
        return float(max(abs(z.real - mp.nint(z.real)), abs(z.imag)))


def _round_component(value, precision_bits: int, context: str) -> int:
    z = mp.mpc(value)
    # A value whose magnitude approaches 2^precision has lattice spacing
    # above 1 at this precision: the residue would be exactly 0 while the
    # digits are garbage.  Refuse instead of rounding blind.
    if mp.mag(z.real) > precision_bits - 8:
        raise PrecisionError(
            f"magnitude of {context} exceeds the {precision_bits}-bit working "
            f"precision; raise the precision"
        )
    nearest = mp.nint(z.real)
    residue = max(abs(z.real - nearest), abs(z.imag))
    if residue >= ROUNDING_REJECT:
        raise PrecisionError(
            f"residue {mp.nstr(residue, 8)} too large to round {context}; "
            f"raise the precision"
        )
    return int(nearest)


def _scalar_weights(kind: SequenceKind, roots: Roots, n: int):
    """Per-root multipliers: the closed form is sum(weight(root) * root_power_basis)."""
    a, b, g = roots.alpha, roots.beta, roots.gamma
    if kind is SequenceKind.T:
        return (
            a ** (n + 1) / ((a - b) * (a - g)),
            b ** (n + 1) / ((b - a) * (b - g)),
            g ** (n + 1) / ((g - a) * (g - b)),
        )
    return (a ** n, b ** n, g ** n)


def binet_scalar(kind, n: int, precision_bits: int):
    """Closed-form T(n) or K(n); returns (approximation, rounded integer)."""
    kind = as_kind(kind)
    if kind not in (SequenceKind.T, SequenceKind.K):
        raise ValueError(f"closed forms cover T and K, got {kind.value}")
    roots = compute_roots(precision_bits)
    with _MP_LOCK, mp.workprec(precision_bits + _GUARD_BITS):
        wa, wb, wg = _scalar_weights(kind, roots, n)
        approx = mp.mpc(wa) + wb + wg
        rounded = _round_component(approx, precision_bits, f"{kind.value}({n})")
    return approx, rounded


def binet_quaternion(kind, n: int, precision_bits: int):
    """Closed-form Q(n) or Q~(n); returns (QuaternionC, rounded Quaternion).

    The per-root weight quaternion is 1 + i*x + j*x^2 + k*x^3, so component
    t is the scalar closed form with each root power raised by t.
    """
    kind = as_quat_kind(kind)
    if kind not in (QuatSeqKind.Q, QuatSeqKind.Qtilde):
        raise ValueError(f"closed forms cover Q and Qtilde, got {kind.value}")
    scalar_kind = SequenceKind.T if kind is QuatSeqKind.Q else SequenceKind.K
    roots = compute_roots(precision_bits)
    with _MP_LOCK, mp.workprec(precision_bits + _GUARD_BITS):
        weights = _scalar_weights(scalar_kind, roots, n)
        bases = (roots.alpha, roots.beta, roots.gamma)
        approx = []
        rounded = []
        for t in range(4):
            comp = mp.mpc(0)
            for w, x in zip(weights, bases):
                comp += w * x ** t
            approx.append(comp)
            rounded.append(
                _round_component(comp, precision_bits, f"{kind.value}({n}) component {t}")
            )
    return QuaternionC(*approx), Quaternion(*rounded)
