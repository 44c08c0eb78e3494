import pytest
from mpmath import mp

from tribq.binet import (
    MIN_PRECISION_BITS,
    PrecisionError,
    binet_quaternion,
    binet_scalar,
    compute_roots,
    policy_precision_bits,
    rounding_residue,
)
from tribq.quat import seq_quaternion
from tribq.seqcore import derived_scalar, tribonacci, tribonacci_lucas


class TestRoots:
    def test_alpha_leading_digits(self):
        roots = compute_roots(64)
        assert mp.nstr(roots.alpha, 10)[:11] == "1.839286755"

    def test_alpha_bracket(self):
        roots = compute_roots(128)
        assert 1.8 < roots.alpha < 1.9

    def test_gamma_is_conjugate(self):
        roots = compute_roots(128)
        assert roots.gamma == mp.conj(roots.beta)
        assert roots.beta.imag > 0

    @pytest.mark.parametrize("bits", [64, 128, 256, 512])
    def test_vieta(self, bits):
        roots = compute_roots(bits)
        a, b, g = roots.alpha, roots.beta, roots.gamma
        tol = mp.mpf(2) ** (-(bits // 2))
        assert abs(a + b + g - 1) < tol
        assert abs(a * b + a * g + b * g + 1) < tol
        assert abs(a * b * g - 1) < tol

    def test_roots_satisfy_the_cubic(self):
        roots = compute_roots(256)
        tol = mp.mpf(2) ** -200
        for x in (roots.alpha, roots.beta, roots.gamma):
            assert abs(x ** 3 - x ** 2 - x - 1) < tol

    def test_precision_floor(self):
        with pytest.raises(ValueError):
            compute_roots(MIN_PRECISION_BITS - 1)


class TestScalarClosedForm:
    def test_examples(self):
        assert binet_scalar("T", 10, 128)[1] == 149
        assert binet_scalar("K", 0, 128)[1] == 3
        assert binet_scalar("T", -3, 128)[1] == -1

    def test_round_trip_range(self):
        for n in range(-80, 81):
            bits = policy_precision_bits(n)
            approx, rounded = binet_scalar("T", n, bits)
            assert rounded == tribonacci(n)
            assert rounding_residue(approx) < 1e-6
            approx, rounded = binet_scalar("K", n, bits)
            assert rounded == tribonacci_lucas(n)
            assert rounding_residue(approx) < 1e-6

    def test_rejects_unsupported_kind(self):
        with pytest.raises(ValueError):
            binet_scalar("R", 3, 128)

    def test_insufficient_precision_raises(self):
        # T(400) needs ~352 bits; at the 64-bit floor rounding must refuse
        with pytest.raises(PrecisionError):
            binet_scalar("T", 400, 64)


class TestQuaternionClosedForm:
    def test_examples(self):
        assert binet_quaternion("Q", 5, 128)[1] == seq_quaternion("Q", 5)
        assert binet_quaternion("Qtilde", 0, 128)[1].components() == (3, 1, 3, 7)
        assert binet_quaternion("Q", -4, 192)[1] == seq_quaternion("Q", -4)

    def test_round_trip_range(self):
        for n in range(-60, 61):
            bits = policy_precision_bits(n)
            for kind, exact in (("Q", "Q"), ("Qtilde", "Qtilde")):
                approx, rounded = binet_quaternion(kind, n, bits)
                assert rounded == seq_quaternion(exact, n)
                assert max(rounding_residue(c) for c in approx.components()) < 1e-6

    def test_rejects_unsupported_kind(self):
        with pytest.raises(ValueError):
            binet_quaternion("Cunder", 3, 128)


class TestNumericalBehaviour:
    def test_symmetric_pair_power_sum_matches_flipped_lucas(self):
        # the exact rule C(n) = K(-n) validated in floating arithmetic
        roots = compute_roots(256)
        a, b, g = roots.alpha, roots.beta, roots.gamma
        with mp.workprec(256 + 32):
            for n in range(-100, 101):
                value = a ** n * b ** n + a ** n * g ** n + b ** n * g ** n
                assert abs(value - derived_scalar("C", n)) < mp.mpf("1e-6")

    def test_doubling_precision_shrinks_residue(self):
        n = 50
        res1 = max(
            rounding_residue(c)
            for c in binet_quaternion("Q", n, 150)[0].components()
        )
        res2 = max(
            rounding_residue(c)
            for c in binet_quaternion("Q", n, 300)[0].components()
        )
        assert res1 > 0
        assert res2 <= res1 / 2 ** 32

    def test_policy_precision_formula(self):
        assert policy_precision_bits(0) == 96
        assert policy_precision_bits(100) == 88 + 96
        assert policy_precision_bits(-100) == 88 + 96
        assert policy_precision_bits(300) == 264 + 96
