import random

import pytest

from tribq.matrices import (
    BASIS_E,
    BASIS_I,
    BASIS_J,
    BASIS_K,
    COMPANION,
    MAT3_IDENTITY,
    GaussInt,
    NotInImageError,
    companion_power,
    det2,
    fast_seq,
    mat2,
    mat3_mul,
    phi,
    phi_inverse,
)
from tribq.quat import Quaternion, qadd, qconj, qmul, qnorm, seq_quaternion
from tribq.seqcore import tribonacci, tribonacci_lucas


class TestCompanionPower:
    def test_examples(self):
        assert companion_power(0) == MAT3_IDENTITY
        assert companion_power(1) == ((1, 1, 1), (1, 0, 0), (0, 1, 0))
        assert companion_power(-1) == ((0, 1, 0), (0, 0, 1), (1, -1, -1))

    def test_inverse_is_two_sided(self):
        assert mat3_mul(companion_power(1), companion_power(-1)) == MAT3_IDENTITY
        assert mat3_mul(companion_power(-1), companion_power(1)) == MAT3_IDENTITY

    def test_cayley_hamilton_inverse(self):
        m2 = mat3_mul(COMPANION, COMPANION)
        expected = tuple(
            tuple(
                m2[i][j] - COMPANION[i][j] - MAT3_IDENTITY[i][j]
                for j in range(3)
            )
            for i in range(3)
        )
        assert companion_power(-1) == expected

    def test_power_additivity_random_pairs(self):
        rng = random.Random(77)
        for _ in range(200):
            a = rng.randint(-500, 500)
            b = rng.randint(-500, 500)
            assert companion_power(a + b) == mat3_mul(
                companion_power(a), companion_power(b)
            )


class TestFastSequence:
    def test_examples(self):
        assert fast_seq("T", 13) == 927
        assert fast_seq("K", 13) == 2757
        assert fast_seq("T", -6) == tribonacci(-6)

    def test_matches_iterative_over_range(self):
        for n in range(-300, 301):
            assert fast_seq("T", n) == tribonacci(n)
            assert fast_seq("K", n) == tribonacci_lucas(n)

    def test_rejects_derived_kinds(self):
        with pytest.raises(ValueError):
            fast_seq("R", 5)


class TestMatrixRepresentation:
    def test_basis_images(self):
        assert phi(Quaternion(1, 0, 0, 0)) == BASIS_E
        assert phi(Quaternion(0, 1, 0, 0)) == BASIS_I
        assert phi(Quaternion(0, 0, 1, 0)) == BASIS_J
        assert phi(Quaternion(0, 0, 0, 1)) == BASIS_K

    def test_basis_relations(self):
        minus_e = -BASIS_E
        assert BASIS_I * BASIS_I == minus_e
        assert BASIS_J * BASIS_J == minus_e
        assert BASIS_K * BASIS_K == minus_e
        assert BASIS_I * BASIS_J == BASIS_K
        assert BASIS_J * BASIS_K == BASIS_I
        assert BASIS_K * BASIS_I == BASIS_J

    def test_image_of_first_sequence_quaternion(self):
        m = phi(seq_quaternion("Q", 0))
        assert m == mat2(
            GaussInt(0, 1), GaussInt(-1, -2), GaussInt(1, -2), GaussInt(0, -1)
        )

    def test_homomorphism_on_basis_product(self):
        i = Quaternion(0, 1, 0, 0)
        j = Quaternion(0, 0, 1, 0)
        assert phi(qmul(i, j)) == phi(i) * phi(j)
        assert phi(qmul(i, j)) == BASIS_K

    def test_random_pairs_homomorphism(self):
        rng = random.Random(31337)
        for _ in range(500):
            p = Quaternion(*(rng.randint(-10**4, 10**4) for _ in range(4)))
            q = Quaternion(*(rng.randint(-10**4, 10**4) for _ in range(4)))
            assert phi(qadd(p, q)) == phi(p) + phi(q)
            assert phi(qmul(p, q)) == phi(p) * phi(q)
            assert det2(phi(q)) == GaussInt(qnorm(q), 0)
            assert phi(qconj(q)) == phi(q).conjugate_transpose()
            assert phi_inverse(phi(q)) == q

    def test_det_examples(self):
        assert det2(BASIS_E) == GaussInt(1, 0)
        assert det2(phi(seq_quaternion("Q", 0))) == GaussInt(6, 0)
        assert det2(phi(seq_quaternion("Q", 5))) == GaussInt(2634, 0)

    def test_sequence_images_invertible(self):
        for n in range(-40, 151):
            assert det2(phi(seq_quaternion("Q", n))) != GaussInt(0, 0)

    def test_phi_inverse_examples(self):
        assert phi_inverse(BASIS_E) == Quaternion(1, 0, 0, 0)
        q7 = seq_quaternion("Q", 7)
        assert phi_inverse(phi(q7)) == q7
        m = mat2(GaussInt(0, 1), GaussInt(-1, -2), GaussInt(1, -2), GaussInt(0, -1))
        assert phi_inverse(m) == Quaternion(0, 1, 1, 2)

    def test_phi_inverse_shape_errors(self):
        bad_diag = mat2(GaussInt(1, 0), GaussInt(0, 0), GaussInt(0, 0), GaussInt(2, 0))
        with pytest.raises(NotInImageError):
            phi_inverse(bad_diag)
        bad_corner = mat2(GaussInt(1, 0), GaussInt(1, 0), GaussInt(1, 0), GaussInt(1, 0))
        with pytest.raises(NotInImageError):
            phi_inverse(bad_corner)

    def test_gauss_int_display(self):
        assert str(GaussInt(3, -2)) == "3-2i"
        assert str(GaussInt(-1, 4)) == "-1+4i"
