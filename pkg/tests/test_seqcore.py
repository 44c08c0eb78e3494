import concurrent.futures

import pytest

from tribq.seqcore import (
    LUCAS_SEEDS,
    TRIBONACCI_SEEDS,
    IndexDomainError,
    SequenceKind,
    derived_scalar,
    iterate_value,
    sequence_value,
    tribonacci,
    tribonacci_lucas,
)

# n = 0..13
T_TABLE = [0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927]
K_TABLE = [3, 1, 3, 7, 11, 21, 39, 71, 131, 241, 443, 815, 1499, 2757]


class TestTableValues:
    def test_tribonacci_table(self):
        assert [tribonacci(n) for n in range(14)] == T_TABLE

    def test_lucas_table(self):
        assert [tribonacci_lucas(n) for n in range(14)] == K_TABLE

    def test_example_points(self):
        assert tribonacci(7) == 24
        assert tribonacci(0) == 0
        assert tribonacci_lucas(5) == 21
        assert tribonacci_lucas(0) == 3


class TestNegativeIndices:
    def test_backward_oracle_tribonacci(self):
        # backward recurrence x(n) = x(n+3) - x(n+2) - x(n+1), iterated by hand
        expected = {-1: 0, -2: 1, -3: -1, -4: 0, -5: 2, -6: -3}
        for n, value in expected.items():
            assert tribonacci(n) == value

    def test_backward_oracle_lucas(self):
        expected = {-1: -1, -2: -1, -3: 5, -4: -5, -5: -1, -6: 11}
        for n, value in expected.items():
            assert tribonacci_lucas(n) == value

    def test_negated_index_recurrence_seeds(self):
        # the flipped sequences a(n) = x(-n) satisfy
        # a(n) = -a(n-1) - a(n-2) + a(n-3) with their own seeds
        for seeds, x in ((TRIBONACCI_SEEDS, tribonacci), (LUCAS_SEEDS, tribonacci_lucas)):
            for n in range(2, 40):
                assert x(-n) == -x(-(n - 1)) - x(-(n - 2)) + x(-(n - 3))

    @pytest.mark.parametrize("fn", [tribonacci, tribonacci_lucas])
    def test_recurrence_over_range(self, fn):
        for n in range(-57, 201):
            assert fn(n) == fn(n - 1) + fn(n - 2) + fn(n - 3)


class TestDerivedScalars:
    def test_examples(self):
        assert derived_scalar(SequenceKind.R, 0) == 3
        assert derived_scalar(SequenceKind.U, 5) == 6
        assert derived_scalar(SequenceKind.C, 0) == 3
        assert derived_scalar(SequenceKind.C, 1) == -1
        assert derived_scalar(SequenceKind.S, 5) == 15

    def test_u_seeds(self):
        assert derived_scalar("U", 0) == 0
        assert derived_scalar("U", 1) == 0
        assert derived_scalar("U", 2) == 1

    def test_c_equals_flipped_lucas(self):
        for n in range(-60, 61):
            assert derived_scalar("C", n) == tribonacci_lucas(-n)

    def test_c_recurrence(self):
        c = lambda n: derived_scalar("C", n)
        for n in range(-57, 61):
            assert c(n) == -c(n - 1) - c(n - 2) + c(n - 3)

    def test_s_prefix_differences(self):
        s = lambda m: derived_scalar("S", m)
        for m in range(1, 201):
            assert s(m) - s(m - 1) == tribonacci(m)

    def test_kind_strings_accepted(self):
        assert derived_scalar("R", 4) == derived_scalar(SequenceKind.R, 4)

    @pytest.mark.parametrize("kind", ["R", "U", "S"])
    def test_domain_errors_name_the_kind(self, kind):
        with pytest.raises(IndexDomainError) as info:
            derived_scalar(kind, -1)
        assert kind in str(info.value)
        assert "n >= 0" in str(info.value)

    def test_t_and_k_rejected(self):
        with pytest.raises(ValueError):
            derived_scalar("T", 3)


class TestEvaluationPaths:
    def test_memoized_matches_unmemoized(self):
        for n in range(-60, 201):
            assert tribonacci(n) == iterate_value(TRIBONACCI_SEEDS, n)
            assert tribonacci_lucas(n) == iterate_value(LUCAS_SEEDS, n)

    def test_sequence_value_dispatch(self):
        assert sequence_value("T", 7) == 24
        assert sequence_value("K", 5) == 21
        assert sequence_value("S", 5) == 15

    def test_concurrent_reads_agree(self):
        expected = {n: tribonacci(n) for n in range(-200, 301)}

        def worker(offset):
            return all(
                tribonacci(n) == expected[n]
                for n in range(-200 + offset, 301, 7)
            )

        with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
            assert all(pool.map(worker, range(7)))
