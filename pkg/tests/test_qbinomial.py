"""Gaussian polynomials: examples, the product characterization, recurrences."""

import pytest

from qpartitions.polynomial import ONE, IntPolynomial
from qpartitions.qbinomial import (
    GaussianParams,
    check_gr1,
    check_gr2,
    gaussian,
    pochhammer_q,
    qbinom,
)


def brute_restricted_counts(max_part, max_count):
    """Coefficient list of [max_part + max_count, max_part] by enumeration.

    Counts partitions of each n into at most ``max_count`` parts, each at
    most ``max_part``, by direct recursive generation.  Oracle only; no
    polynomial arithmetic.
    """

    def gen(limit, slots, total):
        yield total
        if slots == 0:
            return
        for part in range(1, limit + 1):
            yield from gen(part, slots - 1, total + part)

    counts = [0] * (max_part * max_count + 1)
    for total in gen(max_part, max_count, 0):
        counts[total] += 1
    return counts


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer_q(0) == ONE

    def test_single_factor(self):
        assert pochhammer_q(1) == IntPolynomial((1, -1))

    def test_three_factors(self):
        # (1-q)(1-q^2)(1-q^3) expanded by hand
        assert pochhammer_q(3) == IntPolynomial((1, -1, -1, 0, 1, 1, -1))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            pochhammer_q(-1)


class TestGaussian:
    def test_four_choose_two(self):
        # matches brute-force enumeration of partitions with <=2 parts <=2
        expected = brute_restricted_counts(2, 2)
        assert list(qbinom(4, 2).coeffs) == expected == [1, 1, 2, 1, 1]

    def test_bottom_zero(self):
        assert qbinom(5, 0) == ONE

    def test_out_of_range_bottom_is_zero(self):
        assert qbinom(3, 4, 2).is_zero()
        assert qbinom(3, -1).is_zero()

    def test_inflated(self):
        assert qbinom(3, 1, 2) == IntPolynomial((1, 0, 1, 0, 1))

    def test_matches_enumeration_on_a_grid(self):
        for max_part in range(5):
            for max_count in range(5):
                expected = brute_restricted_counts(max_part, max_count)
                got = qbinom(max_part + max_count, max_part)
                assert [got.coeff(i) for i in range(len(expected))] == expected

    def test_params_wrapper(self):
        assert gaussian(GaussianParams(4, 2)) == qbinom(4, 2)
        assert gaussian(GaussianParams(3, 1, step=2)) == qbinom(3, 1, 2)

    def test_invalid_params(self):
        with pytest.raises(ValueError):
            GaussianParams(-1, 0)
        with pytest.raises(ValueError):
            GaussianParams(3, 1, step=0)
        with pytest.raises(ValueError):
            qbinom(3, 1, 0)


class TestDefinitionConsistency:
    def test_product_identity(self):
        # [n, k] (q;q)_k (q;q)_{n-k} == (q;q)_n, checked without any division
        for n in range(11):
            for k in range(n + 1):
                lhs = qbinom(n, k) * pochhammer_q(k) * pochhammer_q(n - k)
                assert lhs == pochhammer_q(n), (n, k)


class TestStructure:
    def test_symmetry(self):
        for n in range(11):
            for k in range(n + 1):
                for r in range(1, 5):
                    assert qbinom(n, k, r) == qbinom(n, n - k, r), (n, k, r)

    def test_self_reciprocal(self):
        for n in range(11):
            for k in range(n + 1):
                for r in range(1, 5):
                    assert qbinom(n, k, r).is_self_reciprocal(), (n, k, r)

    def test_nonnegative_coefficients(self):
        for n in range(11):
            for k in range(n + 1):
                assert all(c >= 0 for c in qbinom(n, k).coeffs)

    def test_inflation_is_not_unimodal(self):
        # the expansion 1 + q^2 + q^4 dips to zero between spikes
        assert not qbinom(3, 1, 2).is_unimodal()

    def test_non_unimodal_witness_exists_for_step_two(self):
        witnesses = [
            (N, k)
            for N in range(1, 4)
            for k in range(1, 4)
            if not qbinom(N + k, N, 2).is_unimodal()
        ]
        assert witnesses


class TestRecurrences:
    def test_gr1_examples(self):
        assert check_gr1(GaussianParams(4, 2, 1))
        assert check_gr1(GaussianParams(1, 0, 3))
        assert check_gr1(GaussianParams(5, 3, 2))

    def test_gr2_examples(self):
        assert check_gr2(GaussianParams(4, 2, 1))
        assert check_gr2(GaussianParams(1, 1, 1))
        assert check_gr2(GaussianParams(6, 2, 4))

    def test_full_grid(self):
        for top in range(1, 13):
            for bottom in range(-1, top + 2):
                for step in range(1, 5):
                    params = GaussianParams(top, bottom, step)
                    assert check_gr1(params), params
                    assert check_gr2(params), params

    def test_top_zero_rejected(self):
        with pytest.raises(ValueError):
            check_gr1(GaussianParams(0, 0, 1))
        with pytest.raises(ValueError):
            check_gr2(GaussianParams(0, 0, 1))
