import random
from itertools import combinations
from math import comb

import numpy as np
import pytest

from condma.aberration import (
    FastEvaluator,
    KSequence,
    agreement_counts,
    compare_k,
    entry_labels,
    k_direct,
    k_sequence_direct,
    k_sequence_fast,
    q_polynomial,
    q_polynomial_table,
    q_value,
)
from condma.designs import RegularSpec, expand
from condma.modelmat import build_x_block
from helpers import random_valid_spec

FLAGSHIP = RegularSpec(r=4, columns=(1, 2, 4, 8, 15))
ROW6 = RegularSpec(r=4, columns=(1, 8, 2, 4, 7, 11))


def test_entry_labels_order():
    assert entry_labels(5) == [
        "K02(0)", "K02(1)", "K12(0)", "K12(1)", "K22(0)", "K22(1)",
        "K03(0)", "K03(1)", "K13(0)", "K13(1)", "K23(0)", "K23(1)",
    ]
    assert len(entry_labels(9)) == 6 * (9 - 3)


def test_ksequence_validates_length():
    KSequence(16, 5, (0,) * 12)
    with pytest.raises(ValueError):
        KSequence(16, 5, (0,) * 11)


def test_full_factorial_all_zero():
    mat = expand(RegularSpec(r=5, columns=(1, 2, 4, 8, 16)))
    assert set(k_sequence_direct(mat).values) == {0}
    assert set(k_sequence_fast(mat).values) == {0}


def test_flagship_values():
    # frozen from the direct-trace oracle; the counts route predicts the
    # same cells (K22(0) from A7[1]=1, K12(1) from 2*A52[1]=2)
    seq = k_sequence_direct(expand(FLAGSHIP))
    assert seq.alias_counts() == (0, 0, 0, 2, 1, 0, 0, 0, 0, 2, 2, 0)
    assert seq.values == tuple(256 * v for v in (0, 0, 0, 2, 1, 0, 0, 0, 0, 2, 2, 0))
    assert k_direct(expand(FLAGSHIP), 2, 2, 0) == 256
    assert k_direct(expand(FLAGSHIP), 1, 2, 1) == 512


def test_alias_counts_none_when_not_divisible():
    assert KSequence(16, 5, (1,) + (0,) * 11).alias_counts() is None


class TestQPolynomial:
    def test_base_cases(self):
        for c in range(0, 5):
            assert q_polynomial(0, c, 8) == 1
            assert q_polynomial(1, c, 8) == 2 * c - 4

    def test_frozen_value(self):
        # oracle: sum over 2-subsets of sign products with c=2 pluses of 4
        assert q_polynomial(2, 2, 8) == -2

    def test_all_agree_diagonal(self):
        for n in (6, 9, 12):
            for l in range(0, n - 3):
                assert q_polynomial(l, n - 4, n) == comb(n - 4, l)

    def test_matches_subset_product_oracle(self):
        # brute force: signs are +1 at c positions, -1 elsewhere; sum the
        # products over all l-subsets
        for n in range(5, 10):
            m = n - 4
            for c in range(0, m + 1):
                signs = [1] * c + [-1] * (m - c)
                for l in range(0, n - 1):
                    brute = 0
                    for combo in combinations(range(m), l):
                        prod = 1
                        for i in combo:
                            prod *= signs[i]
                        brute += prod
                    assert q_polynomial(l, c, n) == brute

    def test_integrality_high_n(self):
        # the recursion divides by l at every step and raises internally
        # on any remainder; completing the table is the integrality proof
        table = q_polynomial_table(20, 18)
        assert table.dtype == np.int64

    def test_beyond_position_count_is_zero(self):
        # no l-subsets exist past the number of positions
        assert q_polynomial(5, 2, 8) == 0
        assert q_polynomial(7, 0, 9) == 0


class TestAgreements:
    def test_self_agreement(self):
        mat = expand(ROW6)
        counts = agreement_counts(mat)
        assert all(counts[u, u] == 2 for u in range(16))

    def test_complementary_rows(self):
        # tail labels 15 and 9 both touch bit 0, so runs 0 and 1 disagree
        # on every ordinary column
        mat = expand(RegularSpec(r=4, columns=(1, 2, 4, 8, 15, 9)))
        counts = agreement_counts(mat)
        assert np.array_equal(mat[0, 4:], -mat[1, 4:])
        assert counts[0, 1] == 0

    def test_distribution_on_benchmark_row(self):
        # frozen from the row-pair oracle
        counts = agreement_counts(expand(ROW6))
        off = [int(counts[u, w]) for u in range(16) for w in range(16) if u != w]
        hist = {v: off.count(v) for v in sorted(set(off))}
        assert hist == {0: 64, 1: 128, 2: 48}


class TestQValue:
    def test_matches_gram_matrix(self):
        rng = random.Random(41)
        for _ in range(6):
            spec = random_valid_spec(rng, 4, 6)
            mat = expand(spec)
            for s, l in ((0, 2), (1, 2), (2, 2), (1, 3), (2, 4)):
                x = build_x_block(mat, s, l)
                gram = x @ x.T
                for u, w in ((0, 0), (1, 5), (3, 14), (7, 7)):
                    assert q_value(mat, s, l, u, w) == gram[u, w]

    def test_unconditional_diagonal_is_binomial(self):
        mat = expand(ROW6)
        for l in (1, 2, 3, 4):
            assert q_value(mat, 0, l, 2, 2) == comb(ROW6.n - 2, l)

    def test_first_order_truncation_is_wrong(self):
        # dropping the second-order term of the s=1 formula undercounts:
        # the diagonal must equal the class size 4*C(n-3, l-1).  Frozen
        # minimal counterexample: n=6, l=2, u=w=0 (sign products all +1,
        # self-agreement c = n-4)
        mat = expand(ROW6)
        n, l, u = ROW6.n, 2, 0
        first_order_only = (1 * (1 + 1) + 1 * (1 + 1)) * q_polynomial(l - 1, n - 4, n)
        assert first_order_only == 8
        assert q_value(mat, 1, l, u, u) == 12 == 4 * comb(n - 3, l - 1)


class TestRouteAgreement:
    def test_fast_equals_direct_on_benchmarks(self):
        for spec in (FLAGSHIP, ROW6, RegularSpec(r=4, columns=(1, 2, 4, 8, 7, 11, 13))):
            mat = expand(spec)
            assert k_sequence_fast(mat) == k_sequence_direct(mat)

    def test_fast_equals_direct_randomized(self):
        rng = random.Random(47)
        for _ in range(25):
            spec = random_valid_spec(rng, 4, rng.choice((6, 8)))
            mat = expand(spec)
            assert k_sequence_fast(mat) == k_sequence_direct(mat)

    def test_fast_equals_direct_nonregular(self):
        # route agreement does not rely on regularity: shuffle rows of two
        # different fractions stacked together
        rng = np.random.default_rng(13)
        top = expand(RegularSpec(r=3, columns=(1, 2, 4, 7, 5)))
        bottom = expand(RegularSpec(r=3, columns=(1, 2, 4, 3, 6)))
        mat = np.vstack([top, bottom])
        rng.shuffle(mat, axis=0)
        assert k_sequence_fast(mat) == k_sequence_direct(mat)

    def test_evaluator_blocks_compose_sequence(self):
        mat = expand(ROW6)
        ev = FastEvaluator(mat)
        flat = []
        for l in range(2, ROW6.n - 1):
            flat.extend(ev.block(l))
        assert tuple(flat) == ev.sequence().values == k_sequence_fast(mat).values


class TestCompare:
    def test_equal(self):
        a = KSequence(16, 5, (0,) * 12)
        assert compare_k(a, a) == 0

    def test_second_position_decides(self):
        a = KSequence(16, 5, (0, 0, 1) + (0,) * 9)
        b = KSequence(16, 5, (0, 1, 0) + (0,) * 9)
        assert compare_k(a, b) == -1
        assert compare_k(b, a) == 1

    def test_incomparable_sizes_rejected(self):
        a = KSequence(16, 5, (0,) * 12)
        b = KSequence(16, 6, (0,) * 18)
        with pytest.raises(ValueError):
            compare_k(a, b)


class TestInvariances:
    def test_traditional_column_permutation(self):
        rng = random.Random(53)
        spec = RegularSpec(r=4, columns=(1, 2, 4, 8, 5, 6, 11, 15))
        base = k_sequence_fast(expand(spec))
        tail = list(spec.columns[4:])
        for _ in range(5):
            rng.shuffle(tail)
            permuted = RegularSpec(r=4, columns=spec.columns[:4] + tuple(tail))
            assert k_sequence_fast(expand(permuted)) == base

    def test_per_column_sign_flips(self):
        rng = np.random.default_rng(59)
        mat = expand(ROW6)
        base = k_sequence_fast(mat)
        for _ in range(5):
            flips = rng.choice((-1, 1), size=mat.shape[1])
            assert k_sequence_fast(mat * flips) == base

    def test_pair_swap_symmetry(self):
        # swapping the two conditional pairs preserves the sequence; the
        # search relies on this for deduplication
        rng = random.Random(61)
        for _ in range(15):
            spec = random_valid_spec(rng, 4, rng.choice((5, 6, 7)))
            b1, b2, b3, b4 = spec.columns[:4]
            swapped = RegularSpec(r=4, columns=(b3, b4, b1, b2) + spec.columns[4:])
            assert k_sequence_fast(expand(spec)) == k_sequence_fast(expand(swapped))
