import random
from itertools import combinations

import pytest

from condma import gf2


def test_vec_add():
    assert gf2.vec_add(5, 5) == 0
    assert gf2.vec_add(1, 2) == 3
    assert gf2.vec_add(12, 7) == 11


def test_rank():
    assert gf2.rank([1, 2, 4, 8]) == 4
    assert gf2.rank([1, 2, 3]) == 2
    # hand elimination: 15 = 1^2^4^8 adds nothing
    assert gf2.rank([1, 2, 4, 8, 15]) == 4
    assert gf2.rank([]) == 0
    assert gf2.rank([0, 0]) == 0


def test_span_and_independence():
    assert gf2.span_set([1, 2]) == {0, 1, 2, 3}
    assert gf2.is_independent([1, 2, 4])
    assert not gf2.is_independent([1, 2, 3])


def test_subset_sum_count_examples():
    # 2^8^15 = 5, the single triple misses target 0
    assert gf2.subset_sum_count([2, 8, 15], [0], 3) == 0
    assert gf2.subset_sum_count([15], [5, 7, 13, 15], 1) == 1
    # empty-sum convention
    assert gf2.subset_sum_count([3, 9], [5], 0) == 0
    assert gf2.subset_sum_count([3, 9], [0], 0) == 1
    assert gf2.subset_sum_count([3], [0], -1) == 0
    assert gf2.subset_sum_count([3], [0], 2) == 0


def test_kernel_size_identity():
    # sum over l of the count hitting {0} is the kernel size 2^(m - rank)
    rng = random.Random(11)
    for _ in range(20):
        m = rng.randrange(1, 11)
        pool = [rng.randrange(1, 16) for _ in range(m)]
        total = sum(gf2.subset_sum_count(pool, [0], l) for l in range(m + 1))
        assert total == 1 << (m - gf2.rank(pool))


def test_mitm_matches_enumeration():
    # force the meet-in-the-middle path and compare with direct counting
    rng = random.Random(7)
    pool = [rng.randrange(1, 32) for _ in range(23)]
    targets = [0, 5, 17]
    for size in (0, 1, 2, 3, 21, 23):
        direct = 0
        for combo in combinations(pool, size):
            acc = 0
            for v in combo:
                acc ^= v
            direct += acc in targets
        assert gf2.subset_sum_count(pool, targets, size) == direct


def test_subset_sum_table():
    pool = [1, 2, 3, 9, 12]
    table = gf2.subset_sum_table(pool, 4)
    for k in range(len(pool) + 1):
        for v in range(16):
            assert table[k][v] == gf2.subset_sum_count(pool, [v], k)


@pytest.mark.parametrize("seed", range(4))
def test_rank_is_permutation_invariant(seed):
    rng = random.Random(seed)
    vectors = [rng.randrange(16) for _ in range(8)]
    base = gf2.rank(vectors)
    for _ in range(5):
        rng.shuffle(vectors)
        assert gf2.rank(vectors) == base
