import math

from charcomb.combinat import (beta_of_partition, beta_rank, beta_reduce,
                               conjugate_partition, dominates, hook_lengths,
                               n_stat, partition_of_beta, partitions)

PARTITION_COUNTS = {0: 1, 1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15,
                    8: 22, 9: 30, 10: 42}


def test_partition_counts():
    for n, p in PARTITION_COUNTS.items():
        assert len(partitions(n)) == p


def test_partitions_are_sorted_weakly_decreasing():
    for lam in partitions(7):
        assert list(lam) == sorted(lam, reverse=True)
        assert sum(lam) == 7


def test_beta_round_trip():
    for lam in partitions(6):
        b = beta_of_partition(lam)
        assert partition_of_beta(b) == lam
        assert beta_rank(b) == 6


def test_beta_reduce_strips_initial_run():
    assert beta_reduce((0, 1, 2, 4)) == (1,)
    assert beta_reduce((0, 1, 2)) == ()


def test_dominance_basics():
    assert dominates((4,), (2, 2))
    assert dominates((2, 2), (2, 1, 1))
    assert not dominates((2, 2), (3, 1))
    assert dominates((3, 1), (2, 2))
    assert dominates((2, 1), (2, 1))


def test_conjugate_involution():
    for lam in partitions(8):
        assert conjugate_partition(conjugate_partition(lam)) == lam


def test_hook_lengths_product_gives_syt_count():
    # f^(2,2) = 2, f^(3,2) = 5 via n!/prod(hooks)
    for lam, f in (((2, 2), 2), ((3, 2), 5), ((4, 4), 14)):
        hooks = [h for row in hook_lengths(lam) for h in row]
        n = sum(lam)
        prod = math.prod(hooks)
        assert math.factorial(n) // prod == f


def test_n_stat_values():
    assert n_stat((3,)) == 0
    assert n_stat((1, 1, 1)) == 3
    assert n_stat((2, 1)) == 1
