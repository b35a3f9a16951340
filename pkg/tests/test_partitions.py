import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lusztig_series.partitions import (
    as_partition,
    pair_partition_count,
    partition_count,
    partition_product,
    partitions_of,
)

FIRST_VALUES = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]


def test_small_values():
    assert [partition_count(n) for n in range(16)] == FIRST_VALUES


@pytest.mark.parametrize("n,expected", [(0, 1), (6, 11), (100, 190569292)])
def test_known_values(n, expected):
    assert partition_count(n) == expected


def test_count_matches_enumeration_up_to_60():
    for n in range(61):
        assert partition_count(n) == sum(1 for _ in partitions_of(n))


def test_enumeration_order_is_reverse_lexicographic():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(0)) == [()]
    sixes = list(partitions_of(6))
    assert sixes[0] == (6,)
    assert sixes[-1] == (1,) * 6
    assert sixes == sorted(sixes, reverse=True)


def test_enumeration_yields_valid_partitions():
    for n in range(1, 25):
        seen = set()
        for mu in partitions_of(n):
            assert sum(mu) == n
            assert all(mu[i] >= mu[i + 1] >= 1 for i in range(len(mu) - 1))
            seen.add(mu)
        assert len(seen) == partition_count(n)


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 2), (2, 5), (3, 10), (4, 20), (5, 36)])
def test_pair_count_small(n, expected):
    assert pair_partition_count(n) == expected


def test_pair_count_is_the_convolution():
    for n in range(301):
        direct = sum(partition_count(m) * partition_count(n - m) for m in range(n + 1))
        assert pair_partition_count(n) == direct


def test_count_strictly_increasing():
    for n in range(1, 300):
        assert partition_count(n + 1) > partition_count(n)


def test_count_below_power_of_two_bound():
    for n in range(1, 301):
        assert partition_count(n) < 2 ** (n // 2 + 1)


@pytest.mark.parametrize(
    "mu,expected", [((), 1), ((4, 3), 15), ((4, 4, 4), 125), ((7,), 15), ((1,) * 9, 1)]
)
def test_partition_product(mu, expected):
    assert partition_product(mu) == expected


def test_partition_product_rejects_nonpositive_parts():
    with pytest.raises(ValueError):
        partition_product((3, 0))


def test_as_partition_validates():
    assert as_partition([5, 4, 4]) == (5, 4, 4)
    with pytest.raises(ValueError):
        as_partition([3, 4])
    with pytest.raises(ValueError):
        as_partition([2, -1])


def test_negative_inputs_rejected():
    with pytest.raises(ValueError):
        partition_count(-1)
    with pytest.raises(ValueError):
        pair_partition_count(-2)
    with pytest.raises(ValueError):
        list(partitions_of(-1))


def test_memo_is_consistent_under_concurrent_readers():
    from concurrent.futures import ThreadPoolExecutor
    from random import Random

    ns = list(range(400, 800))
    Random(7).shuffle(ns)
    with ThreadPoolExecutor(max_workers=8) as pool:
        counts = dict(zip(ns, pool.map(partition_count, ns)))
        pairs = dict(zip(ns[:80], pool.map(pair_partition_count, ns[:80])))
    for n, value in counts.items():
        assert value == partition_count(n)
    for n, value in pairs.items():
        assert value == pair_partition_count(n)


@given(st.integers(min_value=0, max_value=120), st.integers(min_value=0, max_value=120))
@settings(max_examples=60, deadline=None)
def test_pair_count_symmetric_recurrence(m, n):
    # p2 is the self-convolution of p, so p2(m+n) >= p(m+anything) terms;
    # in particular p2 is strictly increasing and dominated by (n+1) p(n)^2.
    total = m + n
    assert pair_partition_count(total) >= partition_count(m) * partition_count(n)
    assert pair_partition_count(total) <= (total + 1) * partition_count(total) ** 2
