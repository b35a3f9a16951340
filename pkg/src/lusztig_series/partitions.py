"""Exact integer-partition arithmetic: p(n), the pair count p2(n), partition
enumeration, and partition products.

Everything here is plain Python big-int arithmetic; no value is ever rounded.
The memo tables grow monotonically and entries, once written, never change,
so results are independent of call order.  A module lock serialises table
extension; readers only ever see completed entries.
"""

from __future__ import annotations

import threading
from typing import Iterable, Iterator

Partition = tuple[int, ...]

_lock = threading.Lock()
_p_table: list[int] = [1]    # p(0), p(1), ...
_p2_table: list[int] = [1]   # p2(0), p2(1), ...


def _check_nonneg(n: int, what: str) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"{what} expects a nonnegative integer, got {n!r}")


def partition_count(n: int) -> int:
    """Number of partitions p(n), via Euler's pentagonal-number recurrence.

    p(m) = sum_{k>=1} (-1)^(k+1) [ p(m - k(3k-1)/2) + p(m - k(3k+1)/2) ],
    memoized, O(sqrt(m)) table lookups per new entry.
    """
    _check_nonneg(n, "partition_count")
    if n >= len(_p_table):
        with _lock:
            while len(_p_table) <= n:
                m = len(_p_table)
                total = 0
                k = 1
                while True:
                    g = k * (3 * k - 1) // 2
                    if g > m:
                        break
                    sign = 1 if k % 2 else -1
                    total += sign * _p_table[m - g]
                    g += k  # second pentagonal number k(3k+1)/2
                    if g <= m:
                        total += sign * _p_table[m - g]
                    k += 1
                _p_table.append(total)
    return _p_table[n]


def pair_partition_count(n: int) -> int:
    """Number p2(n) of ordered pairs of partitions of total weight n.

    Exact convolution p2(n) = sum_{m=0}^{n} p(m) p(n-m), memoized.
    """
    _check_nonneg(n, "pair_partition_count")
    if n >= len(_p2_table):
        partition_count(n)  # make sure p(0..n) is available
        with _lock:
            while len(_p2_table) <= n:
                m = len(_p2_table)
                half = sum(_p_table[i] * _p_table[m - i] for i in range(m // 2 + 1))
                total = 2 * half - (_p_table[m // 2] ** 2 if m % 2 == 0 else 0)
                _p2_table.append(total)
    return _p2_table[n]


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once as a weakly decreasing tuple.

    Order is reverse-lexicographic: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    Streams lazily; nothing is materialised.  Practical up to n around 60,
    where the number of partitions reaches about 10^6.
    """
    _check_nonneg(n, "partitions_of")
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        parts[-1] -= 1
        rem = ones + 1
        largest = parts[-1]
        while rem > largest:
            parts.append(largest)
            rem -= largest
        parts.append(rem)


def partition_product(mu: Iterable[int]) -> int:
    """Product of partition counts over the parts of mu; empty product is 1."""
    result = 1
    for part in mu:
        if part < 1:
            raise ValueError(f"partition parts must be positive, got {part!r}")
        result *= partition_count(part)
    return result


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and freeze a weakly decreasing sequence of positive parts."""
    mu = tuple(parts)
    for i, part in enumerate(mu):
        if part < 1:
            raise ValueError(f"partition parts must be positive, got {part!r}")
        if i and mu[i - 1] < part:
            raise ValueError(f"parts must be weakly decreasing, got {mu!r}")
    return mu


def weight(mu: Iterable[int]) -> int:
    """Total weight (sum of parts) of a partition."""
    return sum(mu)
