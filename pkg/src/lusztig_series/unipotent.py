"""Unipotent-character counts for the classical families.

alpha(n), alpha_plus(n) and alpha_minus(n) count the unipotent characters of
the rank-n symplectic group and of the even orthogonal spin groups of plus
and minus type; nu_linear(n) = p(n) covers the linear and unitary groups.
All counts are q-independent.

The plus-type formula carries fractional coefficients; it is evaluated as
4*alpha_plus(n) in integers with a hard divisibility assertion, never by
rounding.  At n = 0 the displayed formula would give 2, so both signed
variants are pinned to 1 (the trivial group has one unipotent character).
"""

from __future__ import annotations

from enum import Enum
from functools import cache

from .partitions import pair_partition_count, partition_count


class AlphaKind(str, Enum):
    """Selector for the three signed unipotent-count variants."""

    SYMPLECTIC = "symplectic"
    PLUS = "plus"
    MINUS = "minus"


@cache
def alpha(n: int) -> int:
    """Unipotent characters of the rank-n symplectic group:
    sum over j >= 0 with j^2+j <= n of p2(n - j^2 - j)."""
    if n < 0:
        raise ValueError(f"alpha expects n >= 0, got {n!r}")
    total = 0
    j = 0
    while j * j + j <= n:
        total += pair_partition_count(n - j * j - j)
        j += 1
    return total


@cache
def alpha_plus(n: int) -> int:
    """Unipotent characters of the plus-type even orthogonal group of rank n:
    p2(n)/2 + (3/4)(1+(-1)^n) p(n/2) + sum over even j > 1 of p2(n - j^2)."""
    if n < 0:
        raise ValueError(f"alpha_plus expects n >= 0, got {n!r}")
    if n == 0:
        return 1
    quadruple = 2 * pair_partition_count(n)
    if n % 2 == 0:
        quadruple += 6 * partition_count(n // 2)
    j = 2
    while j * j <= n:
        quadruple += 4 * pair_partition_count(n - j * j)
        j += 2
    if quadruple % 4:
        raise AssertionError(f"alpha_plus({n}): 4*value = {quadruple} is not divisible by 4")
    return quadruple // 4


@cache
def alpha_minus(n: int) -> int:
    """Minus-type count: equals alpha_plus(n) for odd n, and
    alpha_plus(n) - 2 p(n/2) for even n >= 2."""
    if n < 0:
        raise ValueError(f"alpha_minus expects n >= 0, got {n!r}")
    if n == 0:
        return 1
    if n % 2:
        return alpha_plus(n)
    return alpha_plus(n) - 2 * partition_count(n // 2)


_DISPATCH = {
    AlphaKind.SYMPLECTIC: alpha,
    AlphaKind.PLUS: alpha_plus,
    AlphaKind.MINUS: alpha_minus,
}


def alpha_value(kind: AlphaKind, n: int) -> int:
    """Dispatch alpha / alpha_plus / alpha_minus on the kind tag."""
    return _DISPATCH[AlphaKind(kind)](n)


def nu_linear(n: int) -> int:
    """Unipotent characters of the rank-n linear or unitary group: p(n)."""
    if n < 0:
        raise ValueError(f"nu_linear expects n >= 0, got {n!r}")
    return partition_count(n)


def alpha_upper_estimate(n: int) -> int:
    """Rough closed upper bound (n^2 - 1) * 2^(floor(n/2) + 2) for alpha(n), n >= 2."""
    if n < 2:
        raise ValueError(f"alpha_upper_estimate expects n >= 2, got {n!r}")
    return (n * n - 1) * 2 ** (n // 2 + 2)
