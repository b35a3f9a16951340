"""The maximal partition-product function beta and its relatives.

beta(n) is the maximum of prod_j p(mu_j) over partitions mu of n.  It has a
closed form by residue of n mod 4 with a small-n lookup; the brute-force
enumeration lives in a separate operation (`beta_oracle`) so the two routes
never share code.  beta_prime(n) restricts the maximum to splits containing
an odd part.  All ratios are exact `fractions.Fraction`s; floating point is
banned throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SizeGuardError
from .partitions import Partition, partition_product, partitions_of

# beta(0..7) = p(0..7); beta(0)=1 by the empty-product convention.
_SMALL = (1, 1, 2, 3, 5, 7, 11, 15)

# residue of n mod 4 -> (coefficient, exponent offset, fixed large parts):
#   beta(n) = coefficient * 5^((n-offset)/4), maximiser = (large parts, 4^k).
CLOSED_FORM = {
    0: (1, 0, ()),
    1: (7, 5, (5,)),
    2: (11, 6, (6,)),
    3: (77, 11, (6, 5)),
}

# Largest n whose partitions the brute-force maximisers enumerate by default.
ORACLE_GUARD = 55

_BETA_PRIME_SMALL = {2: 1, 4: 3, 6: 9, 8: 21, 12: 105}


@dataclass(frozen=True)
class BetaResult:
    """Exact maximum together with the complete set of maximising partitions."""

    value: int
    maximizers: frozenset[Partition]

    def largest_witness(self) -> Partition:
        """Reverse-lexicographically largest maximiser (canonical single witness)."""
        return max(self.maximizers)


def beta(n: int) -> int:
    """Closed form for beta(n); beta(0)=1."""
    if n < 0:
        raise ValueError(f"beta expects n >= 0, got {n!r}")
    if n < 8:
        return _SMALL[n]
    coeff, offset, _ = CLOSED_FORM[n % 4]
    return coeff * 5 ** ((n - offset) // 4)


def beta_maximizers(n: int) -> BetaResult:
    """beta(n) with every maximising partition.

    The maximiser is unique for every n except n=7, where both (7) and (4,3)
    attain 15.  For n >= 8 the unique maximiser is (4,...,4) padded with a
    5 and/or 6 according to n mod 4.
    """
    if n < 1:
        raise ValueError(f"beta_maximizers expects n >= 1, got {n!r}")
    if n == 7:
        return BetaResult(15, frozenset({(7,), (4, 3)}))
    if n < 7:
        return BetaResult(_SMALL[n], frozenset({(n,)}))
    coeff, offset, head = CLOSED_FORM[n % 4]
    mu = head + (4,) * ((n - offset) // 4)
    return BetaResult(coeff * 5 ** ((n - offset) // 4), frozenset({mu}))


def beta_oracle(n: int, *, guard: int = ORACLE_GUARD) -> BetaResult:
    """Independent brute force: scan every partition of n for the largest product."""
    if n < 0:
        raise ValueError(f"beta_oracle expects n >= 0, got {n!r}")
    if n > guard:
        raise SizeGuardError(f"beta_oracle enumeration guard is {guard}, got n={n}")
    best = 0
    argmax: list[Partition] = []
    for mu in partitions_of(n):
        value = partition_product(mu)
        if value > best:
            best = value
            argmax = [mu]
        elif value == best:
            argmax.append(mu)
    return BetaResult(best, frozenset(argmax))


def beta_prime(n: int) -> int:
    """Maximum of beta(a)*beta(n-a) over odd a, for even n >= 2.

    Equals beta(5)*beta(n-5) for even n > 6 except n in {8, 12}; the handful
    of small even values are fixed directly.
    """
    if n < 2 or n % 2:
        raise ValueError(f"beta_prime expects an even n >= 2, got {n!r}")
    if n in _BETA_PRIME_SMALL:
        return _BETA_PRIME_SMALL[n]
    return beta(5) * beta(n - 5)


def beta_ratio(k: int, n: int) -> Fraction:
    """Exact ratio beta(k+n) / (beta(k)*beta(n)) for positive k, n."""
    if k < 1 or n < 1:
        raise ValueError(f"beta_ratio expects k, n >= 1, got {(k, n)!r}")
    return Fraction(beta(k + n), beta(k) * beta(n))
