"""Sharp closed-form bound functions and the pure product maximisations.

Seven bound kinds cover the classical families: ``f``/``f_plus``/``f_minus``
(even characteristic, valid for n >= 18) and ``tau``/``theta``/
``theta_plus``/``theta_minus`` (odd characteristic, valid for n >= 32).
Each is a coefficient times a power of 5 chosen by n mod 4; below its
threshold the true maximum is computed by direct scan (`small_n_max`).

Constant comparisons are carried out on exact 4th powers so no irrational
fourth root of 5 is ever evaluated; decimals are display-only renderings.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt

from .beta import beta
from .errors import BelowThresholdError
from .unipotent import AlphaKind, alpha, alpha_minus, alpha_plus, alpha_value


class BoundKind(str, Enum):
    F = "f"
    F_PLUS = "f_plus"
    F_MINUS = "f_minus"
    TAU = "tau"
    THETA = "theta"
    THETA_PLUS = "theta_plus"
    THETA_MINUS = "theta_minus"


class GammaKind(str, Enum):
    """Two-slot product selectors.  Slot order is semantic for the
    asymmetric kinds: ``a_plus`` is alpha(a)*alpha_plus(b) and
    ``plus_minus`` is alpha_minus(a)*alpha_plus(b)."""

    AA = "aa"
    A_PLUS = "a_plus"
    PLUS_PLUS = "plusplus"
    PLUS_MINUS = "plus_minus"


@dataclass(frozen=True)
class MaxResult:
    """Exact maximum plus the complete argmax witness set."""

    value: int
    witnesses: tuple


class Un5Column(str, Enum):
    A = "A"
    C_EVEN = "C_even"
    D_EVEN = "D_even"
    B_ODD = "B_odd"
    C_ODD = "C_odd"
    D_ODD = "D_odd"


@dataclass(frozen=True)
class Un5Constant:
    """Supremum constant c with bound(n) <= c * 5^(n/4): exact 4th power
    plus a truncated 4-place decimal rendering."""

    column: Un5Column
    c_fourth: Fraction
    c_decimal: str


# kind -> {n mod 4: (coefficient, exponent offset)}; value = coeff * 5^((n-offset)/4)
_COEFFS: dict[BoundKind, dict[int, tuple[int, int]]] = {
    BoundKind.F: {0: (8988, 16), 1: (66396, 21), 2: (4020, 14), 3: (6036, 15)},
    BoundKind.F_PLUS: {0: (4110, 16), 1: (6007, 17), 2: (1836, 14), 3: (2730, 15)},
    BoundKind.F_MINUS: {0: (4066, 16), 1: (6007, 17), 2: (1806, 14), 3: (2730, 15)},
    BoundKind.TAU: {0: (16160400, 28), 1: (24264720, 29), 2: (36433296, 30), 3: (54251568, 31)},
    BoundKind.THETA: {0: (36940680, 32), 1: (11082096, 29), 2: (16522200, 30), 3: (24807960, 31)},
    BoundKind.THETA_PLUS: {0: (16892100, 32), 1: (5012280, 29), 2: (7545960, 30), 3: (11220300, 31)},
    BoundKind.THETA_MINUS: {0: (16711260, 32), 1: (5012280, 29), 2: (7465176, 30), 3: (11220300, 31)},
}

_F_KINDS = (BoundKind.F, BoundKind.F_PLUS, BoundKind.F_MINUS)

# bound kind -> the product family whose maximum it is
_SMALL_DISPATCH: dict[BoundKind, AlphaKind | GammaKind] = {
    BoundKind.F: AlphaKind.SYMPLECTIC,
    BoundKind.F_PLUS: AlphaKind.PLUS,
    BoundKind.F_MINUS: AlphaKind.MINUS,
    BoundKind.TAU: GammaKind.AA,
    BoundKind.THETA: GammaKind.A_PLUS,
    BoundKind.THETA_PLUS: GammaKind.PLUS_PLUS,
    BoundKind.THETA_MINUS: GammaKind.PLUS_MINUS,
}

# gamma kind -> (first slot, second slot, symmetric?)
_GAMMA_SLOTS = {
    GammaKind.AA: (alpha, alpha, True),
    GammaKind.A_PLUS: (alpha, alpha_plus, False),
    GammaKind.PLUS_PLUS: (alpha_plus, alpha_plus, True),
    GammaKind.PLUS_MINUS: (alpha_minus, alpha_plus, False),
}


def threshold(kind: BoundKind) -> int:
    """Smallest n for which the closed form of the kind is valid."""
    return 18 if BoundKind(kind) in _F_KINDS else 32


def bound_value(kind: BoundKind, n: int) -> int:
    """Closed-form bound at rank n; refuses n below the kind's threshold."""
    kind = BoundKind(kind)
    lo = threshold(kind)
    if n < lo:
        raise BelowThresholdError(
            f"bound_value({kind.value}) is defined for n >= {lo}, got {n};"
            f" use small_n_max for smaller ranks"
        )
    coeff, offset = _COEFFS[kind][n % 4]
    return coeff * 5 ** ((n - offset) // 4)


def max_alpha_beta(kind: AlphaKind, n: int) -> MaxResult:
    """Exact maximum of alpha_variant(a) * beta(n-a) over 0 <= a <= n,
    with the complete set of argmax positions a."""
    if n < 1:
        raise ValueError(f"max_alpha_beta expects n >= 1, got {n!r}")
    fn = lambda a: alpha_value(kind, a)  # noqa: E731
    best = -1
    argmax: list[int] = []
    for a in range(n + 1):
        value = fn(a) * beta(n - a)
        if value > best:
            best, argmax = value, [a]
        elif value == best:
            argmax.append(a)
    return MaxResult(best, tuple(argmax))


def _scan_gamma(kind: GammaKind, n: int, *, require_eq: bool) -> MaxResult:
    first, second, symmetric = _GAMMA_SLOTS[GammaKind(kind)]
    best = -1
    argmax: list[tuple[int, int]] = []
    for a in range(n + 1):
        fa = first(a)
        b_range = (n - a,) if require_eq else range(n - a + 1)
        for b in b_range:
            value = fa * second(b) * beta(n - a - b)
            if value > best:
                best, argmax = value, [(a, b)]
            elif value == best:
                argmax.append((a, b))
    if symmetric:
        pairs = sorted({(max(a, b), min(a, b)) for a, b in argmax}, reverse=True)
    else:
        pairs = sorted(set(argmax), reverse=True)
    return MaxResult(best, tuple(pairs))


def max_gamma(kind: GammaKind, n: int) -> MaxResult:
    """Exact maximum of slot1(a) * slot2(b) * beta(n-a-b) over a, b >= 0 with
    a+b <= n.  Witness pairs are normalised to a >= b for the symmetric kinds
    and kept in semantic slot order for the asymmetric ones."""
    if n < 0:
        raise ValueError(f"max_gamma expects n >= 0, got {n!r}")
    return _scan_gamma(kind, n, require_eq=False)


def max_gamma_eq(kind: GammaKind, n: int) -> MaxResult:
    """Same maximum restricted to a + b = n (no beta tail)."""
    if n < 0:
        raise ValueError(f"max_gamma_eq expects n >= 0, got {n!r}")
    return _scan_gamma(kind, n, require_eq=True)


def small_n_max(kind: BoundKind, n: int) -> MaxResult:
    """Exact maximum of the product family behind the bound kind, for ranks
    below the closed form's threshold."""
    kind = BoundKind(kind)
    if not 1 <= n < threshold(kind):
        raise ValueError(
            f"small_n_max({kind.value}) expects 1 <= n < {threshold(kind)}, got {n}"
        )
    selector = _SMALL_DISPATCH[kind]
    if isinstance(selector, AlphaKind):
        return max_alpha_beta(selector, n)
    return max_gamma(selector, n)


def piecewise_max(kind: BoundKind, n: int) -> int:
    """The sharp maximum at any rank n >= 1: brute-force scan below the
    kind's threshold, closed form at or above it."""
    kind = BoundKind(kind)
    if n < threshold(kind):
        return small_n_max(kind, n).value
    return bound_value(kind, n)


# columns of the headline constant table -> contributing coefficient blocks
_UN5_SOURCES: dict[Un5Column, tuple[dict[int, tuple[int, int]], ...]] = {
    Un5Column.A: ({0: (1, 0), 1: (7, 5), 2: (11, 6), 3: (77, 11)},),
    Un5Column.C_EVEN: (_COEFFS[BoundKind.F],),
    Un5Column.D_EVEN: (_COEFFS[BoundKind.F_PLUS], _COEFFS[BoundKind.F_MINUS]),
    Un5Column.B_ODD: (_COEFFS[BoundKind.THETA],),
    Un5Column.C_ODD: (_COEFFS[BoundKind.TAU],),
    Un5Column.D_ODD: (_COEFFS[BoundKind.THETA_PLUS], _COEFFS[BoundKind.THETA_MINUS]),
}


def _floor_fourth_root(x: int) -> int:
    root = isqrt(isqrt(x))
    while (root + 1) ** 4 <= x:
        root += 1
    while root**4 > x:
        root -= 1
    return root


def un5_constant(column: Un5Column) -> Un5Constant:
    """Exact supremum c of bound(n)/5^(n/4) over the column's bound family.

    Within a residue class the ratio is the constant coeff/5^(offset/4), so
    c^4 = max over contributing residues of coeff^4 / 5^offset, an exact
    rational.  The decimal is c truncated to 4 places.
    """
    column = Un5Column(column)
    c4 = max(
        Fraction(coeff**4, 5**offset)
        for block in _UN5_SOURCES[column]
        for coeff, offset in block.values()
    )
    scaled = _floor_fourth_root(c4.numerator * 10**16 // c4.denominator)
    return Un5Constant(column, c4, f"{scaled // 10**4}.{scaled % 10**4:04d}")
