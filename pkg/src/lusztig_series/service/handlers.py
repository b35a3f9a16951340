"""Service handlers: validate request parameters, call the core package,
and assemble response models.  The FastAPI routes and the CLI both dispatch
here, so the two surfaces cannot drift apart.
"""

from __future__ import annotations

from ..beta import CLOSED_FORM, beta, beta_prime
from ..bounds import BoundKind, GammaKind, max_gamma, piecewise_max
from ..errors import UsageError
from ..partitions import pair_partition_count, partition_count
from ..shapes import (
    Family,
    GroupSpec,
    ShapeClass,
    attainment_threshold,
    max_series_size,
)
from ..unipotent import alpha, alpha_minus, alpha_plus
from ..verify import SUITES, run_suite
from .models import (
    GammaCell,
    MaxResponse,
    ReportEntryModel,
    ShapeModel,
    Table1Row,
    Table2Row,
    Table3Row,
    Table4Row,
    TableResponse,
    ThresholdModel,
    ThresholdResponse,
    ValueResponse,
)

_FAMILY_TOKENS = {
    "GL": Family.LINEAR,
    "U": Family.UNITARY,
    "B": Family.B,
    "C": Family.C,
    "D+": Family.D_PLUS,
    "DPLUS": Family.D_PLUS,
    "D-": Family.D_MINUS,
    "DMINUS": Family.D_MINUS,
}

_VALUE_FNS = {
    "p": (partition_count, "n >= 0"),
    "p2": (pair_partition_count, "n >= 0"),
    "beta": (beta, "n >= 0"),
    "beta_prime": (beta_prime, "even n >= 2"),
    "alpha": (alpha, "n >= 0"),
    "alpha_plus": (alpha_plus, "n >= 0"),
    "alpha_minus": (alpha_minus, "n >= 0"),
}
for _kind in BoundKind:
    _VALUE_FNS[_kind.value] = (
        (lambda n, k=_kind: piecewise_max(k, n)),
        "n >= 1",
    )

VALUE_FN_NAMES = tuple(sorted(_VALUE_FNS))

_TABLE2_RANGE = (1, 43)
_TABLE34_RANGE = (1, 33)
_TABLE2_MAX = 500
_TABLE34_MAX = 60

# column -> (slot symbols, gamma kind)
_T3_COLUMNS = {"aa": (("α", "α"), GammaKind.AA), "a_plus": (("α", "α⁺"), GammaKind.A_PLUS)}
_T4_COLUMNS = {
    "plusplus": (("α⁺", "α⁺"), GammaKind.PLUS_PLUS),
    "plus_minus": (("α⁻", "α⁺"), GammaKind.PLUS_MINUS),
}


def parse_family(token: str) -> Family:
    try:
        return Family(token)
    except ValueError:
        pass
    family = _FAMILY_TOKENS.get(token.upper())
    if family is None:
        raise UsageError(
            f"unknown family {token!r}; choose from GL, U, B, C, D+, D-"
        )
    return family


def _parse_parity(family: Family, parity: str | None) -> str:
    if family in (Family.LINEAR, Family.UNITARY):
        return "odd"  # q-independent; accept and ignore any token
    if parity not in ("even", "odd"):
        raise UsageError(
            f"family {family.value} needs parity 'even' or 'odd', got {parity!r}"
        )
    return parity


def _display_parity(family: Family, parity: str) -> str:
    return "any" if family in (Family.LINEAR, Family.UNITARY) else parity


def value_response(fn: str, n: int) -> ValueResponse:
    if fn not in _VALUE_FNS:
        raise UsageError(f"unknown value function {fn!r}; choose from {sorted(_VALUE_FNS)}")
    compute, valid = _VALUE_FNS[fn]
    try:
        value = compute(n)
    except ValueError as exc:
        raise UsageError(f"{fn}({n}): {exc} (valid range: {valid})") from exc
    return ValueResponse(fn=fn, n=n, value=str(value))


def _beta_formula_text(residue: int) -> str:
    coeff, offset, _ = CLOSED_FORM[residue]
    if coeff == 1:
        return "5^{n/4}"
    return f"{coeff}·5^{{(n-{offset})/4}}"


def _pi_pattern_text(residue: int) -> str:
    _, offset, head = CLOSED_FORM[residue]
    if not head:
        return "(4^{n/4})"
    tail = ",".join(str(part) for part in sorted(head))
    return f"(4^{{(n-{offset})/4}},{tail})"


def _gamma_cell(symbols: tuple[str, str], kind: GammaKind, n: int) -> GammaCell:
    result = max_gamma(kind, n)
    exprs = []
    for a, b in result.witnesses:
        expr = f"{symbols[0]}({a}){symbols[1]}({b})"
        c = n - a - b
        if c:
            expr += f"β({c})"
        exprs.append(expr)
    display = "=".join(exprs) + f"={result.value}"
    return GammaCell(value=str(result.value), pairs=list(result.witnesses), display=display)


def _row_window(which: int, rng: tuple[int, int] | None) -> range:
    default, hard_max = (
        (_TABLE2_RANGE, _TABLE2_MAX) if which == 2 else (_TABLE34_RANGE, _TABLE34_MAX)
    )
    if rng is None:
        lo, hi = default
    else:
        lo, hi = rng
    if not 1 <= lo <= hi <= hard_max:
        raise UsageError(
            f"table {which} accepts 1 <= lo <= hi <= {hard_max}, got {lo}..{hi}"
        )
    return range(lo, hi + 1)


def table_response(which: int, rng: tuple[int, int] | None = None) -> TableResponse:
    if which == 1:
        rows = [
            Table1Row(residue=r, pi=_pi_pattern_text(r), beta=_beta_formula_text(r))
            for r in range(4)
        ]
        return TableResponse(table=1, rows=rows)
    if which == 2:
        rows2 = [
            Table2Row(
                n=n,
                beta=str(beta(n)),
                alpha=str(alpha(n)),
                alpha_plus=str(alpha_plus(n)),
                alpha_minus=str(alpha_minus(n)),
            )
            for n in _row_window(2, rng)
        ]
        return TableResponse(table=2, rows=rows2)
    if which == 3:
        rows3 = [
            Table3Row(
                n=n,
                aa=_gamma_cell(*_T3_COLUMNS["aa"], n),
                a_plus=_gamma_cell(*_T3_COLUMNS["a_plus"], n),
            )
            for n in _row_window(3, rng)
        ]
        return TableResponse(table=3, rows=rows3)
    if which == 4:
        rows4 = [
            Table4Row(
                n=n,
                plusplus=_gamma_cell(*_T4_COLUMNS["plusplus"], n),
                plus_minus=_gamma_cell(*_T4_COLUMNS["plus_minus"], n),
            )
            for n in _row_window(4, rng)
        ]
        return TableResponse(table=4, rows=rows4)
    raise UsageError(f"unknown table {which!r}; choose 1, 2, 3 or 4")


def _threshold_models(spec: GroupSpec) -> list[ThresholdModel]:
    models = []
    for shape_class in ShapeClass:
        t = attainment_threshold(spec, shape_class)
        models.append(
            ThresholdModel(
                shape_class=shape_class.value,
                inequality=f"q {t.relation} {t.bound}",
                min_q=t.min_q,
                side_condition=t.side_condition,
            )
        )
    return models


def max_response(family: str, parity: str | None, n: int, witnesses: bool) -> MaxResponse:
    fam = parse_family(family)
    par = _parse_parity(fam, parity)
    if n < 1:
        raise UsageError(f"rank must be >= 1, got {n}")
    try:
        spec = GroupSpec(fam, n, par)
        result = max_series_size(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    witness_models = [ShapeModel.from_shape(w) for w in result.witnesses] if witnesses else None
    return MaxResponse(
        family=fam.value,
        parity=_display_parity(fam, spec.q_parity),
        n=n,
        value=str(result.value),
        witnesses=witness_models,
        thresholds=_threshold_models(spec),
    )


def threshold_response(family: str, parity: str | None, n: int) -> ThresholdResponse:
    fam = parse_family(family)
    par = _parse_parity(fam, parity)
    if n < 1:
        raise UsageError(f"rank must be >= 1, got {n}")
    spec = GroupSpec(fam, n, par)
    return ThresholdResponse(
        family=fam.value,
        parity=_display_parity(fam, spec.q_parity),
        n=n,
        thresholds=_threshold_models(spec),
    )


def verify_entries(suite: str) -> list[ReportEntryModel]:
    if suite not in SUITES + ("all",):
        raise UsageError(f"unknown suite {suite!r}; choose from {SUITES + ('all',)}")
    return [ReportEntryModel(**entry.to_dict()) for entry in run_suite(suite)]
