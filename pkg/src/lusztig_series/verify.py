"""Verification suites: regenerate every golden claim and diff.

Four suites (``tables``, ``lemmas``, ``bounds``, ``constants``) produce
sorted lists of report entries.  An entry is ``verified`` when regeneration
matches the transcription, ``failed`` otherwise, and ``flagged`` for the two
documented discrepancies, which never fail a run: ``lemma_ei2a.n2`` and
``theorem_un5.D_even``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from . import golden
from .beta import (
    CLOSED_FORM,
    beta,
    beta_maximizers,
    beta_oracle,
    beta_prime,
    beta_ratio,
)
from .bounds import (
    BoundKind,
    GammaKind,
    Un5Column,
    bound_value,
    max_alpha_beta,
    max_gamma,
    max_gamma_eq,
    small_n_max,
    threshold,
    un5_constant,
)
from .partitions import pair_partition_count, partition_count
from .shapes import MINUS, Family, GroupSpec, max_series_size, minus_cap, minus_cap_oracle
from .unipotent import (
    AlphaKind,
    alpha,
    alpha_minus,
    alpha_plus,
    alpha_upper_estimate,
    alpha_value,
)

SUITES = ("tables", "lemmas", "bounds", "constants")

_ALPHA_OF_BOUND = {
    BoundKind.F: AlphaKind.SYMPLECTIC,
    BoundKind.F_PLUS: AlphaKind.PLUS,
    BoundKind.F_MINUS: AlphaKind.MINUS,
}
_GAMMA_OF_BOUND = {
    BoundKind.TAU: GammaKind.AA,
    BoundKind.THETA: GammaKind.A_PLUS,
    BoundKind.THETA_PLUS: GammaKind.PLUS_PLUS,
    BoundKind.THETA_MINUS: GammaKind.PLUS_MINUS,
}
_SYMMETRIC_COLUMNS = ("aa", "plusplus")


@dataclass(frozen=True)
class ReportEntry:
    claim_id: str
    status: str  # verified | failed | flagged
    expected: str
    actual: str
    location: str

    def to_dict(self) -> dict:
        return asdict(self)


def _entry(claim_id: str, ok: bool, expected, actual, location: str) -> ReportEntry:
    return ReportEntry(claim_id, "verified" if ok else "failed",
                       str(expected), str(actual), location)


def _range_entry(claim_id: str, claim: str, counterexample: str | None, location: str) -> ReportEntry:
    if counterexample is None:
        return ReportEntry(claim_id, "verified", claim, "holds", location)
    return ReportEntry(claim_id, "failed", claim, counterexample, location)


def _located(claim_id: str, base: str) -> str:
    note = golden.CORRECTED_CELLS.get(claim_id)
    return f"{base}; transcription corrected ({note})" if note else base


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def _verify_table1() -> list[ReportEntry]:
    entries = []
    for residue in range(4):
        expected = golden.TABLE1[residue]
        actual = CLOSED_FORM[residue]
        bad = None
        if expected != actual:
            bad = f"closed-form parameters {actual}"
        else:
            coeff, offset, head = expected
            for n in range(8, 61):
                if n % 4 != residue:
                    continue
                result = beta_maximizers(n)
                mu = head + (4,) * ((n - offset) // 4)
                if result.maximizers != {mu} or result.value != coeff * 5 ** ((n - offset) // 4):
                    bad = f"n={n}: value {result.value}, maximizers {sorted(result.maximizers)}"
                    break
        entries.append(_entry(
            f"table1.residue{residue}", bad is None,
            f"coeff={expected[0]}, offset={expected[1]}, head={expected[2]}",
            "regeneration matches for all 8<=n<=60" if bad is None else bad,
            f"Table 1, row n=={residue} (mod 4)",
        ))
    return entries


def _verify_table2() -> list[ReportEntry]:
    columns = ("beta", "alpha", "alpha_plus", "alpha_minus")
    fns = (beta, alpha, alpha_plus, alpha_minus)
    entries = []
    for n, row in golden.TABLE2.items():
        for column, fn, expected in zip(columns, fns, row):
            claim_id = f"table2.row{n}.{column}"
            entries.append(_entry(
                claim_id, fn(n) == expected, expected, fn(n),
                _located(claim_id, f"Table 2, row {n}, column {column}"),
            ))
    return entries


def _verify_gamma_table(table: dict, table_no: int, kinds: dict[str, GammaKind]) -> list[ReportEntry]:
    entries = []
    for n, row in table.items():
        for column, kind in kinds.items():
            pairs, value = row[column]
            result = max_gamma(kind, n)
            if column in _SYMMETRIC_COLUMNS:
                listed = {(max(a, b), min(a, b)) for a, b in pairs}
            else:
                listed = set(pairs)
            ok = result.value == value and listed <= set(result.witnesses)
            claim_id = f"table{table_no}.row{n}.{column}"
            entries.append(_entry(
                claim_id, ok,
                f"value={value}, pairs={sorted(listed)}",
                f"value={result.value}, argmax={list(result.witnesses)}",
                _located(claim_id, f"Table {table_no}, row {n}, column {column}"),
            ))
    return entries


def verify_tables() -> list[ReportEntry]:
    entries = _verify_table1()
    entries += _verify_table2()
    entries += _verify_gamma_table(golden.TABLE3, 3, {"aa": GammaKind.AA, "a_plus": GammaKind.A_PLUS})
    entries += _verify_gamma_table(
        golden.TABLE4, 4, {"plusplus": GammaKind.PLUS_PLUS, "plus_minus": GammaKind.PLUS_MINUS}
    )
    return entries


# ---------------------------------------------------------------------------
# lemmas
# ---------------------------------------------------------------------------


def _verify_ratio_tables() -> list[ReportEntry]:
    entries = []
    small = {1, 2, 3, 7}
    for (i, j), expected in sorted(golden.BO1_MAIN.items()):
        bad = None
        for k in range(4, 61):
            if k in small or k % 4 != i:
                continue
            for n in range(4, 61):
                if n in small or n % 4 != j:
                    continue
                got = beta_ratio(k, n)
                if got != expected:
                    bad = f"k={k}, n={n}: {got}"
                    break
            if bad:
                break
        claim_id = f"lemma_bo1.ratio.k{i}n{j}"
        entries.append(_entry(
            claim_id, bad is None, expected, bad or expected,
            _located(claim_id, f"ratio table, k=={i} and n=={j} (mod 4)"),
        ))
    for (k, j), expected in sorted(golden.BO1_SMALL.items()):
        bad = None
        for n in range(8, 61):
            if n % 4 != j:
                continue
            got = beta_ratio(k, n)
            if got != expected:
                bad = f"n={n}: {got}"
                break
        claim_id = f"lemma_bo1.small.k{k}n{j}"
        entries.append(_entry(
            claim_id, bad is None, expected, bad or expected,
            _located(claim_id, f"small-k ratio table, k={k}, n=={j} (mod 4)"),
        ))
    return entries


def _first_failure(pairs) -> str | None:
    for label, ok in pairs:
        if not ok:
            return label
    return None


def verify_lemmas() -> list[ReportEntry]:
    entries = _verify_ratio_tables()

    entries.append(_range_entry(
        "lemma_bo1.monotone", "beta(k) < beta(n) for 1 <= k < n <= 200",
        _first_failure((f"k={n-1}", beta(n - 1) < beta(n)) for n in range(2, 201)),
        "ratio lemma, strict growth",
    ))
    entries.append(_range_entry(
        "lemma_bo1.supermultiplicative", "beta(k)beta(n) <= beta(k+n) for k, n <= 100",
        _first_failure(
            (f"k={k}, n={n}", beta(k) * beta(n) <= beta(k + n))
            for k in range(1, 101) for n in range(k, 101)
        ),
        "ratio lemma, product inequality",
    ))
    entries.append(_range_entry(
        "lemma_bo3.half_rank_3", "beta(n/2) <= 3 beta(n-3) for even 2 < n <= 200",
        _first_failure((f"n={n}", beta(n // 2) <= 3 * beta(n - 3)) for n in range(4, 201, 2)),
        "half-rank bounds (1), first inequality",
    ))
    entries.append(_range_entry(
        "lemma_bo3.half_rank_5", "beta(n/2) <= 7 beta(n-5) for even 4 < n <= 200",
        _first_failure((f"n={n}", beta(n // 2) <= 7 * beta(n - 5)) for n in range(6, 201, 2)),
        "half-rank bounds (1), second inequality",
    ))
    entries.append(_range_entry(
        "lemma_bo3.lower", "5^(n-3) < beta(n)^4 for 1 <= n <= 400",
        _first_failure((f"n={n}", 5**n < 125 * beta(n) ** 4) for n in range(1, 401)),
        "half-rank bounds (2), checked on 4th powers",
    ))
    entries.append(_range_entry(
        "theorem_bo2.upper", "beta(n)^4 <= 5^n for 1 <= n <= 400",
        _first_failure((f"n={n}", beta(n) ** 4 <= 5**n) for n in range(1, 401)),
        "closed-form table, global 5^(n/4) bound",
    ))

    def oracle_mismatch():
        for n in range(1, 46):
            closed = beta_maximizers(n)
            brute = beta_oracle(n)
            if closed.value != brute.value or closed.maximizers != brute.maximizers:
                return f"n={n}"
        return None

    entries.append(_range_entry(
        "theorem_bo2.oracle", "closed form and maximizers match brute force for n <= 45",
        oracle_mismatch(), "closed-form table vs partition enumeration",
    ))

    for n, expected in sorted(golden.NK8_SMALL.items()):
        entries.append(_entry(
            f"lemma_nk8.n{n}", beta_prime(n) == expected, expected, beta_prime(n),
            f"odd-split maxima, small value at n={n}",
        ))

    def nk8_formula_mismatch():
        for n in range(8, 61, 2):
            if n not in (8, 12) and beta_prime(n) != beta(5) * beta(n - 5):
                return f"n={n}: {beta_prime(n)} != beta(5)beta(n-5)"
            coeff, offset = golden.NK8_RESIDUE[n % 4]
            if (n % 4 == 2 and n >= 10) or (n % 4 == 0 and n >= 16):
                if beta_prime(n) != coeff * 5 ** ((n - offset) // 4):
                    return f"n={n}: residue form"
        return None

    entries.append(_range_entry(
        "lemma_nk8.formula", "beta'(n) = beta(5)beta(n-5) and the residue forms, even n <= 60",
        nk8_formula_mismatch(), "odd-split maxima, displayed formulas",
    ))
    entries.append(_range_entry(
        "lemma_nk8.oracle", "beta'(n) equals the odd-part partition maximum for even n <= 40",
        _first_failure(
            (f"n={n}", beta_prime(n) == minus_cap_oracle(n, MINUS))
            for n in range(2, 41, 2)
        ),
        "odd-split maxima vs labelled-partition oracle",
    ))

    entries.append(_range_entry(
        "lemma_lu1.chain", "alpha_minus(n) <= alpha_plus(n) <= alpha(n) for n <= 300",
        _first_failure(
            (f"n={n}", alpha_minus(n) <= alpha_plus(n) <= alpha(n)) for n in range(1, 301)
        ),
        "signed-count comparison chain",
    ))
    entries.append(_range_entry(
        "lemma_lu1.odd_equality", "alpha_minus(n) == alpha_plus(n) exactly for odd n <= 300",
        _first_failure(
            (f"n={n}", (alpha_minus(n) == alpha_plus(n)) == bool(n % 2)) for n in range(1, 301)
        ),
        "signed-count equality on odd ranks",
    ))
    entries.append(_range_entry(
        "lemma_lu1.even_difference", "alpha_plus(n) - alpha_minus(n) = 2 p(n/2) for even n <= 300",
        _first_failure(
            (f"n={n}", alpha_plus(n) - alpha_minus(n) == 2 * partition_count(n // 2))
            for n in range(2, 301, 2)
        ),
        "signed-count difference on even ranks",
    ))
    entries.append(_range_entry(
        "lemma_lu1.integrality", "the plus-type formula is integral for n <= 300",
        _first_failure(
            (f"n={n}", isinstance(alpha_plus(n), int)) for n in range(1, 301)
        ),
        "plus-type count, fractional coefficients",
    ))

    entries.append(_range_entry(
        "prop_albe.le43", "alpha(n) > beta(n) for 1 <= n <= 43",
        _first_failure((f"n={n}", alpha(n) > beta(n)) for n in range(1, 44)),
        "crossover of alpha and beta, small side",
    ))
    entries.append(_range_entry(
        "prop_albe.gt43", "alpha(n) < beta(n) for 44 <= n <= 300",
        _first_failure((f"n={n}", alpha(n) < beta(n)) for n in range(44, 301)),
        "crossover of alpha and beta, large side",
    ))
    entries.append(_range_entry(
        "prop_albe.p_bound", "p(n) < 2^(floor(n/2)+1) for 1 <= n <= 300",
        _first_failure(
            (f"n={n}", partition_count(n) < 2 ** (n // 2 + 1)) for n in range(1, 301)
        ),
        "partition-count estimate used in the crossover proof",
    ))
    entries.append(_range_entry(
        "prop_albe.p2_bound", "p2(m) <= (m+1) 2^(floor(m/2)+2) for m <= 300",
        _first_failure(
            (f"m={m}", pair_partition_count(m) <= (m + 1) * 2 ** (m // 2 + 2))
            for m in range(301)
        ),
        "pair-count estimate used in the crossover proof",
    ))
    entries.append(_range_entry(
        "prop_albe.estimate", "alpha(n) <= (n^2-1) 2^(floor(n/2)+2) for 2 <= n <= 300",
        _first_failure(
            (f"n={n}", alpha(n) <= alpha_upper_estimate(n)) for n in range(2, 301)
        ),
        "rough alpha estimate",
    ))
    entries.append(_entry(
        "prop_albe.estimate_244",
        alpha_upper_estimate(244) ** 4 < 5**241,
        "estimate(244)^4 < 5^241", f"estimate(244) = {alpha_upper_estimate(244)}",
        "rough alpha estimate beats 5^((n-3)/4) from n = 244",
    ))
    entries.append(_range_entry(
        "prop_albe1.le38", "beta(n) < alpha_minus(n) for 3 <= n <= 38",
        _first_failure((f"n={n}", beta(n) < alpha_minus(n)) for n in range(3, 39)),
        "signed crossover, small side",
    ))
    entries.append(_range_entry(
        "prop_albe1.ge39", "alpha_plus(n) < beta(n) for 39 <= n <= 300",
        _first_failure((f"n={n}", alpha_plus(n) < beta(n)) for n in range(39, 301)),
        "signed crossover, large side",
    ))

    for kind in AlphaKind:
        fn = lambda m: alpha_value(kind, m)  # noqa: E731
        entries.append(_range_entry(
            f"lemma_dtt.1.{kind.value}", "fn(a+4) < 5 fn(a) for 13 < a <= 43",
            _first_failure((f"a={a}", fn(a + 4) < 5 * fn(a)) for a in range(14, 44)),
            "five-fold comparison, upper range",
        ))
        entries.append(_range_entry(
            f"lemma_dtt.1a.{kind.value}", "fn(a+4) > 5 fn(a) for 0 < a <= 13",
            _first_failure((f"a={a}", fn(a + 4) > 5 * fn(a)) for a in range(1, 14)),
            "five-fold comparison, lower range",
        ))

    def ma1_mismatch():
        for kind in GammaKind:
            for n in range(1, 61):
                for a, b in max_gamma(kind, n).witnesses:
                    if a > 17 or b > 17:
                        return f"{kind.value}, n={n}: ({a},{b})"
                    if n > 45 and (a <= 13 or b <= 13):
                        return f"{kind.value}, n={n}: ({a},{b})"
        return None

    entries.append(_range_entry(
        "lemma_ma1.argmax_box",
        "two-slot argmax pairs satisfy a,b <= 17 for n <= 60 and a,b > 13 for n > 45",
        ma1_mismatch(), "argmax localisation for the two-slot products",
    ))

    for n in (6, 4):
        got = minus_cap(n, MINUS)
        entries.append(_entry(
            f"lemma_ei2a.n{n}", got == golden.EI2A_SMALL[n], golden.EI2A_SMALL[n], got,
            f"small minus-type maxima, n={n}",
        ))
    entries.append(ReportEntry(
        "lemma_ei2a.n2", "flagged",
        str(golden.EI2A_SMALL[2]), str(minus_cap(2, MINUS)),
        "small minus-type maxima, n=2: printed value 2 disagrees with the "
        "labelled-partition oracle value 1 (documented discrepancy; neither "
        "value is adopted as ground truth)",
    ))
    return entries


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------


def _model_expectation(family: Family, parity: str, n: int) -> int:
    if family in (Family.LINEAR, Family.UNITARY):
        return beta(n)
    if parity == "even":
        kind = {Family.C: BoundKind.F, Family.D_PLUS: BoundKind.F_PLUS,
                Family.D_MINUS: BoundKind.F_MINUS}[family]
    else:
        if family is Family.D_MINUS and n in golden.DMINUS_ODD_SMALL:
            return golden.DMINUS_ODD_SMALL[n][0]
        kind = {Family.C: BoundKind.TAU, Family.B: BoundKind.THETA,
                Family.D_PLUS: BoundKind.THETA_PLUS,
                Family.D_MINUS: BoundKind.THETA_MINUS}[family]
    if n >= threshold(kind):
        return bound_value(kind, n)
    return small_n_max(kind, n).value


_MODEL_SWEEP = (
    (Family.LINEAR, "odd"), (Family.UNITARY, "odd"),
    (Family.C, "even"), (Family.C, "odd"), (Family.B, "odd"),
    (Family.D_PLUS, "even"), (Family.D_PLUS, "odd"),
    (Family.D_MINUS, "even"), (Family.D_MINUS, "odd"),
)


def verify_bounds(*, model_rank: int = 45) -> list[ReportEntry]:
    entries = []
    for kind in BoundKind:
        lo = threshold(kind)
        if kind in _ALPHA_OF_BOUND:
            alpha_kind = _ALPHA_OF_BOUND[kind]
            argmax_table = golden.Q_EVEN_ARGMAX[alpha_kind.value]

            def mismatch(kind=kind, alpha_kind=alpha_kind, argmax_table=argmax_table, lo=lo):
                for n in range(lo, 61):
                    r = max_alpha_beta(alpha_kind, n)
                    if r.value != bound_value(kind, n):
                        return f"n={n}: {r.value} != closed form"
                    if r.witnesses != (argmax_table[n % 4],):
                        return f"n={n}: argmax {r.witnesses}"
                return None
        else:
            gamma_kind = _GAMMA_OF_BOUND[kind]
            argmax_pairs = golden.ALAALB1_ARGMAX[gamma_kind.value]

            def mismatch(kind=kind, gamma_kind=gamma_kind, argmax_pairs=argmax_pairs, lo=lo):
                for n in range(lo, 61):
                    r = max_gamma(gamma_kind, n)
                    if r.value != bound_value(kind, n):
                        return f"n={n}: {r.value} != closed form"
                    if r.witnesses != (argmax_pairs[n % 4],):
                        return f"n={n}: argmax {r.witnesses}"
                return None

        entries.append(_range_entry(
            f"theorem_t21.{kind.value}.sharp",
            f"closed form equals the brute-force maximum with the stated argmax, {lo} <= n <= 60",
            mismatch(), f"sharp bound {kind.value}",
        ))
        entries.append(_range_entry(
            f"theorem_t21.{kind.value}.scaling",
            "bound(n+4) = 5 bound(n) at and above the threshold (n <= 100)",
            _first_failure(
                (f"n={n}", bound_value(kind, n + 4) == 5 * bound_value(kind, n))
                for n in range(lo, 101)
            ),
            f"sharp bound {kind.value}, 5-fold tail",
        ))

    for kind in AlphaKind:
        entries.append(_range_entry(
            f"prop_qeven.small.{kind.value}",
            "the one-slot maximum is attained at a = n for n < 18",
            _first_failure(
                (f"n={n}", n in max_alpha_beta(kind, n).witnesses) for n in range(1, 18)
            ),
            "one-slot products below the crossover rank",
        ))

    for family, parity in _MODEL_SWEEP:
        def model_mismatch(family=family, parity=parity):
            for n in range(1, model_rank + 1):
                got = max_series_size(GroupSpec(family, n, parity)).value
                want = _model_expectation(family, parity, n)
                if got != want:
                    return f"n={n}: model {got}, bound {want}"
            return None

        entries.append(_range_entry(
            f"model.{family.value}_{parity}",
            f"shape-model maximum equals the piecewise bound for rank <= {model_rank}",
            model_mismatch(), f"group model, family {family.value}, q {parity}",
        ))

    for n, (value, display) in sorted(golden.DMINUS_ODD_SMALL.items()):
        got = max_series_size(GroupSpec(Family.D_MINUS, n, "odd")).value
        entries.append(_entry(
            f"remark_pp2.dminus_n{n}", got == value, f"{display}={value}", got,
            f"minus-type orthogonal, odd q, rank {n} (remark value)",
        ))

    for n, (value, pairs) in sorted(golden.GAMMA_EQ_REMARK.items()):
        r = max_gamma_eq(GammaKind.AA, n)
        ok = r.value == value and set(pairs) <= set(r.witnesses)
        entries.append(_entry(
            f"remark_t3.eq.n{n}", ok,
            f"value={value}, pairs={list(pairs)}",
            f"value={r.value}, argmax={list(r.witnesses)}",
            f"equality-constrained two-slot maximum at n={n}",
        ))
    return entries


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------


def verify_constants() -> list[ReportEntry]:
    entries = []
    for column in Un5Column:
        constant = un5_constant(column)
        bound = golden.UN5_BOUND[column.value]
        within = constant.c_fourth < bound**4
        if column is Un5Column.D_EVEN:
            entries.append(ReportEntry(
                "theorem_un5.D_even", "flagged",
                f"c < {bound}", f"c = {constant.c_decimal} (c^4 = {constant.c_fourth})",
                "headline constant table, D column with p even: the exact "
                "supremum 4110/5^4 exceeds the printed bound (documented "
                "discrepancy)",
            ))
            continue
        extra_ok = True
        if column is Un5Column.A:
            extra_ok = constant.c_fourth == Fraction(1)
        entries.append(_entry(
            f"theorem_un5.{column.value}", within and extra_ok,
            f"c < {bound}", f"c = {constant.c_decimal} (c^4 = {constant.c_fourth})",
            f"headline constant table, column {column.value}"
            + (" (supremum exactly 1 on the 0 residue)" if column is Un5Column.A else ""),
        ))
    return entries


# ---------------------------------------------------------------------------
# suite driver
# ---------------------------------------------------------------------------


def run_suite(suite: str = "all") -> list[ReportEntry]:
    """Run one suite (or all) and return entries sorted by claim id."""
    runners = {
        "tables": verify_tables,
        "lemmas": verify_lemmas,
        "bounds": verify_bounds,
        "constants": verify_constants,
    }
    if suite == "all":
        entries = [entry for name in SUITES for entry in runners[name]()]
    elif suite in runners:
        entries = runners[suite]()
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES + ('all',)}")
    return sorted(entries, key=lambda e: e.claim_id)


def summarize(entries) -> dict[str, int]:
    counts = {"verified": 0, "failed": 0, "flagged": 0}
    for entry in entries:
        counts[entry.status] += 1
    return counts


def exit_code(entries) -> int:
    """0 when nothing failed (flagged entries do not fail a run), else 1."""
    return 1 if any(entry.status == "failed" for entry in entries) else 0
