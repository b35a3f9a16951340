import pytest

from lusztig_series import golden
from lusztig_series.beta import beta
from lusztig_series.partitions import partition_count
from lusztig_series.unipotent import (
    AlphaKind,
    alpha,
    alpha_minus,
    alpha_plus,
    alpha_upper_estimate,
    alpha_value,
    nu_linear,
)


def test_table2_reproduction():
    for n, (b, a, ap, am) in golden.TABLE2.items():
        assert beta(n) == b, n
        assert alpha(n) == a, n
        assert alpha_plus(n) == ap, n
        assert alpha_minus(n) == am, n


@pytest.mark.parametrize("n,expected", [(0, 1), (5, 46), (43, 35931532), (22, 80160)])
def test_alpha_values(n, expected):
    assert alpha(n) == expected


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (4, 14), (17, 6007)])
def test_alpha_plus_values(n, expected):
    assert alpha_plus(n) == expected


@pytest.mark.parametrize("n,expected", [(0, 1), (2, 2), (16, 4066), (15, 2730)])
def test_alpha_minus_values(n, expected):
    assert alpha_minus(n) == expected


def test_signed_variants_pinned_to_one_at_zero():
    # the displayed plus-type formula would give 2 at n = 0
    assert alpha_plus(0) == 1
    assert alpha_minus(0) == 1


def test_chain_and_parity():
    for n in range(1, 301):
        am, ap, a = alpha_minus(n), alpha_plus(n), alpha(n)
        assert am <= ap <= a
        if n % 2:
            assert am == ap
        else:
            assert ap - am == 2 * partition_count(n // 2)


def test_plus_formula_integrality():
    # alpha_plus computes 4*value and divides with a hard assertion;
    # exercising every n up to 300 proves integrality over the range
    for n in range(1, 301):
        assert isinstance(alpha_plus(n), int)


def test_alpha_beta_crossover():
    for n in range(1, 44):
        assert alpha(n) > beta(n)
    for n in range(44, 301):
        assert alpha(n) < beta(n)


def test_signed_beta_crossover():
    for n in range(3, 39):
        assert beta(n) < alpha_minus(n)
    for n in range(39, 301):
        assert alpha_plus(n) < beta(n)


def test_five_fold_comparisons():
    for fn in (alpha, alpha_plus, alpha_minus):
        for a in range(1, 14):
            assert fn(a + 4) > 5 * fn(a), (fn.__name__, a)
        for a in range(14, 44):
            assert fn(a + 4) < 5 * fn(a), (fn.__name__, a)


def test_upper_estimate():
    assert alpha_upper_estimate(2) == 24
    for n in range(2, 301):
        assert alpha(n) <= alpha_upper_estimate(n)
    est = alpha_upper_estimate(244)
    assert est**4 < 5**241
    with pytest.raises(ValueError):
        alpha_upper_estimate(1)


def test_nu_linear_is_partition_count():
    for n in (0, 5, 16, 40):
        assert nu_linear(n) == partition_count(n)


def test_alpha_dispatch():
    for kind, fn in [
        (AlphaKind.SYMPLECTIC, alpha),
        (AlphaKind.PLUS, alpha_plus),
        (AlphaKind.MINUS, alpha_minus),
        ("symplectic", alpha),
    ]:
        assert alpha_value(kind, 20) == fn(20)


def test_negative_inputs_rejected():
    for fn in (alpha, alpha_plus, alpha_minus, nu_linear):
        with pytest.raises(ValueError):
            fn(-1)
