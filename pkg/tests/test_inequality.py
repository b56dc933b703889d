"""Inequality metric tests: the two Gini routes agree, the policy transform
contracts dispersion, and the worst case attains every bound."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from pytest import approx

from popcoin_sim import (
    UndefinedGiniError,
    gini,
    gini_bound,
    gini_bound_limit,
    gini_pairwise,
    inequality_ratio,
    max_inequality_ratio,
    policy_transform,
    ratio_bound,
    variance,
    variance_bound,
    worst_case_distribution,
)

balances = arrays(
    float,
    st.integers(min_value=1, max_value=60),
    elements=st.floats(min_value=0, max_value=1e9, allow_nan=False),
)


# --- policy transform ----------------------------------------------------------


def test_transform_from_zero_is_basic_income():
    assert policy_transform([0, 0], 0.02, 5).tolist() == [5.0, 5.0]


def test_transform_half_demurrage():
    assert policy_transform([100.0], 0.5, 1).tolist() == [51.0]


def test_transform_identity_limit():
    assert policy_transform([3, 7], 0.0, 0).tolist() == [3.0, 7.0]


def test_transform_rejects_negatives():
    with pytest.raises(ValueError):
        policy_transform([-1.0], 0.02, 5)


# --- gini ------------------------------------------------------------------------


def test_gini_constant_distribution_is_zero():
    assert gini([7, 7, 7, 7]) == approx(0.0, abs=1e-15)


def test_gini_two_point_example():
    # pairwise mean absolute difference normalization: |1-3| appears twice
    # over 2 * N^2 * mean = 16, giving 0.25
    assert gini([1, 3]) == approx(0.25)
    assert gini_pairwise([1, 3]) == approx(0.25)


def test_gini_single_holder_is_one_minus_one_over_n():
    assert gini([8, 0, 0, 0]) == approx(0.75)
    assert gini([1000.0] + [0.0] * 99) == approx(0.99)


def test_gini_all_zero_is_undefined():
    with pytest.raises(UndefinedGiniError):
        gini([0.0, 0.0])
    with pytest.raises(UndefinedGiniError):
        gini_pairwise([0.0])


def test_gini_rejects_negative_balances():
    with pytest.raises(ValueError):
        gini([1.0, -2.0])


def test_gini_scale_invariance():
    values = [1.0, 5.0, 9.0, 0.5]
    assert gini([v * 123.0 for v in values]) == approx(gini(values), rel=1e-12)


@given(balances)
def test_gini_sorted_identity_matches_pairwise_definition(values):
    """The O(N log N) route must equal the defining double sum."""
    if values.sum() == 0:
        with pytest.raises(UndefinedGiniError):
            gini(values)
        return
    assert gini(values) == approx(gini_pairwise(values), rel=1e-9, abs=1e-12)
    assert 0.0 <= gini(values) < 1.0


# --- variance and ratio -------------------------------------------------------------


def test_variance_constant_is_zero():
    assert variance([4, 4, 4]) == 0.0


def test_ratio_examples():
    assert inequality_ratio(4, 2) == approx(2.0)
    assert inequality_ratio(2, 4) == approx(2.0)  # symmetric
    assert inequality_ratio(5, 0) == float("inf")
    assert inequality_ratio(0.0, 0.0) == 1.0  # exact equality, not a blow-up


def test_max_ratio_over_vector():
    assert max_inequality_ratio([2.0, 8.0, 4.0]) == approx(4.0)
    assert max_inequality_ratio([3.0]) == 1.0


# --- contraction properties -----------------------------------------------------------


@given(balances, st.floats(min_value=0.0, max_value=0.99), st.floats(min_value=0.01, max_value=1e4))
def test_variance_contracts_by_the_square_factor(values, alpha, income):
    after = policy_transform(values, alpha, income)
    assert variance(after) == approx((1 - alpha) ** 2 * variance(values), rel=1e-9, abs=1e-9)


@settings(deadline=None)
@given(
    shares=arrays(
        float,
        st.integers(min_value=2, max_value=40),
        elements=st.floats(min_value=0.0, max_value=1.0),
    ),
    alpha=st.floats(min_value=0.01, max_value=0.9),
)
def test_gini_contracts_linearly_on_the_invariant_total(shares, alpha):
    """When the total sits at B*N/alpha (where it stays put epoch over
    epoch), one transform scales Gini by exactly (1 - alpha)."""
    if shares.sum() == 0:
        shares = shares + 1.0
    income = 2922.0
    n = len(shares)
    total = income * n / alpha
    values = shares / shares.sum() * total
    after = policy_transform(values, alpha, income)
    assert after.sum() == approx(total, rel=1e-9)
    assert gini(after) == approx((1 - alpha) * gini(values), rel=1e-8, abs=1e-10)


@given(
    st.floats(min_value=0.0, max_value=1e6),
    st.floats(min_value=0.0, max_value=1e6),
    st.floats(min_value=0.01, max_value=0.9),
    st.floats(min_value=0.01, max_value=1e3),
)
def test_pairwise_ratio_moves_toward_one(a, b, alpha, income):
    before = inequality_ratio(a, b)
    after = inequality_ratio((1 - alpha) * a + income, (1 - alpha) * b + income)
    assert 1.0 <= after
    if before > 1.0:
        assert after < before
    else:
        assert after == approx(1.0)


# --- bounds ---------------------------------------------------------------------------


def test_variance_bound_examples():
    assert variance_bound(0.02, 1, 10) == approx(21609.0, rel=1e-12)
    assert variance_bound(0.02, 1, 1) == 0.0
    assert variance_bound(1.0, 1, 10) == 0.0  # total demurrage erases dispersion


def test_gini_bound_examples():
    assert gini_bound(0.02, 10) == approx(0.882)
    assert gini_bound(0.02, 1) == 0.0
    assert gini_bound_limit(0.02) == approx(0.98)
    # the finite-N bound increases toward the limit
    assert gini_bound(0.02, 10**6) < gini_bound_limit(0.02)


def test_ratio_bound_examples():
    assert ratio_bound(0.02, 10) == approx(491.0)
    assert ratio_bound(0.5, 2) == approx(3.0)
    assert ratio_bound(0.3, 1) == 1.0  # one account is always equal to itself


def test_bound_domains():
    with pytest.raises(ValueError):
        gini_bound(-0.1, 10)
    with pytest.raises(ValueError):
        variance_bound(0.02, 1, 0)
    with pytest.raises(ValueError):
        worst_case_distribution(0.0, 1, 5)


def test_worst_case_attains_every_bound():
    # one account holding the whole steady-state supply, then one epoch
    alpha, income, n = 0.5, 1.0, 4
    worst = worst_case_distribution(alpha, income, n)
    assert worst.tolist() == [8.0, 0.0, 0.0, 0.0]
    after = policy_transform(worst, alpha, income)
    assert gini(after) == approx(gini_bound(alpha, n), rel=1e-12)
    assert variance(after) == approx(variance_bound(alpha, income, n), rel=1e-12)
    assert max_inequality_ratio(after) == approx(ratio_bound(alpha, n), rel=1e-12)


@given(
    st.floats(min_value=0.02, max_value=0.9),
    st.floats(min_value=0.1, max_value=1e3),
    st.integers(min_value=1, max_value=200),
)
def test_worst_case_is_extremal_after_one_epoch(alpha, income, n):
    after = policy_transform(worst_case_distribution(alpha, income, n), alpha, income)
    assert gini(after) <= gini_bound(alpha, n) * (1 + 1e-12)
    assert variance(after) <= variance_bound(alpha, income, n) * (1 + 1e-12)
    assert max_inequality_ratio(after) <= ratio_bound(alpha, n) * (1 + 1e-12)
