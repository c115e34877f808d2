"""Norm, weight, and zeta evaluation against analytic and brute-force oracles."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symquad import FourierPolynomial, korobov_norm, korobov_weight, riemann_zeta

PI = math.pi

# 1e8-term partial sum of m**-1.5 plus the integral-tail bracket midpoint,
# bracket half width 5.0e-13 (recorded from the brute-force oracle run).
ZETA_1_5_ORACLE = 2.6123753486854904


def test_zeta_known_values():
    assert riemann_zeta(2, 1e-10) == pytest.approx(PI**2 / 6, abs=1e-10)
    assert riemann_zeta(4, 1e-10) == pytest.approx(PI**4 / 90, abs=1e-10)


def test_zeta_against_partial_sum_oracle():
    assert abs(riemann_zeta(1.5, 1e-6) - ZETA_1_5_ORACLE) <= 1e-6 + 1e-9


def test_zeta_tolerance_consistency():
    for alpha in (1.1, 1.5, 2.0, 3.0, 6.0, 50.0):
        for tol in (1e-6, 1e-9, 1e-12):
            loose = riemann_zeta(alpha, tol)
            tight = riemann_zeta(alpha, tol / 10)
            assert abs(loose - tight) <= 2 * tol


def test_zeta_domain_errors():
    with pytest.raises(ValueError):
        riemann_zeta(1.0, 1e-6)
    with pytest.raises(ValueError):
        riemann_zeta(0.5, 1e-6)
    with pytest.raises(ValueError):
        riemann_zeta(2.0, 0.0)
    with pytest.raises(ValueError):
        riemann_zeta(2.0, -1e-9)


def test_weight_examples():
    assert korobov_weight((0, 0, 0), 7.3) == 1.0
    assert korobov_weight((2, -3), 2) == 36.0
    assert korobov_weight((1, 0, -5), 1.5) == pytest.approx(11.180339887498949, rel=1e-15)


def test_weight_overflow():
    big = (2**31 - 1,) * 40
    with pytest.raises(OverflowError):
        korobov_weight(big, 2.0)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=5),
    st.floats(min_value=1.01, max_value=8.0),
)
def test_weight_at_least_one(k, alpha):
    w = korobov_weight(tuple(k), alpha)
    assert w >= 1.0
    if all(e in (-1, 0, 1) for e in k):
        assert w == 1.0
    else:
        assert w > 1.0


def test_norm_examples():
    assert korobov_norm(FourierPolynomial(1, {(0,): 1.0}), 2) == 1.0
    f = FourierPolynomial(2, {(1, 1): 0.5, (2, 0): 0.1})
    # enumerate-support oracle: max(0.5 * 1, 0.1 * 4)
    assert korobov_norm(f, 2) == pytest.approx(0.5, rel=1e-15)
    assert korobov_norm(FourierPolynomial(3, {}), 2) == 0.0


@settings(max_examples=50, deadline=None)
@given(
    st.floats(min_value=-3, max_value=3),
    st.floats(min_value=-3, max_value=3),
    st.floats(min_value=1.1, max_value=6.0),
)
def test_norm_homogeneity(re, im, alpha):
    c = complex(re, im)
    f = FourierPolynomial(2, {(1, -2): 0.7 + 0.1j, (0, 3): -0.25j, (0, 0): 1.0})
    lhs = korobov_norm(c * f, alpha)
    rhs = abs(c) * korobov_norm(f, alpha)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


def test_integral_bounded_by_norm():
    f = FourierPolynomial(2, {(0, 0): 0.3 - 0.4j, (1, 1): 0.9, (5, 2): 0.001})
    for alpha in (1.5, 2.0, 4.0):
        assert abs(f.integral()) <= korobov_norm(f, alpha) + 1e-15
