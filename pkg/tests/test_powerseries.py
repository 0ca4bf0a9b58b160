"""Formal power series over exact coefficients, and the ODE solution bases."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polyzeta.powerseries import (
    LogSeries,
    Series,
    SeriesOrderError,
    annihilation_residual,
    named_series,
    ode_analytic_solution,
    ode_log_solution,
    y1_series_in_x,
)

fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)
coeff_lists = st.lists(fractions, min_size=1, max_size=7)


def _series(coeffs):
    return Series(tuple(coeffs))


def test_coeff_and_order():
    s = _series([1, 2, 3])
    assert s.coeff(2) == 3
    with pytest.raises(SeriesOrderError):
        s.coeff(3)


@given(coeff_lists, coeff_lists)
def test_addition_commutes(a, b):
    assert (_series(a) + _series(b)).coeffs == (_series(b) + _series(a)).coeffs


@given(coeff_lists, coeff_lists)
def test_cauchy_product_commutes(a, b):
    assert (_series(a) * _series(b)).coeffs == (_series(b) * _series(a)).coeffs


@given(coeff_lists, coeff_lists, coeff_lists)
@settings(max_examples=30)
def test_product_distributes(a, b, c):
    n = min(len(a), len(b), len(c)) - 1
    lhs = (_series(a) * (_series(b) + _series(c))).truncate(n)
    rhs = (_series(a) * _series(b) + _series(a) * _series(c)).truncate(n)
    assert lhs.coeffs == rhs.coeffs


@given(st.lists(fractions, min_size=1, max_size=6))
@settings(max_examples=40)
def test_exp_log_roundtrip(tail):
    s = _series([Fraction(0)] + tail)
    assert s.exp().log().coeffs == s.coeffs


def test_exp_matches_reference():
    # exp(x) coefficients are 1/m!
    s = _series([Fraction(0), Fraction(1), 0, 0, 0]).exp()
    assert [s.coeff(m) for m in range(5)] == [
        Fraction(1), Fraction(1), Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)
    ]


def test_shift_and_differentiate():
    s = _series([1, 2, 3])
    assert s.shift_up().coeffs[:3] == (0, 1, 2)
    assert s.differentiate().coeffs == (2, 6)
    assert _series([0, 5, 7]).shift_down().coeffs == (5, 7)
    with pytest.raises(ValueError):
        _series([1, 2]).shift_down()


def test_y1_series_annihilated_in_x_chart():
    # the product of the two analytic solutions at parameters t and -t is
    # annihilated exactly by the fourth-order operator
    t = Fraction(1, 9)
    prod = y1_series_in_x(t, 24) * y1_series_in_x(-t, 24)
    assert annihilation_residual(prod, t, 20, chart="x") == 0


def test_frobenius_products_annihilated_in_w_chart():
    t = Fraction(1, 9)
    order = 24
    p_plus = ode_analytic_solution(t, order)
    p_minus = ode_analytic_solution(-t, order)
    v_plus = ode_log_solution(t, order)
    v_minus = ode_log_solution(-t, order)
    assert annihilation_residual(
        LogSeries.from_series(p_plus * p_minus), t, 18, chart="w"
    ) == 0
    assert annihilation_residual(v_plus * p_minus, t, 18, chart="w") == 0
    assert annihilation_residual(v_plus * v_minus, t, 18, chart="w") == 0


def test_single_solution_not_annihilated():
    # the operator annihilates products of solutions, not single solutions
    t = Fraction(1, 9)
    res = annihilation_residual(y1_series_in_x(t, 24), t, 18, chart="x")
    assert res != 0


def test_named_series_q_opening():
    # Q(z) = sinc(pi z) sinhc(pi z) = 1 - pi^4 z^4/90 + ...
    ctx_digits = 40
    from polyzeta.constants import PrecisionContext

    ctx = PrecisionContext(ctx_digits)
    q = named_series("Q", 4)
    with ctx.workdps():
        assert q.coeff(0).numeric(ctx) == 1
        assert q.coeff(1).numeric(ctx) == 0
        v = ctx.mpf(0) + q.coeff(4).numeric(ctx)
        from mpmath import mp

        assert abs(v + mp.pi**4 / 90) < mp.mpf(10) ** (-30)
