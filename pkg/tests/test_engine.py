"""Nested-summation oracle: truncation, dispatch, acceleration."""

from fractions import Fraction

import pytest
from mpmath import mp

from polyzeta.compositions import Composition, DomainError
from polyzeta.constants import PrecisionContext
from polyzeta.engine import coeff_x_exact, eval_auto, eval_truncated

CTX = PrecisionContext(40)


def test_truncated_exact_rational():
    # zeta_x(1) at x=1/2, N=3: 1/2 + 1/8 + 1/24
    v = eval_truncated(Composition.of(1), Fraction(1, 2), 3, CTX)
    assert v == Fraction(1, 2) + Fraction(1, 8) + Fraction(1, 24)


def test_truncated_exact_depth2():
    # zeta_x(1,1) at x=1/2, N=2: only n1=2 > n2=1 contributes x^2/(2*1)
    v = eval_truncated(Composition.of(1, 1), Fraction(1, 2), 2, CTX)
    assert v == Fraction(1, 8)


def test_truncated_barred_sign():
    # zeta(-1) partial sums: -1 + 1/2 - 1/3 ...
    v = eval_truncated(Composition.of(-1), 1, 3, CTX)
    assert v == Fraction(-1) + Fraction(1, 2) - Fraction(1, 3)


def test_coeff_x_exact():
    assert coeff_x_exact(Composition.of(3), 2) == Fraction(1, 8)
    assert coeff_x_exact(Composition.of(3, 1, 3), 4) == Fraction(7, 512)
    assert coeff_x_exact(Composition.of(2, 1), 1) == 0


def test_empty_composition():
    res = eval_auto(Composition(), Fraction(1, 2), mp.mpf("1e-10"), CTX)
    assert res.value == 1 and res.method == "exact_coeff"


def test_x_zero():
    res = eval_auto(Composition.of(2), 0, mp.mpf("1e-10"), CTX)
    assert res.value == 0 and res.method == "exact_coeff"


def test_geometric_dilogarithm():
    with CTX.workdps():
        res = eval_auto(Composition.of(2), Fraction(1, 2), mp.mpf("1e-20"), CTX)
        ref = mp.pi**2 / 12 - mp.log(2) ** 2 / 2  # Li_2(1/2)
        assert res.method == "geometric"
        assert abs(res.value - ref) < mp.mpf("1e-19")


def test_geometric_log():
    with CTX.workdps():
        res = eval_auto(Composition.of(1), Fraction(1, 2), mp.mpf("1e-20"), CTX)
        assert abs(res.value - mp.log(2)) < mp.mpf("1e-19")


def test_domain_gap_rejected():
    with pytest.raises(DomainError):
        eval_auto(Composition.of(2), Fraction(97, 100), mp.mpf("1e-10"), CTX)


def test_divergent_at_one_rejected():
    with pytest.raises(DomainError):
        eval_auto(Composition.of(1, 1), 1, mp.mpf("1e-10"), CTX)


def test_richardson_zeta2():
    with CTX.workdps():
        res = eval_auto(Composition.of(2), 1, mp.mpf("1e-10"), CTX)
        assert res.method == "richardson"
        assert abs(res.value - mp.pi**2 / 6) < mp.mpf("1e-9")
        assert abs(res.value - mp.pi**2 / 6) < 10 * res.err_bound + mp.mpf("1e-12")


def test_richardson_depth2():
    with CTX.workdps():
        # zeta(2,1) = zeta(3)
        res = eval_auto(Composition.of(2, 1), 1, mp.mpf("1e-9"), CTX)
        assert abs(res.value - mp.zeta(3)) < mp.mpf("1e-8")


def test_euler_transform_log2():
    with CTX.workdps():
        res = eval_auto(Composition.of(-1), 1, mp.mpf("1e-12"), CTX)
        assert res.method == "euler_transform"
        assert abs(res.value + mp.log(2)) < mp.mpf("1e-12")


def test_euler_transform_depth2():
    with CTX.workdps():
        # zeta(-1, 1) = (1/2) log^2 2 under the product sign convention
        res = eval_auto(Composition.of(-1, 1), 1, mp.mpf("1e-11"), CTX)
        assert abs(res.value - mp.log(2) ** 2 / 2) < mp.mpf("1e-11")


def test_euler_transform_double_bar_sign():
    with CTX.workdps():
        # zeta(-1, -1) = (1/2) log^2 2 - pi^2/12 (negative)
        res = eval_auto(Composition.of(-1, -1), 1, mp.mpf("1e-11"), CTX)
        ref = mp.log(2) ** 2 / 2 - mp.pi**2 / 12
        assert abs(res.value - ref) < mp.mpf("1e-11")
        assert res.value < 0
