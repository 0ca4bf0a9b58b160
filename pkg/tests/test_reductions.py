"""Closed-form families and the generating-coefficient cross-checks."""

from fractions import Fraction

import pytest
from mpmath import mp

from polyzeta.compositions import Composition
from polyzeta.constants import PrecisionContext
from polyzeta.reductions import (
    cheese_coefficient,
    cor3,
    cream,
    cream_coefficient,
    cheese,
    euler_depth2,
    gf_coeff_route,
    half_duals,
    match_family,
    thm1,
    thm2,
    z31_block,
)

CTX = PrecisionContext(40)


def _close(a, b, d=30):
    return abs(mp.mpf(a) - mp.mpf(b)) < mp.mpf(10) ** (-d)


def test_euler_depth2_weight3():
    # zeta(2,1) = zeta(3)
    red = euler_depth2(2)
    with CTX.workdps():
        assert _close(red.numeric(CTX), mp.zeta(3))


def test_euler_depth2_weight5():
    # zeta(4,1) = 2 zeta(5) - zeta(2) zeta(3)
    red = euler_depth2(4)
    with CTX.workdps():
        assert _close(red.numeric(CTX), 2 * mp.zeta(5) - mp.zeta(2) * mp.zeta(3))


def test_z31_block():
    with CTX.workdps():
        assert _close(z31_block(1).numeric(CTX), mp.pi**4 / 360)
        assert _close(z31_block(2).numeric(CTX), 2 * mp.pi**8 / mp.factorial(10))


def test_thm1_forms_agree():
    with CTX.workdps():
        for n in range(4):
            assert _close(thm1(n, "first").numeric(CTX), thm1(n, "second").numeric(CTX))


def test_thm1_base_case():
    # n = 0 member is zeta(3)
    with CTX.workdps():
        assert _close(thm1(0).numeric(CTX), mp.zeta(3))


def test_thm2_base_case():
    with CTX.workdps():
        assert _close(thm2(0).numeric(CTX), mp.pi**2 / 6)


def test_cor3_matches_thm1_closed_form():
    for n in range(3):
        assert cor3(n).closed_form == thm1(n).closed_form


def test_cream_base_values():
    with CTX.workdps():
        even, odd = cream(0)
        assert even.numeric(CTX) == 1  # empty sum
        assert _close(odd.numeric(CTX), -mp.log(2))  # zeta(1bar)
        even1, _ = cream(1)
        # zeta(1bar,1) = (1/2) log^2 2
        assert _close(even1.numeric(CTX), mp.log(2) ** 2 / 2)


def test_cheese_base_value():
    with CTX.workdps():
        odd, even = cheese(0)
        assert _close(odd.numeric(CTX), -mp.log(2))  # c'_1 route, zeta(1bar)
        # zeta(1bar,1bar) = (1/2) log^2 2 - pi^2/12
        assert _close(even.numeric(CTX), mp.log(2) ** 2 / 2 - mp.pi**2 / 12)


def test_half_dual_example():
    # zeta_{1/2}(3,1) = -(1/8) log2 zeta(3) + (1/24) log^4 2 + pi^4/720
    red = half_duals("31block", 1)
    with CTX.workdps():
        ref = (
            -mp.log(2) * mp.zeta(3) / 8
            + mp.log(2) ** 4 / 24
            + mp.pi**4 / 720
        )
        assert _close(red.numeric(CTX), ref)


def test_match_family_routes():
    assert match_family(Composition.of(3, 1, 3, 1), 1).route == "z31"
    assert match_family(Composition.of(3, 1, 3), 1).route == "thm1"
    assert match_family(Composition.of(2, 1, 3), 1).route == "thm2"
    assert match_family(Composition.of(2, 1, 3, 1), 1).route == "cor3"
    assert match_family(Composition.of(-1, 1), 1).route == "cream"
    assert match_family(Composition.of(-1, -1), 1).route == "cheese"
    assert match_family(Composition.of(5, 1), 1).route == "euler_depth2"
    assert match_family(Composition.of(3, 1), Fraction(1, 2)).route == "half_dual"
    assert match_family(Composition.of(2, 2), 1) is None
    assert match_family(Composition.of(3, 1), Fraction(1, 3)) is None


def test_bbb14_route_reproduces_cream():
    series = gf_coeff_route("bbb14", 8)
    for m in range(9):
        assert series.coeff(m) == cream_coefficient(m)


def test_tmilk_route_reproduces_cheese():
    series = gf_coeff_route("tmilk", 8)
    for m in range(1, 9):
        assert series.coeff(m) == cheese_coefficient(m)


def test_sprime_route_reproduces_thm2():
    series = gf_coeff_route("Sprime1", 10)
    for n in range(3):
        got = series.coeff(4 * n + 2) * Fraction((-1) ** n, 4**n)
        assert got == thm2(n).closed_form


def test_s1_route_reproduces_thm1():
    series = gf_coeff_route("S1", 10)
    for n in range(3):
        got = series.coeff(4 * n + 2) * Fraction((-1) ** n, 4**n)
        assert got == thm1(n, "second").closed_form
