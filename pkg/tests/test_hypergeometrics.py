"""Gauss 2F1 evaluation and the analytic right-hand-side assemblies."""

import pytest
from mpmath import mp

from polyzeta.constants import PrecisionContext
from polyzeta.hypergeometrics import (
    A_eval,
    G_eval,
    HyperParams,
    S_rhs,
    U,
    Y1,
    Y2,
    gauss_2f1,
    psi_sym,
    wronskian_half,
)

CTX = PrecisionContext(40)


def _tol(d=32):
    return mp.mpf(10) ** (-d)


def test_2f1_matches_mpmath_inside_disk():
    with CTX.workdps():
        for a, b, c, x in [(0.3, -0.2, 1.1, 0.4), (1.5, 0.5, 2.0, -0.7)]:
            got = gauss_2f1(HyperParams(mp.mpf(a), mp.mpf(b), mp.mpf(c), mp.mpf(x)), CTX)
            ref = mp.hyp2f1(a, b, c, x)
            assert abs(got - ref) < _tol()


def test_2f1_terminating():
    with CTX.workdps():
        got = gauss_2f1(HyperParams(mp.mpf(-3), mp.mpf(2), mp.mpf(1), mp.mpf(5)), CTX)
        assert abs(got - mp.hyp2f1(-3, 2, 1, 5)) < _tol()


def test_2f1_at_unit_argument_gauss_formula():
    with CTX.workdps():
        a, b, c = mp.mpf("0.2"), mp.mpf("-0.2"), mp.mpf("1")
        got = gauss_2f1(HyperParams(a, b, c, mp.one), CTX)
        ref = mp.gamma(c) * mp.gamma(c - a - b) / (mp.gamma(c - a) * mp.gamma(c - b))
        assert abs(got - ref) < _tol()


def test_y1_at_one_is_sinc():
    with CTX.workdps():
        for z in (mp.mpf("0.1"), mp.mpf("0.3"), mp.mpc("0.2", "0.1")):
            assert abs(Y1(1, z, CTX) - mp.sin(mp.pi * z) / (mp.pi * z)) < _tol()


def test_y2_vanishes_at_one():
    with CTX.workdps():
        assert Y2(1, mp.mpf("0.3"), CTX) == 0


def test_u_is_y1_minus_z_y2():
    with CTX.workdps():
        s, z = mp.mpf("0.6"), mp.mpf("0.25")
        assert abs(U(s, z, CTX) - (Y1(s, z, CTX) - z * Y2(s, z, CTX))) < _tol()


def test_a_eval_log_derivative_structure():
    with CTX.workdps():
        # A(z)A(-z) has only even-order content: Li terms at odd k cancel
        z = mp.mpf("0.2")
        prod = A_eval(z, CTX) * A_eval(-z, CTX)
        ref = mp.exp(
            -2 * mp.nsum(lambda k: mp.zeta(2 * k) * z ** (2 * k) / (2 * k), [1, mp.inf])
        )
        assert abs(prod - ref) < _tol(30)


def test_psi_sym_matches_digamma():
    with CTX.workdps():
        for w in (mp.mpf("0.3"), mp.mpf("1.7"), mp.mpc("0.4", "1.2")):
            ref = mp.digamma(1 + w) + mp.digamma(1 - w)
            assert abs(psi_sym(w, CTX) - ref) < _tol(30)


def test_g_eval_series_vs_partial_fraction():
    with CTX.workdps():
        # the two evaluation routes must agree where both are valid
        for zs in ("0.5", "0.85"):
            z = mp.mpf(zs)
            series = mp.nsum(lambda n: z ** (4 * n + 2) * mp.zeta(4 * n + 3), [0, mp.inf])
            assert abs(G_eval(z, CTX) - series) < _tol(30)


def test_s_rhs_small_x_matches_opening_polynomial():
    with CTX.workdps():
        # S(x,z) = z^2[x + x^2/8 + (1-2z^4)x^3/27 + (1-(7/2)z^4)x^4/64] + O(x^5)
        z = mp.mpf("0.3")
        x = mp.mpf("0.05")
        poly = z**2 * (
            x
            + x**2 / 8
            + (1 - 2 * z**4) * x**3 / 27
            + (1 - mp.mpf(7) / 2 * z**4) * x**4 / 64
        )
        assert abs(S_rhs(x, z, CTX) - poly) < mp.mpf("1e-8")


def test_wronskian_closed_form():
    with CTX.workdps():
        z = mp.mpf("0.2")
        ref = (
            -(mp.mpf(2) ** 13)
            * z**6
            * (mp.sin(mp.pi * z) / (mp.pi * z)) ** 2
            * (mp.sinh(mp.pi * z) / (mp.pi * z)) ** 2
        )
        assert abs(wronskian_half(z, CTX) - ref) < _tol(28)
