"""High-precision constants and the exact zeta-at-even table."""

from fractions import Fraction

import pytest
from mpmath import mp

from polyzeta.constants import (
    PrecisionContext,
    a_seq,
    b_seq,
    d_seq,
    euler_gamma,
    log2,
    pi,
    zeta,
    zeta4_block,
    zeta_even_symbolic,
)

CTX = PrecisionContext(60)


def _close(a, b, eps=None):
    eps = eps or mp.mpf(10) ** (-(CTX.digits - 5))
    return abs(mp.mpf(a) - mp.mpf(b)) < eps


def test_pi_log2_gamma():
    with CTX.workdps():
        assert _close(pi(CTX), mp.pi)
        assert _close(log2(CTX), mp.log(2))
        assert _close(euler_gamma(CTX), mp.euler)


@pytest.mark.parametrize("s", [2, 3, 7, 20, 41, 80])
def test_zeta_matches_mpmath(s):
    with CTX.workdps():
        assert _close(zeta(s, CTX), mp.zeta(s))


def test_zeta_even_symbolic():
    with CTX.workdps():
        # zeta(2) = pi^2/6, zeta(4) = pi^4/90, zeta(6) = pi^6/945
        assert _close(zeta_even_symbolic(2).numeric(CTX), zeta(2, CTX))
        assert _close(zeta_even_symbolic(4).numeric(CTX), mp.pi**4 / 90)
        assert _close(zeta_even_symbolic(6).numeric(CTX), mp.pi**6 / 945)


def test_zeta4_block_values():
    with CTX.workdps():
        # zeta({4}^n) = 4^n * 2 pi^(4n) / (4n+2)!
        assert zeta4_block(0).numeric(CTX) == 1
        assert _close(zeta4_block(1).numeric(CTX), mp.pi**4 / 90)
        assert _close(zeta4_block(2).numeric(CTX), 4**2 * 2 * mp.pi**8 / mp.factorial(10))


def test_a_seq_values():
    with CTX.workdps():
        # a_1 = Li_1(-1) = -log 2; a_2 = Li_2(1) = zeta(2)
        assert _close(a_seq(1).numeric(CTX), -mp.log(2))
        assert _close(a_seq(2).numeric(CTX), mp.pi**2 / 6)
        assert _close(a_seq(3).numeric(CTX), -mp.mpf(3) / 4 * mp.zeta(3))


def test_b_seq_values():
    with CTX.workdps():
        # b_1 = -log 2; b_k vanishes for k = 2 mod 4; b_4 = zeta(4)/2
        assert _close(b_seq(1).numeric(CTX), -mp.log(2))
        assert b_seq(2).numeric(CTX) == 0
        assert _close(b_seq(4).numeric(CTX), mp.zeta(4) / 2)


def test_d_seq_signs():
    with CTX.workdps():
        d2 = mp.mpf(d_seq(2).numeric(CTX))
        d4 = mp.mpf(d_seq(4).numeric(CTX))
        d6 = mp.mpf(d_seq(6).numeric(CTX))
        # even-index signs follow (-1)^floor((k+2)/4): -, -, +, ...
        assert d2 < 0 and d4 < 0 and d6 > 0


def test_precision_context_validation():
    with pytest.raises(ValueError):
        PrecisionContext(10)
    ctx = PrecisionContext(30)
    assert ctx.mpf(Fraction(1, 3)) is not None
