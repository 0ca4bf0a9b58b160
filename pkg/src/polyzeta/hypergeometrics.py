"""Gauss hypergeometric machinery and closed generating-function sides.

Everything here is numeric (mpf/mpc at a PrecisionContext): the 2F1 series
with ratio-test truncation (Richardson-accelerated on the unit circle), the
solution pair Y1/Y2 and their combination U, the digamma-based G, the
exponential-sum A, and the assembled right-hand sides of the two
generating-function identities, plus the Jacobi-polynomial identity and the
Wronskian of the four U-products at s = 1/2.

A and G deliberately use only their series routes (valid on |z| < 1, which
covers every verification point), so no log-gamma implementation is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp

from .compositions import DomainError
from .constants import PrecisionContext, euler_gamma, zeta

DEFAULT_CTX = PrecisionContext()


@dataclass(frozen=True)
class HyperParams:
    a: object
    b: object
    c: object
    argument: object


def _is_nonpositive_int(v) -> bool:
    return mp.im(v) == 0 and mp.re(v) <= 0 and mp.re(v) == int(mp.re(v))


def gauss_2f1(p: HyperParams, ctx: PrecisionContext = DEFAULT_CTX):
    """2F1(a,b;c;arg) by direct series; extrapolated when |arg| = 1.

    Terminating cases (a or b a non-positive integer) are summed exactly.
    On the unit circle the series converges when Re(c-a-b) > 0 and is
    accelerated by Richardson extrapolation of its partial sums.
    """
    with ctx.workdps():
        a, b, c, x = (ctx.mpc(v) if mp.im(mp.mpc(v)) else ctx.mpf(mp.re(mp.mpc(v))) for v in (p.a, p.b, p.c, p.argument))
        if _is_nonpositive_int(c) and not (
            (_is_nonpositive_int(a) and mp.re(a) > mp.re(c))
            or (_is_nonpositive_int(b) and mp.re(b) > mp.re(c))
        ):
            raise DomainError("c must not be zero or a negative integer")
        terminating = _is_nonpositive_int(a) or _is_nonpositive_int(b)
        ax = abs(x)
        if not terminating and ax > 1:
            raise DomainError("series route requires |argument| <= 1")
        if not terminating and ax == 1:
            if not mp.re(c - a - b) > 0:
                raise DomainError("on |argument| = 1 convergence needs Re(c-a-b) > 0")
            return _series_on_circle(a, b, c, x, ctx)
        target = mp.mpf(10) ** (-(ctx.digits + 5))
        total = term = mp.one
        n = 0
        while True:
            term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * x
            n += 1
            total += term
            if term == 0:
                break
            if abs(term) < target * max(1, abs(total)) and n > 4:
                break
            if n > 10_000_000:
                raise DomainError("2F1 series did not converge within budget")
        return total


def _series_on_circle(a, b, c, x, ctx):
    """Richardson-accelerated summation of the unit-circle series.

    Terms are generated once by the forward recurrence (stable: pure
    products) at boosted precision, so the extrapolator's repeated term
    requests stay O(1).
    """
    cache = [mp.mpf(1) if all(mp.im(v) == 0 for v in (a, b, c, x)) else mp.mpc(1)]
    fill_prec = 3 * mp.prec

    def term(n):
        n = int(n)
        if len(cache) <= n:
            with mp.workprec(fill_prec):
                while len(cache) <= n:
                    m = len(cache) - 1
                    cache.append(
                        cache[-1] * (a + m) * (b + m) / ((c + m) * (m + 1)) * x
                    )
        return cache[n]

    return mp.nsum(term, [0, mp.inf], method="r")


def Y1(x, z, ctx: PrecisionContext = DEFAULT_CTX):
    """F(z,-z;1;x)."""
    return gauss_2f1(HyperParams(z, -z, 1, x), ctx)


def Y2(x, z, ctx: PrecisionContext = DEFAULT_CTX):
    """(1-x) F(1+z,1-z;2;1-x)."""
    with ctx.workdps():
        xv = ctx.mpc(x) if mp.im(mp.mpc(x)) else ctx.mpf(mp.re(mp.mpc(x)))
        if xv == 1:
            return mp.zero
        if abs(1 - xv) > 1:
            raise DomainError("Y2 requires |1-x| <= 1")
        return (1 - xv) * gauss_2f1(HyperParams(1 + z, 1 - z, 2, 1 - xv), ctx)


def U(s, z, ctx: PrecisionContext = DEFAULT_CTX):
    """Y1(s,z) - z Y2(s,z)."""
    return Y1(s, z, ctx) - z * Y2(s, z, ctx)


# ---------------------------------------------------------------------------
# digamma (only ever needed near argument 1) and the log expansion at 1
# ---------------------------------------------------------------------------


def psi_near_one(w, ctx: PrecisionContext = DEFAULT_CTX):
    """psi(1 + w) for |w| < 1: -gamma + sum_{k>=2} (-1)^k zeta(k) w^(k-1)."""
    with ctx.workdps():
        wv = ctx.mpc(w) if mp.im(mp.mpc(w)) else ctx.mpf(mp.re(mp.mpc(w)))
        if abs(wv) >= 1:
            raise DomainError("psi series requires |w| < 1")
        target = mp.mpf(10) ** (-(ctx.digits + 5))
        total = -euler_gamma(ctx)
        wp = mp.one
        k = 2
        while True:
            wp *= wv
            term = (-1) ** k * zeta(k, ctx) * wp
            total += term
            if abs(term) < target:
                break
            k += 1
            if k > 100_000:
                raise DomainError("psi series did not converge")
        return total


def psi_shifted(n: int, w, ctx: PrecisionContext = DEFAULT_CTX):
    """psi(n + 1 + w) via the recurrence psi(v+1) = psi(v) + 1/v."""
    total = psi_near_one(w, ctx)
    with ctx.workdps():
        wv = ctx.mpc(w) if mp.im(mp.mpc(w)) else ctx.mpf(mp.re(mp.mpc(w)))
        for j in range(1, n + 1):
            total += 1 / (j + wv)
        return total


def f21_log_near_one(z, w, ctx: PrecisionContext = DEFAULT_CTX):
    """F(1+z,1-z;2;w) by the logarithmic expansion about w = 1.

    F = [sin(pi z)/(pi z)] sum_n [(1+z)_n (1-z)_n / (n!)^2]
        * [2 psi(n+1) - psi(n+1+z) - psi(n+1-z) - log(1-w)] (1-w)^n,
    the c = a + b case of the classical connection formula.  Valid for
    0 < |1-w| < 1.
    """
    with ctx.workdps():
        zv = ctx.mpc(z) if mp.im(mp.mpc(z)) else ctx.mpf(mp.re(mp.mpc(z)))
        m = 1 - (ctx.mpc(w) if mp.im(mp.mpc(w)) else ctx.mpf(mp.re(mp.mpc(w))))
        if not 0 < abs(m) < 1:
            raise DomainError("log expansion requires 0 < |1-w| < 1")
        if zv == 0:
            pref = mp.one
        else:
            pref = mp.sin(mp.pi * zv) / (mp.pi * zv)
        lg = mp.log(m)
        target = mp.mpf(10) ** (-(ctx.digits + 5))
        total = mp.zero
        poch = mp.one  # (1+z)_n (1-z)_n / (n!)^2 * m^n
        psi_n = psi_near_one(0, ctx)  # psi(1)
        psi_p = psi_near_one(zv, ctx)
        psi_m = psi_near_one(-zv, ctx)
        n = 0
        while True:
            term = poch * (2 * psi_n - psi_p - psi_m - lg)
            total += term
            if n > 4 and abs(term) < target * max(1, abs(total)):
                break
            poch *= (1 + zv + n) * (1 - zv + n) / (n + 1) ** 2 * m
            psi_n += mp.one / (n + 1)
            psi_p += 1 / (n + 1 + zv)
            psi_m += 1 / (n + 1 - zv)
            n += 1
            if n > 1_000_000:
                raise DomainError("log expansion did not converge")
        return pref * total


# ---------------------------------------------------------------------------
# A, G and the assembled closed forms
# ---------------------------------------------------------------------------


def _a_term(k: int, ctx):
    """a_k = Li_k((-1)^k), numerically."""
    if k == 1:
        return -mp.log(2)
    zk = zeta(k, ctx)
    if k % 2 == 0:
        return zk
    return (mp.mpf(2) ** (1 - k) - 1) * zk


def A_eval(z, ctx: PrecisionContext = DEFAULT_CTX):
    """A(z) = exp(sum_{k>=1} (-1)^(k+1) a_k z^k / k), |z| < 1."""
    with ctx.workdps():
        zv = ctx.mpc(z) if mp.im(mp.mpc(z)) else ctx.mpf(mp.re(mp.mpc(z)))
        if abs(zv) >= 1:
            raise DomainError("A series requires |z| < 1")
        target = mp.mpf(10) ** (-(ctx.digits + 5))
        total = mp.zero
        zp = mp.one
        k = 1
        while True:
            zp *= zv
            term = (-1) ** (k + 1) * _a_term(k, ctx) * zp / k
            total += term
            if k > 3 and abs(term) < target:
                break
            k += 1
            if k > 200_000:
                raise DomainError("A series did not converge")
        return mp.exp(total)


def psi_sym(w, ctx: PrecisionContext = DEFAULT_CTX):
    """psi(1+w) + psi(1-w) for any non-integer w, by partial fractions.

    Equals -2 gamma - sum_m 2w^2 / (m (m^2 - w^2)); the first M > 2|w| terms
    are summed directly and the tail is expanded geometrically in (w/m)^2,
    which turns it into a fast series over zeta tail sums.
    """
    with ctx.workdps():
        wv = ctx.mpc(w) if mp.im(mp.mpc(w)) else ctx.mpf(mp.re(mp.mpc(w)))
        M = max(20, int(2 * abs(wv)) + 10)
        total = -2 * euler_gamma(ctx)
        w2 = wv * wv
        for m in range(1, M + 1):
            den = m * (m * m - w2)
            if den == 0:
                raise DomainError("psi_sym is singular at integer arguments")
            total -= 2 * w2 / den
        target = mp.mpf(10) ** (-(ctx.digits + 5))
        wp = w2
        k = 1
        while True:
            # zeta(2k+1) with the first M terms removed
            tail = zeta(2 * k + 1, ctx) - mp.fsum(
                mp.mpf(m) ** (-(2 * k + 1)) for m in range(1, M + 1)
            )
            term = 2 * wp * tail
            total -= term
            if abs(term) < target:
                break
            wp *= w2
            k += 1
            if k > 100_000:
                raise DomainError("psi_sym tail series did not converge")
        return total


def G_eval(z, ctx: PrecisionContext = DEFAULT_CTX):
    """G(z) = (1/4)[psi(1+iz) + psi(1-iz) - psi(1+z) - psi(1-z)].

    Evaluated as sum_{n>=0} z^(4n+2) zeta(4n+3) for |z| <= 0.9 and by the
    psi_sym partial-fraction route outside the series disk.
    """
    with ctx.workdps():
        zv = ctx.mpc(z) if mp.im(mp.mpc(z)) else ctx.mpf(mp.re(mp.mpc(z)))
        if zv == 0:
            return mp.zero
        if abs(zv) > mp.mpf("0.9"):
            return (psi_sym(mp.mpc(0, 1) * zv, ctx) - psi_sym(zv, ctx)) / 4
        target = mp.mpf(10) ** (-(ctx.digits + 5))
        total = mp.zero
        z4 = zv**4
        zp = zv**2
        n = 0
        while True:
            term = zp * zeta(4 * n + 3, ctx)
            total += term
            if abs(term) < target:
                break
            zp *= z4
            n += 1
            if n > 200_000:
                raise DomainError("G series did not converge")
        return total


def S_rhs(x, z, ctx: PrecisionContext = DEFAULT_CTX):
    """Closed right side of the {3,1}-family generating identity.

    G(z) Y1(x,z) Y1(x,iz) - Y1(x,iz) Y2(x,z) / (4 Y1(1,z))
                          + Y1(x,z) Y2(x,iz) / (4 Y1(1,iz)).
    """
    with ctx.workdps():
        iz = mp.mpc(0, 1) * ctx.mpc(z)
        y1z = Y1(x, z, ctx)
        y1iz = Y1(x, iz, ctx)
        out = G_eval(z, ctx) * y1z * y1iz
        y2z = Y2(x, z, ctx)
        if y2z != 0:
            out -= y1iz * y2z / (4 * Y1(1, z, ctx))
        y2iz = Y2(x, iz, ctx)
        if y2iz != 0:
            out += y1z * y2iz / (4 * Y1(1, iz, ctx))
        return out


def Sprime_one(z, ctx: PrecisionContext = DEFAULT_CTX):
    """x d/dx of the same generating function, at x = 1:

    -4 z^2 Q(z) G(z)^2 + (1/4) pi^2 z^2 Q(z) (csc^2(pi z) - csch^2(pi z)),
    with Q(z) = sin(pi z) sinh(pi z) / (pi z)^2.
    """
    with ctx.workdps():
        zv = ctx.mpc(z) if mp.im(mp.mpc(z)) else ctx.mpf(mp.re(mp.mpc(z)))
        if zv == 0:
            return mp.zero
        q = mp.sin(mp.pi * zv) * mp.sinh(mp.pi * zv) / (mp.pi * zv) ** 2
        g = G_eval(zv, ctx)
        trig = mp.csc(mp.pi * zv) ** 2 - (1 / mp.sinh(mp.pi * zv)) ** 2
        return -4 * zv**2 * q * g**2 + mp.pi**2 * zv**2 * q * trig / 4


def M_rhs(x, t, ctx: PrecisionContext = DEFAULT_CTX):
    """Closed right side of the alternating-unit-sum generating identity:

    U(s,-z) U(s,iz) / (A(-z) A(iz)), z = (1+i)t/2, s = (1+x)/2.
    """
    with ctx.workdps():
        z = (1 + mp.mpc(0, 1)) * ctx.mpc(t) / 2
        s = (1 + ctx.mpc(x)) / 2
        if mp.im(s) == 0:
            s = mp.re(s)
        denom = A_eval(-z, ctx) * A_eval(mp.mpc(0, 1) * z, ctx)
        if denom == 0:
            raise DomainError("singular denominator in M_rhs")
        return U(s, -z, ctx) * U(s, mp.mpc(0, 1) * z, ctx) / denom


def T_rhs(t, ctx: PrecisionContext = DEFAULT_CTX):
    """Closed form of the x = 1 slice of the companion generating function:

    (1+i)/2 * z A(z) A(-iz) [pi csc(pi z) - i pi csch(pi z) + 4 G(z)],
    z = (1+i)t/2.
    """
    with ctx.workdps():
        z = (1 + mp.mpc(0, 1)) * ctx.mpc(t) / 2
        if z == 0:
            return mp.one
        bracket = (
            mp.pi * mp.csc(mp.pi * z)
            - mp.mpc(0, 1) * mp.pi / mp.sinh(mp.pi * z)
            + 4 * G_eval(z, ctx)
        )
        return (1 + mp.mpc(0, 1)) / 2 * z * A_eval(z, ctx) * A_eval(-mp.mpc(0, 1) * z, ctx) * bracket


def jacobi_residual(x, n: int, ctx: PrecisionContext = DEFAULT_CTX):
    """|Y1(x,n) + n (-1)^n Y2(x,n)|: both sides terminate for integer n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    with ctx.workdps():
        return abs(Y1(x, n, ctx) + n * (-1) ** n * Y2(x, n, ctx))


def wronskian_half(z, ctx: PrecisionContext = DEFAULT_CTX):
    """Wronskian (in s, at s = 1/2) of the four products U(s,z1)U(s,z2).

    Each column is built by the Leibniz rule from the closed s-derivatives of
    U at s = 1/2: U = A(w), U' = 2wA(w), U'' = -4w(1+w)A(w),
    U''' = 8w(1+w)(2-w)A(w).
    """
    with ctx.workdps():
        zv = ctx.mpc(z)
        if zv == 0:
            raise DomainError("wronskian_half requires z != 0")
        i = mp.mpc(0, 1)
        pairs = [(zv, i * zv), (-zv, i * zv), (zv, -i * zv), (-zv, -i * zv)]

        def derivs(w):
            a = A_eval(w, ctx)
            return [a, 2 * w * a, -4 * w * (1 + w) * a, 8 * w * (1 + w) * (2 - w) * a]

        mat = mp.matrix(4, 4)
        for j, (z1, z2) in enumerate(pairs):
            d1, d2 = derivs(z1), derivs(z2)
            for r in range(4):
                mat[r, j] = sum(
                    mp.binomial(r, m) * d1[m] * d2[r - m] for m in range(r + 1)
                )
        return mp.det(mat)
