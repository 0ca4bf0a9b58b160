"""Brute-force summation oracle for multiple polylogarithms and Euler sums.

Evaluates zeta_x(s1,...,sk) = sum over n1 > ... > nk >= 1 of
x^n1 * prod_j sigma_j^(n_j) n_j^(-|s_j|) by a prefix-sum dynamic program
(cost O(depth * N) instead of O(N^depth)), with three acceleration modes:

  * geometric      plain truncation for x <= 0.95 (geometric tail envelope);
  * richardson     x = 1, unbarred head s1 >= 2: three-point fit of the tail
                   model (c1 ln N + c2) / N^(s1-1) at N, 2N, 4N, with the
                   partial sums accumulated in numpy extended precision;
  * euler_transform x = 1, barred head: iterated pairwise averaging of the
                   outer partial sums, then a least-assumption solve against
                   a {ln^j N / N^i} tail basis (the averaging alone stalls
                   near 1e-6 because the sums carry monotone 1/N components
                   on top of the alternating part).

All entry points are pure functions of their arguments plus an explicit
PrecisionContext.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp

from .compositions import Composition, DomainError, is_convergent
from .constants import GUARD_DIGITS, PrecisionContext

DEFAULT_CTX = PrecisionContext()

GEOMETRIC_X_MAX = Fraction(95, 100)
GEOMETRIC_BUDGET = 20_000
RICHARDSON_BASE_N = 250_000
RICHARDSON_MAX_N = 2_000_000  # outer budget 4*N + N/2 partial terms
AVERAGING_ROUNDS = 24
AVERAGING_TERMS = 3_000


@dataclass(frozen=True)
class EvalResult:
    """Oracle output: value plus a heuristic tail-error estimate."""

    value: object
    err_bound: object
    terms_used: int
    method: str
    warning: bool = False


def _signed_powers(comp: Composition):
    return [(a.magnitude, -1 if a.barred else 1) for a in comp.args]


def eval_truncated(comp: Composition, x, N: int, ctx: PrecisionContext = DEFAULT_CTX):
    """Exact partial sum over n1 <= N.

    Returns a Fraction when x is given exactly (int or Fraction), an mpf
    otherwise.  The recursion builds inner accumulators from the innermost
    argument outward; each level is a single prefix-sum pass.
    """
    if comp.depth == 0:
        return Fraction(1) if isinstance(x, (int, Fraction)) else ctx.mpf(1)
    if N < comp.depth:
        raise ValueError("N must be at least the depth")
    exact = isinstance(x, (int, Fraction))
    if exact:
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise DomainError("x must lie in [0, 1]")
        if x == 1 and not is_convergent(comp, True):
            raise DomainError("divergent composition at x = 1")
        return _truncated_exact(_signed_powers(comp), x, N)
    with ctx.workdps():
        xv = ctx.mpf(x)
        if not 0 <= xv <= 1:
            raise DomainError("x must lie in [0, 1]")
        if xv == 1 and not is_convergent(comp, True):
            raise DomainError("divergent composition at x = 1")
        return _truncated_mpf(_signed_powers(comp), xv, N)


def _truncated_exact(levels, x: Fraction, N: int) -> Fraction:
    prev = [Fraction(1)] * (N + 1)
    for s, sg in reversed(levels[1:]):
        cur = [Fraction(0)] * (N + 1)
        acc = Fraction(0)
        for m in range(1, N + 1):
            acc += Fraction(sg**m, m**s) * prev[m - 1]
            cur[m] = acc
        prev = cur
    s, sg = levels[0]
    total = Fraction(0)
    xp = Fraction(1)
    for n in range(1, N + 1):
        xp *= x
        if xp == 0:
            break
        total += xp * Fraction(sg**n, n**s) * prev[n - 1]
    return total


def _truncated_mpf(levels, x, N: int):
    prev = [mp.one] * (N + 1)
    for s, sg in reversed(levels[1:]):
        cur = [mp.zero] * (N + 1)
        acc = mp.zero
        for m in range(1, N + 1):
            acc += sg**m * mp.mpf(m) ** (-s) * prev[m - 1]
            cur[m] = acc
        prev = cur
    s, sg = levels[0]
    total = mp.zero
    xp = mp.one
    for n in range(1, N + 1):
        xp *= x
        total += xp * sg**n * mp.mpf(n) ** (-s) * prev[n - 1]
    return total


def coeff_x_exact(comp: Composition, m: int) -> Fraction:
    """[x^m] zeta_x(comp), exactly: the finite nested sum with n1 = m."""
    if m < 0:
        raise ValueError("coefficient index must be non-negative")
    if comp.depth == 0:
        return Fraction(1 if m == 0 else 0)
    if m < comp.depth:
        return Fraction(0)
    levels = _signed_powers(comp)
    prev = [Fraction(1)] * m
    for s, sg in reversed(levels[1:]):
        cur = [Fraction(0)] * m
        acc = Fraction(0)
        for k in range(1, m):
            acc += Fraction(sg**k, k**s) * prev[k - 1]
            cur[k] = acc
        prev = cur
    s, sg = levels[0]
    return Fraction(sg**m, m**s) * prev[m - 1]


# ---------------------------------------------------------------------------
# Accelerated evaluation
# ---------------------------------------------------------------------------


def eval_auto(
    comp: Composition, x, tol, ctx: PrecisionContext = DEFAULT_CTX
) -> EvalResult:
    """Evaluate to (heuristically) within tol, choosing the scheme by regime."""
    with ctx.workdps():
        tol = ctx.mpf(tol)
        if comp.depth == 0:
            return EvalResult(mp.one, mp.zero, 0, "exact_coeff")
        exact_x = isinstance(x, (int, Fraction))
        xq = Fraction(x) if exact_x else None
        xv = ctx.mpf(x)
        if not 0 <= xv <= 1:
            raise DomainError("x must lie in [0, 1]")
        if xv == 0:
            return EvalResult(mp.zero, mp.zero, 0, "exact_coeff")
        if xv <= ctx.mpf(GEOMETRIC_X_MAX):
            return _geometric(comp, xq if exact_x else xv, xv, tol, ctx)
        if xv != 1:
            raise DomainError(
                "x between 0.95 and 1 is outside the supported acceleration regimes"
            )
        if not is_convergent(comp, True):
            raise DomainError("divergent composition at x = 1")
        if comp.args[0].barred:
            return _euler_transform(comp, tol, ctx)
        return _richardson(comp, tol, ctx)


def _geometric(comp, x, xv, tol, ctx) -> EvalResult:
    """Plain truncation; terms decay like x^n up to a poly-log factor."""
    levels = _signed_powers(comp)
    exact = isinstance(x, Fraction)
    # size the truncation from the geometric envelope x^N ~ tol, then walk
    # the outer sum until the running tail estimate actually drops below tol
    need = int(mp.ceil((-mp.log(tol) + 10) / (-mp.log(xv)))) + comp.depth + 10
    N = min(max(need, comp.depth + 10), GEOMETRIC_BUDGET)
    prev = [Fraction(1) if exact else mp.one] * (N + 1)
    for s, sg in reversed(levels[1:]):
        cur = [Fraction(0) if exact else mp.zero] * (N + 1)
        acc = Fraction(0) if exact else mp.zero
        for m in range(1, N + 1):
            if exact:
                acc += Fraction(sg**m, m**s) * prev[m - 1]
            else:
                acc += sg**m * mp.mpf(m) ** (-s) * prev[m - 1]
            cur[m] = acc
        prev = cur
    s, sg = levels[0]
    total = Fraction(0) if exact else mp.zero
    xp = Fraction(1) if exact else mp.one
    ratio = xv / (1 - xv)
    envelope = mp.inf
    n = 0
    for n in range(1, N + 1):
        xp *= x
        term = xp * (Fraction(sg**n, n**s) if exact else sg**n * mp.mpf(n) ** (-s)) * prev[n - 1]
        total += term
        # inner accumulators grow at most poly-logarithmically in n
        inner = ctx.mpf(abs(prev[n - 1])) if prev[n - 1] else mp.one
        envelope = ctx.mpf(xp) * max(mp.one, inner) * ratio
        if n >= comp.depth + 2 and envelope < tol:
            break
    value = ctx.mpf(total) if exact else total
    warning = bool(envelope > tol)
    return EvalResult(value, envelope, n, "geometric", warning)


def _to_mpf_pair(v) -> object:
    """Lossless numpy longdouble -> mpf via a two-float split."""
    hi = float(v)
    return mp.mpf(hi) + mp.mpf(float(v - np.longdouble(hi)))


def _partials_numpy(levels, Nmax: int, cuts):
    """Outer partial sums at the given cut indices, extended precision."""
    n = np.arange(0, Nmax + 1, dtype=np.longdouble)
    n[0] = 1.0
    prev = np.ones(Nmax + 1, dtype=np.longdouble)
    for s, sg in reversed(levels[1:]):
        t = n ** (-np.longdouble(s))
        t[0] = 0.0
        if sg < 0:
            t[1::2] *= -1
        t[1:] *= prev[:-1]
        prev = np.cumsum(t)
    s, sg = levels[0]
    t = n ** (-np.longdouble(s))
    t[0] = 0.0
    if sg < 0:
        t[1::2] *= -1
    t[1:] *= prev[:-1]
    S = np.cumsum(t)
    return [_to_mpf_pair(S[c]) for c in cuts]


def _tail_fit(partials, cuts, p):
    """Solve S(N) = L - (c1 ln N + c2)/N^p through three (N, S(N)) points."""
    rows, rhs = [], []
    for Nc, SN in zip(cuts, partials):
        Nm = mp.mpf(Nc)
        rows.append([mp.one, -mp.log(Nm) / Nm**p, -mp.one / Nm**p])
        rhs.append(SN)
    return mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))[0]


def _richardson(comp, tol, ctx) -> EvalResult:
    levels = _signed_powers(comp)
    p = levels[0][0] - 1
    N = RICHARDSON_BASE_N
    value = err = None
    while True:
        cuts = [N // 2, N, 2 * N, 4 * N]
        S = _partials_numpy(levels, 4 * N, cuts)
        lo = _tail_fit(S[:3], cuts[:3], p)
        value = _tail_fit(S[1:], cuts[1:], p)
        err = abs(value - lo)
        if err < tol or N >= RICHARDSON_MAX_N:
            break
        N *= 4
    # extended-precision accumulation floor: ~1e-19 * partial-sum magnitude
    floor = mp.mpf(2e-19) * (abs(value) + 1) * mp.log(4 * N)
    err = max(err, floor)
    return EvalResult(value, err, 4 * N, "richardson", bool(err > tol))


def _euler_transform(comp, tol, ctx) -> EvalResult:
    levels = _signed_powers(comp)
    M = AVERAGING_TERMS
    partials = _partials_sequence_mpf(levels, M)
    value = _average_and_fit(partials, AVERAGING_ROUNDS)
    check = _average_and_fit(partials[: 3 * M // 4], AVERAGING_ROUNDS)
    err = abs(value - check) + mp.mpf(10) ** (-(ctx.digits - GUARD_DIGITS))
    return EvalResult(value, err, M, "euler_transform", bool(err > tol))


def _partials_sequence_mpf(levels, M: int):
    prev = [mp.one] * (M + 1)
    for s, sg in reversed(levels[1:]):
        cur = [mp.zero] * (M + 1)
        acc = mp.zero
        for m in range(1, M + 1):
            acc += sg**m * mp.mpf(m) ** (-s) * prev[m - 1]
            cur[m] = acc
        prev = cur
    s, sg = levels[0]
    out = []
    acc = mp.zero
    for n in range(1, M + 1):
        acc += sg**n * mp.mpf(n) ** (-s) * prev[n - 1]
        out.append(acc)
    return out


def _average_and_fit(partials, rounds: int, basis_i: int = 4, basis_j: int = 2):
    """Iterated pairwise averaging, then an exact solve over a log tail basis.

    Averaging kills the alternating component; the remaining smooth tail is
    modeled as sum over 1 <= i <= basis_i, 0 <= j <= basis_j of
    c_ij ln^j(N) / N^i plus the limit, solved through exactly as many sample
    points as unknowns.
    """
    seq = list(partials)
    for _ in range(rounds):
        seq = [(a + b) / 2 for a, b in zip(seq, seq[1:])]
    M = len(seq)
    npts = 1 + basis_i * (basis_j + 1)
    base = max(M // 8, 1)
    idxs = sorted(
        {int(round(base * ((M - 1) / base) ** (r / (npts - 1)))) for r in range(npts)}
    )
    c = M - 1
    while len(idxs) < npts:
        if c not in idxs:
            idxs.append(c)
            idxs.sort()
        c -= 1
    rows, rhs = [], []
    for ix in idxs[:npts]:
        N = mp.mpf(ix + 1 + rounds / 2)
        row = [mp.one]
        for i in range(1, basis_i + 1):
            for j in range(basis_j + 1):
                row.append(mp.log(N) ** j / N**i)
        rows.append(row)
        rhs.append(seq[ix])
    return mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))[0]
