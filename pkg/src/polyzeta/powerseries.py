"""Truncated formal power series over pluggable coefficient rings.

Coefficients may be Fractions, Gaussian rationals, SymbolicValues or mpmath
numbers; the only requirements are ring arithmetic with ints and, for
exp/log, division by ints.  A companion LogSeries type adjoins powers of
log(var), which is what the regular-singular solutions of the underlying
hypergeometric equation live in.
"""

from __future__ import annotations

from fractions import Fraction

from .constants import zeta4_block, a_seq
from .symbolic import SymbolicValue


class SeriesOrderError(IndexError):
    pass


class Series:
    """Immutable truncated power series: coeffs[k] is the x^k coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least one coefficient")
        if order is not None:
            zero = coeffs[0] * 0
            if order + 1 < len(coeffs):
                coeffs = coeffs[: order + 1]
            else:
                coeffs.extend([zero] * (order + 1 - len(coeffs)))
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def zero_coeff(self):
        return self.coeffs[0] * 0

    def coeff(self, k: int):
        if not 0 <= k <= self.order:
            raise SeriesOrderError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, order)

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order)
            out = []
            for k in range(n + 1):
                acc = self.coeffs[0] * other.coeffs[k]
                for j in range(1, k + 1):
                    acc = acc + self.coeffs[j] * other.coeffs[k - j]
                out.append(acc)
            return Series(out)
        return Series([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        zero = self.zero_coeff
        return all(c == zero for c in self.coeffs)

    def differentiate(self) -> "Series":
        if self.order == 0:
            return Series([self.zero_coeff])
        return Series([self.coeffs[k] * k for k in range(1, self.order + 1)])

    def shift_up(self) -> "Series":
        """Multiply by the variable (order grows by one)."""
        return Series([self.zero_coeff, *self.coeffs])

    def shift_down(self) -> "Series":
        """Divide by the variable; the constant term must vanish."""
        if self.coeffs[0] != self.zero_coeff:
            raise ValueError("cannot divide by the variable: nonzero constant term")
        if self.order == 0:
            return Series([self.zero_coeff])
        return Series(self.coeffs[1:])

    def scaled_var(self, lam) -> "Series":
        """Substitute var -> lam * var."""
        out, p = [], None
        for k, c in enumerate(self.coeffs):
            p = 1 if k == 0 else p * lam
            out.append(c * p)
        return Series(out)

    def exp(self) -> "Series":
        """exp of a series with zero constant term."""
        if self.coeffs[0] != self.zero_coeff:
            raise ValueError("exp_series requires zero constant term")
        one = self.zero_coeff + 1
        out = [one]
        for m in range(1, self.order + 1):
            acc = self.zero_coeff
            for k in range(1, m + 1):
                acc = acc + (self.coeffs[k] * k) * out[m - k]
            out.append(acc / m)
        return Series(out)

    def log(self) -> "Series":
        """Formal logarithm of a series with constant term 1."""
        one = self.zero_coeff + 1
        if self.coeffs[0] != one:
            raise ValueError("log_series requires constant term 1")
        out = [self.zero_coeff]
        for m in range(1, self.order + 1):
            acc = self.coeffs[m] * m
            for k in range(1, m):
                acc = acc - (out[k] * k) * self.coeffs[m - k]
            out.append(acc / m)
        return Series(out)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if self.order > 5 else ""
        return f"Series([{shown}{more}]; order={self.order})"


def add(a: Series, b: Series) -> Series:
    return a + b


def scale(a: Series, c) -> Series:
    return a * c


def cauchy_product(a: Series, b: Series) -> Series:
    return a * b


def exp_series(s: Series) -> Series:
    return s.exp()


def coeff(s: Series, k: int):
    return s.coeff(k)


def apply_D0(s: Series) -> Series:
    """D0 = var * d/dvar."""
    return Series([s.coeffs[k] * k for k in range(s.order + 1)])


def apply_D1(s: Series) -> Series:
    """D1 = (1 - var) * d/dvar; loses one truncation order."""
    if s.order == 0:
        return Series([s.zero_coeff])
    return Series(
        [s.coeffs[k + 1] * (k + 1) - s.coeffs[k] * k for k in range(s.order)]
    )


class LogSeries:
    """Element sum_j parts[j] * log(var)^j with power-series parts."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if not parts:
            raise ValueError("LogSeries needs at least the log^0 part")
        self.parts = parts

    @classmethod
    def from_series(cls, s: Series) -> "LogSeries":
        return cls((s,))

    @property
    def order(self) -> int:
        return min(p.order for p in self.parts)

    def _padded(self, n):
        zero = Series([self.parts[0].zero_coeff], self.parts[0].order)
        return list(self.parts) + [zero] * (n - len(self.parts))

    def __add__(self, other):
        if isinstance(other, Series):
            other = LogSeries.from_series(other)
        n = max(len(self.parts), len(other.parts))
        a, b = self._padded(n), other._padded(n)
        return LogSeries([x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        if isinstance(other, Series):
            other = LogSeries.from_series(other)
        n = max(len(self.parts), len(other.parts))
        a, b = self._padded(n), other._padded(n)
        return LogSeries([x - y for x, y in zip(a, b)])

    def __neg__(self):
        return LogSeries([-p for p in self.parts])

    def __mul__(self, other):
        if isinstance(other, Series):
            other = LogSeries.from_series(other)
        if isinstance(other, LogSeries):
            n = len(self.parts) + len(other.parts) - 1
            zero = Series([self.parts[0].zero_coeff], self.parts[0].order)
            out = [zero] * n
            for i, p in enumerate(self.parts):
                for j, q in enumerate(other.parts):
                    out[i + j] = out[i + j] + p * q
            return LogSeries(out)
        return LogSeries([p * other for p in self.parts])

    __rmul__ = __mul__

    def apply_E0(self) -> "LogSeries":
        """E0 = var * d/dvar on the log-extended ring (no order loss)."""
        J = len(self.parts)
        out = []
        for j in range(J):
            part = apply_D0(self.parts[j])
            if j + 1 < J:
                part = part + self.parts[j + 1] * (j + 1)
            out.append(part)
        return LogSeries(out)

    def apply_E1(self) -> "LogSeries":
        """E1 = (1 - var) * d/dvar; loses one order.

        Requires every log^(j>=1) part to vanish at var = 0, which holds for
        the regular-singular solutions built below.
        """
        J = len(self.parts)
        out = []
        for j in range(J):
            part = apply_D1(self.parts[j])
            if j + 1 < J:
                q = self.parts[j + 1].shift_down()
                one_minus = Series([q.zero_coeff + 1, q.zero_coeff - 1], q.order)
                part = part + (one_minus * q).truncate(part.order) * (j + 1)
            out.append(part)
        return LogSeries(out)

    def truncate(self, order: int) -> "LogSeries":
        return LogSeries([p.truncate(order) for p in self.parts])

    def max_abs_coeff(self, upto=None) -> float:
        m = 0.0
        for p in self.parts:
            hi = p.order if upto is None else min(upto, p.order)
            for k in range(hi + 1):
                m = max(m, _abs_of(p.coeffs[k]))
        return m

    def is_zero(self, upto=None) -> bool:
        for p in self.parts:
            zero = p.zero_coeff
            hi = p.order if upto is None else min(upto, p.order)
            if any(p.coeffs[k] != zero for k in range(hi + 1)):
                return False
        return True


def _abs_of(c) -> float:
    if isinstance(c, Fraction):
        return abs(float(c))
    return float(abs(c))


# ---------------------------------------------------------------------------
# Hypergeometric solution series (exact rational parameterization t = z^2)
# ---------------------------------------------------------------------------


def y1_series_in_x(t, order: int) -> Series:
    """Maclaurin series in x of F(z,-z;1;x) with t = z^2 exact.

    Coefficients: prod_{j<n}(j^2 - t) / (n!)^2, rational in t.
    """
    one = t * 0 + 1
    out = [one]
    for n in range(1, order + 1):
        out.append(out[-1] * (((n - 1) ** 2 - t)) / (n * n))
    return Series(out)


def ode_analytic_solution(t, order: int) -> Series:
    """Power-series solution of (E0 E1 + t) y = 0 starting at var^1.

    In the w = 1-x chart this is (up to normalization) the terminating-free
    branch w*F(1+z,1-z;2;w) with t = z^2.
    """
    zero = t * 0
    out = [zero, zero + 1]
    for n in range(1, order):
        out.append(out[n] * (n * n - t) / (n * (n + 1)))
    return Series(out)


def ode_log_solution(t, order: int) -> LogSeries:
    """Regular-singular solution u0*log(var) + h of (E0 E1 + t) y = 0.

    u0 is the analytic solution; h solves (E0 E1 + t) h = -R with
    R = 2(1-var) u0' - u0/var (the log cross terms).
    """
    u0 = ode_analytic_solution(t, order + 1)
    du = u0.differentiate()
    one_minus = Series([du.zero_coeff + 1, du.zero_coeff - 1], du.order)
    R = (one_minus * du) * 2 - u0.shift_down()
    zero = t * 0
    h = [-R.coeffs[0] / t, zero]
    for n in range(1, order):
        h.append(((n * n - t) * h[n] - R.coeffs[n]) / (n * (n + 1)))
    return LogSeries([Series(h), u0.truncate(order)])


def annihilation_residual(s, t, order: int, chart: str = "x"):
    """Max |coefficient| of (D1^2 D0^2 + 4 t^2) s up to the given order.

    chart 'x': operator D1 D1 D0 D0 (expansion about x=0);
    chart 'w': the mirrored operator E0 E0 E1 E1 (expansion about x=1 in
    w = 1-x).  Returns exact 0 (int) when the residual vanishes identically.
    """
    if isinstance(s, Series):
        s = LogSeries.from_series(s)
    if chart == "x":
        r = s.apply_E0().apply_E0()
        r = r.apply_E1().apply_E1()
    elif chart == "w":
        r = s.apply_E1().apply_E1()
        r = r.apply_E0().apply_E0()
    else:
        raise ValueError("chart must be 'x' or 'w'")
    r = r + s * (t * t * 4)
    if r.is_zero(upto=order):
        return 0
    return r.max_abs_coeff(upto=order)


# ---------------------------------------------------------------------------
# Named symbolic series
# ---------------------------------------------------------------------------


def _sym(q) -> SymbolicValue:
    return SymbolicValue.rational(q)


def _cot_series(order: int, half: bool = False, hyperbolic: bool = False) -> Series:
    """Regular part K of pi*cot(pi z) = 1/z + K(z): K = -2 sum zeta(2k) z^(2k-1).

    half=True evaluates K(z/2); hyperbolic=True gives the coth counterpart
    (extra (-1)^k from z -> iz).
    """
    out = [SymbolicValue() for _ in range(order + 1)]
    for k in range(1, order // 2 + 2):
        e = 2 * k - 1
        if e > order:
            break
        c = SymbolicValue.zeta(2 * k) * (-2)
        if hyperbolic:
            c = c * ((-1) ** k)
        if half:
            c = c * Fraction(1, 2 ** (2 * k - 1))
        out[e] = c
    return Series(out)


def _sinc_series(order: int, hyperbolic: bool = False) -> Series:
    """sin(pi z)/(pi z) (or sinh) as a symbolic series in z."""
    from math import factorial

    out = [SymbolicValue() for _ in range(order + 1)]
    for n in range(0, order // 2 + 1):
        sign = 1 if hyperbolic else (-1) ** n
        out[2 * n] = SymbolicValue.pi_power(2 * n, Fraction(sign, factorial(2 * n + 1)))
    return Series(out)


def named_series(which: str, order: int, param=None) -> Series:
    """Maclaurin series of the named generating functions.

    A      exp-form generating function of zeta({1bar}^n)
    G      sum z^(4n+2) zeta(4n+3)
    Q      sin(pi z)/(pi z) * sinh(pi z)/(pi z) (product route)
    csc2   regular part of pi^2 csc^2(pi z) (the 1/z^2 pole removed)
    csch2  regular part of pi^2 csch^2(pi z)
    zcsc   pi z csc(pi z)
    zcsch  pi z csch(pi z)
    Y1_in_x  F(z,-z;1;x) in x, with param = z^2 exact (required)
    """
    if which == "A":
        gen = [SymbolicValue()]
        for k in range(1, order + 1):
            gen.append(a_seq(k) * Fraction((-1) ** (k + 1), k))
        return Series(gen).exp()
    if which == "G":
        out = [SymbolicValue() for _ in range(order + 1)]
        n = 0
        while 4 * n + 2 <= order:
            out[4 * n + 2] = SymbolicValue.zeta(4 * n + 3)
            n += 1
        return Series(out)
    if which == "Q":
        return _sinc_series(order) * _sinc_series(order, hyperbolic=True)
    if which == "csc2":
        return -_cot_series(order + 1).differentiate()
    if which == "csch2":
        return -_cot_series(order + 1, hyperbolic=True).differentiate()
    if which == "zcsc":
        diff = _cot_series(order, half=True) - _cot_series(order)
        return Series([_sym(1)], order) + diff.shift_up().truncate(order)
    if which == "zcsch":
        diff = _cot_series(order, half=True, hyperbolic=True) - _cot_series(
            order, hyperbolic=True
        )
        return Series([_sym(1)], order) + diff.shift_up().truncate(order)
    if which == "Y1_in_x":
        if param is None:
            raise ValueError("Y1_in_x requires param = z^2")
        return y1_series_in_x(param, order)
    raise ValueError(f"unknown series {which!r}")


def q_series_from_blocks(order: int) -> Series:
    """Q(z) = sum (-1)^n z^(4n) zeta({4}^n): the closed-block route."""
    out = [SymbolicValue() for _ in range(order + 1)]
    n = 0
    while 4 * n <= order:
        out[4 * n] = zeta4_block(n) * ((-1) ** n)
        n += 1
    return Series(out)
