"""Closed-form evaluations of the periodic MZV and Euler-sum families.

Every function returns Reduction objects pairing a target composition with
its closed form as an exact SymbolicValue; generating-function coefficient
routes (gf_coeff_route) rebuild the same constants purely by series algebra
as independent cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .compositions import Composition
from .constants import b_seq, d_seq, zeta4_block
from .exact import GaussianRational
from .powerseries import Series, named_series
from .symbolic import SymbolicValue


@dataclass(frozen=True)
class Reduction:
    target: Composition
    closed_form: SymbolicValue
    route: str

    def numeric(self, ctx):
        return self.closed_form.numeric(ctx)


def _zeta(k: int) -> SymbolicValue:
    return SymbolicValue.zeta(k)


# -- target composition builders --------------------------------------------


def _periodic(prefix, period, reps) -> Composition:
    return Composition.of(*(list(prefix) + list(period) * reps))


# -- classical reductions ----------------------------------------------------


def euler_depth2(n: int) -> Reduction:
    """zeta(n,1) = (1/2)[n zeta(n+1) - sum_{k=1}^{n-2} zeta(n-k) zeta(k+1)]."""
    if n < 2:
        raise ValueError("depth-2 reduction requires n >= 2")
    acc = _zeta(n + 1) * n
    for k in range(1, n - 1):
        acc = acc - _zeta(n - k) * _zeta(k + 1)
    return Reduction(Composition.of(n, 1), acc / 2, "euler_depth2")


def z31_block(n: int) -> Reduction:
    """zeta({3,1}^n) = 2 pi^(4n) / (4n+2)!."""
    if n < 0:
        raise ValueError("block length must be non-negative")
    cf = SymbolicValue.pi_power(4 * n, Fraction(2, factorial(4 * n + 2)))
    return Reduction(_periodic([], [3, 1], n), cf, "z31")


def thm1(n: int, form: str = "first") -> Reduction:
    """zeta(3,{1,3}^n), two displayed but equal summation forms.

    first:  4^(-n) sum_k (-1)^k zeta(4k+3) zeta({4}^(n-k))
    second: sum_k [2 pi^(4k)/(4k+2)!] (-1/4)^(n-k) zeta(4n-4k+3)
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if form == "first":
        acc = SymbolicValue()
        for k in range(n + 1):
            acc = acc + _zeta(4 * k + 3) * zeta4_block(n - k) * ((-1) ** k)
        cf = acc / 4**n
    elif form == "second":
        acc = SymbolicValue()
        for k in range(n + 1):
            block = SymbolicValue.pi_power(4 * k, Fraction(2, factorial(4 * k + 2)))
            acc = acc + block * _zeta(4 * n - 4 * k + 3) * Fraction(
                (-1) ** (n - k), 4 ** (n - k)
            )
        cf = acc
    else:
        raise ValueError("form must be 'first' or 'second'")
    return Reduction(_periodic([3], [1, 3], n), cf, "thm1")


def thm2(n: int) -> Reduction:
    """zeta(2,{1,3}^n) = 4^(-n) sum_k (-1)^k zeta({4}^(n-k))
    [(4k+1) zeta(4k+2) - 4 sum_j zeta(4j-1) zeta(4k-4j+3)]."""
    if n < 0:
        raise ValueError("n must be non-negative")
    acc = SymbolicValue()
    for k in range(n + 1):
        inner = _zeta(4 * k + 2) * (4 * k + 1) if k > 0 else SymbolicValue.zeta(2)
        for j in range(1, k + 1):
            inner = inner - _zeta(4 * j - 1) * _zeta(4 * k - 4 * j + 3) * 4
        acc = acc + zeta4_block(n - k) * inner * ((-1) ** k)
    return Reduction(_periodic([2], [1, 3], n), acc / 4**n, "thm2")


def cor3(n: int) -> Reduction:
    """zeta(2,1,{3,1}^n): dual to zeta(3,{1,3}^n), same closed form."""
    cf = thm1(n).closed_form
    return Reduction(_periodic([2, 1], [3, 1], n), cf, "cor3")


# -- alternating unit Euler sums (generating-coefficient families) ----------


@lru_cache(maxsize=None)
def _cream_series(order: int) -> Series:
    """c_m: coefficients of exp(sum_k b_k x^k / k)."""
    gen = [SymbolicValue()]
    for k in range(1, order + 1):
        gen.append(b_seq(k) / k)
    return Series(gen).exp()


@lru_cache(maxsize=None)
def _cheese_series(order: int) -> Series:
    """c'_m = sum_k c_k d_(m-k): Cauchy product of c with the d sequence."""
    d = Series([d_seq(k) for k in range(order + 1)])
    return _cream_series(order) * d


def cream_coefficient(m: int) -> SymbolicValue:
    return _cream_series(max(m, 1)).coeff(m)


def cheese_coefficient(m: int) -> SymbolicValue:
    return _cheese_series(max(m, 1)).coeff(m)


def cream(n: int) -> tuple[Reduction, Reduction]:
    """zeta({1bar,1}^n) = c_(2n) and zeta(1bar,{1,1bar}^n) = c_(2n+1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    even = Reduction(
        _periodic([], [-1, 1], n), cream_coefficient(2 * n), "cream"
    )
    odd = Reduction(
        _periodic([-1], [1, -1], n), cream_coefficient(2 * n + 1), "cream"
    )
    return even, odd


def cheese(n: int) -> tuple[Reduction, Reduction]:
    """zeta(1bar,{1bar,1}^n) = c'_(2n+1) and zeta(1bar,1bar,{1,1bar}^n) = c'_(2n+2)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    odd = Reduction(
        _periodic([-1], [-1, 1], n), cheese_coefficient(2 * n + 1), "cheese"
    )
    even = Reduction(
        _periodic([-1, -1], [1, -1], n), cheese_coefficient(2 * n + 2), "cheese"
    )
    return odd, even


# -- multiple polylogarithms at one half -------------------------------------

# family key -> (prefix, period, sign, series kind, index offset)
# target is zeta_{1/2}(prefix, period^n); value is sign * series[4n + offset]
HALF_DUAL_FAMILIES = {
    "31block": ((), (3, 1), 1, "cream", 0),
    "21-31": ((2, 1), (3, 1), 1, "cream", 3),
    "11-31": ((1, 1), (3, 1), 1, "cream", 2),
    "1-31": ((1,), (3, 1), -1, "cream", 1),
    "3-13": ((3,), (1, 3), -1, "cheese", 3),
    "2-13": ((2,), (1, 3), -1, "cheese", 2),
    "1-13": ((1,), (1, 3), -1, "cheese", 1),
    "13block": ((1, 3), (1, 3), 1, "cheese", 4),
}


def half_duals(family: str, n: int) -> Reduction:
    """The eight zeta_{1/2} families, each a signed cream/cheese coefficient.

    For '13block' the target is {1,3}^(n+1) (the n = 0 member is already
    nontrivial); for every other family it is prefix,{period}^n.
    """
    if family not in HALF_DUAL_FAMILIES:
        raise ValueError(f"unknown half-dual family {family!r}")
    if n < 0:
        raise ValueError("n must be non-negative")
    prefix, period, sign, kind, offset = HALF_DUAL_FAMILIES[family]
    target = _periodic(prefix, period, n)
    coeff = cream_coefficient if kind == "cream" else cheese_coefficient
    cf = coeff(4 * n + offset) * sign
    return Reduction(target, cf, "half_dual")


def match_family(comp: Composition, x) -> Reduction | None:
    """Find the reduction family containing the given expanded composition.

    x selects the table: Fraction(1,2) for the half-dual families, 1 for
    everything else.  Returns None when no family matches.
    """
    args = [(-a.magnitude if a.barred else a.magnitude) for a in comp.args]

    def matches(prefix, period):
        body = args[len(prefix):]
        if list(args[: len(prefix)]) != list(prefix):
            return None
        p = list(period)
        if p and (len(body) % len(p) or any(
            body[i] != p[i % len(p)] for i in range(len(body))
        )):
            return None
        if not p and body:
            return None
        return len(body) // len(p) if p else 0

    if x == Fraction(1, 2):
        for fam, (prefix, period, _, _, _) in HALF_DUAL_FAMILIES.items():
            n = matches(prefix, period)
            if n is not None:
                return half_duals(fam, n)
        return None
    if x != 1:
        return None
    candidates = [
        ((), (3, 1), lambda n: z31_block(n)),
        ((3,), (1, 3), lambda n: thm1(n)),
        ((2,), (1, 3), lambda n: thm2(n)),
        ((2, 1), (3, 1), lambda n: cor3(n)),
        ((), (-1, 1), lambda n: cream(n)[0]),
        ((-1,), (1, -1), lambda n: cream(n)[1]),
        ((-1,), (-1, 1), lambda n: cheese(n)[0]),
        ((-1, -1), (1, -1), lambda n: cheese(n)[1]),
    ]
    for prefix, period, make in candidates:
        n = matches(prefix, period)
        if n is not None:
            try:
                return make(n)
            except ValueError:
                continue
    if len(args) == 2 and args[1] == 1 and args[0] >= 2:
        return euler_depth2(args[0])
    return None


# -- generating-function coefficient routes ----------------------------------

_LAM = GaussianRational(Fraction(1, 2), Fraction(1, 2))  # (1+i)/2 = 1/(1-i)


def gf_coeff_route(which: str, order: int) -> Series:
    """Maclaurin coefficients of the named generating function, assembled
    purely by series algebra (exp, Cauchy products, csc/csch series).

    bbb14    A(t/(1-i)) A(t/(1+i))           -- must reproduce the c_m
    tmilk    the x=1 slice of the alternating-sum generating function,
             (1+i)/2 * z A(z)A(-iz)[pi csc - i pi csch + 4G], z=(1+i)t/2
             -- must reproduce the c'_m
    S1       G(z) Q(z)                        -- coefficients 4^(-n)-scale
                                                 the zeta(3,{1,3}^n) family
    Sprime1  -4z^2 Q G^2 + (pi^2 z^2 Q/4)(csc^2 - csch^2), all as series
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if which == "bbb14":
        a = named_series("A", order)
        prod = a.scaled_var(_LAM) * a.scaled_var(_LAM.conjugate())
        return Series([c.real_part() for c in prod.coeffs])
    if which == "tmilk":
        a = named_series("A", order)
        zg = named_series("G", order).shift_up().truncate(order)
        bracket = (
            named_series("zcsc", order)
            + named_series("zcsch", order) * GaussianRational(0, -1)
            + zg * 4
        )
        minus_i_lam = _LAM * GaussianRational(0, -1)  # -i(1+i)/2 = (1-i)/2
        t_series = (
            a.scaled_var(_LAM) * a.scaled_var(minus_i_lam) * bracket.scaled_var(_LAM)
        ) * (GaussianRational(Fraction(1, 2), Fraction(1, 2)))
        return Series([c.real_part() for c in t_series.coeffs])
    if which == "S1":
        return named_series("G", order) * named_series("Q", order)
    if which == "Sprime1":
        q = named_series("Q", order)
        g = named_series("G", order)
        trig = named_series("csc2", order) - named_series("csch2", order)
        core = (q * g * g) * (-4) + (q * trig) * Fraction(1, 4)
        return core.shift_up().shift_up().truncate(order)
    raise ValueError(f"unknown route {which!r}")
