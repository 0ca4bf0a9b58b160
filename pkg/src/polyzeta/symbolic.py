"""Rational linear combinations of monomials in pi, log 2, gamma and odd zeta values.

Even zeta arguments are normalized to powers of pi on construction, so
symbolic equality is decidable by coefficient comparison.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exact import GaussianRational, bernoulli

PI = "pi"
LOG2 = "log2"
GAMMA = "gamma"


def _zeta_name(k: int) -> str:
    return f"zeta{k}"


def _coerce_scalar(v):
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, GaussianRational):
        return v
    return None


class SymbolicValue:
    """Immutable linear combination: {monomial: coefficient}.

    A monomial is a sorted tuple of (symbol, power) pairs; coefficients are
    Fractions (or Gaussian rationals for intermediate complex routes).
    Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coef in terms.items():
                if coef:
                    clean[mono] = coef
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def rational(cls, q) -> "SymbolicValue":
        q = Fraction(q) if not isinstance(q, GaussianRational) else q
        return cls({(): q} if q else {})

    @classmethod
    def symbol(cls, name: str, power: int = 1) -> "SymbolicValue":
        return cls({((name, power),): Fraction(1)})

    @classmethod
    def pi_power(cls, n: int, coef=1) -> "SymbolicValue":
        coef = Fraction(coef)
        if n == 0:
            return cls.rational(coef)
        return cls({((PI, n),): coef})

    @classmethod
    def zeta(cls, k: int) -> "SymbolicValue":
        """zeta(k) for integer k >= 2; even k becomes a rational pi power."""
        if k < 2:
            raise ValueError("zeta symbol needs argument >= 2")
        if k % 2 == 0:
            n = k // 2
            # zeta(2n) = (-1)^(n+1) B_{2n} (2 pi)^(2n) / (2 (2n)!)
            coef = (
                Fraction((-1) ** (n + 1))
                * bernoulli(2 * n)
                * Fraction(2 ** (2 * n), 2 * factorial(2 * n))
            )
            return cls.pi_power(k, coef)
        return cls.symbol(_zeta_name(k))

    @classmethod
    def log2(cls) -> "SymbolicValue":
        return cls.symbol(LOG2)

    @classmethod
    def euler_gamma(cls) -> "SymbolicValue":
        return cls.symbol(GAMMA)

    zero_value = None  # set below

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        other = _as_symbolic(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coef in other.terms.items():
            terms[mono] = terms.get(mono, 0) + coef
        return SymbolicValue(terms)

    __radd__ = __add__

    def __neg__(self):
        return SymbolicValue({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_symbolic(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_symbolic(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        sc = _coerce_scalar(other)
        if sc is not None:
            return SymbolicValue({m: c * sc for m, c in self.terms.items()})
        if not isinstance(other, SymbolicValue):
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _merge_monomials(m1, m2)
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return SymbolicValue(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        sc = _coerce_scalar(other)
        if sc is None:
            return NotImplemented
        return SymbolicValue({m: c / sc for m, c in self.terms.items()})

    def __eq__(self, other):
        other = _as_symbolic(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # -- Gaussian-coefficient helpers ------------------------------------

    def real_part(self) -> "SymbolicValue":
        terms = {}
        for m, c in self.terms.items():
            terms[m] = c.re if isinstance(c, GaussianRational) else c
        return SymbolicValue(terms)

    def imag_part(self) -> "SymbolicValue":
        terms = {}
        for m, c in self.terms.items():
            terms[m] = c.im if isinstance(c, GaussianRational) else Fraction(0)
        return SymbolicValue(terms)

    # -- realization ------------------------------------------------------

    def numeric(self, ctx):
        """Realize numerically (mpf, or mpc for Gaussian coefficients)."""
        from . import constants
        from mpmath import mp, mpc

        with mp.workdps(ctx.digits + 10):
            total = mp.zero
            for mono, coef in self.terms.items():
                v = mp.one
                for name, power in mono:
                    if name == PI:
                        base = constants.pi(ctx)
                    elif name == LOG2:
                        base = constants.log2(ctx)
                    elif name == GAMMA:
                        base = constants.euler_gamma(ctx)
                    elif name.startswith("zeta"):
                        base = constants.zeta(int(name[4:]), ctx)
                    else:
                        raise ValueError(f"unknown symbol {name!r}")
                    v *= base ** power
                if isinstance(coef, GaussianRational):
                    cnum = mpc(
                        mp.mpf(coef.re.numerator) / coef.re.denominator,
                        mp.mpf(coef.im.numerator) / coef.im.denominator,
                    )
                else:
                    cnum = mp.mpf(coef.numerator) / coef.denominator
                total += cnum * v
            return total

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coef in sorted(self.terms.items()):
            factors = [str(coef)] if coef != 1 or not mono else (["1"] if not mono else [])
            if coef == 1 and mono:
                factors = []
            for name, power in mono:
                disp = name if not name.startswith("zeta") else f"zeta({name[4:]})"
                factors.append(disp if power == 1 else f"{disp}^{power}")
            parts.append("*".join(factors) if factors else "1")
        return " + ".join(parts)

    def __repr__(self):
        return f"SymbolicValue<{self}>"

    def to_json(self):
        out = []
        for mono, coef in sorted(self.terms.items()):
            entry = {"monomial": [[n, p] for n, p in mono]}
            if isinstance(coef, GaussianRational):
                entry["coefficient"] = [str(coef.re), str(coef.im)]
            else:
                entry["coefficient"] = str(coef)
            out.append(entry)
        return out


def _merge_monomials(m1, m2):
    powers = {}
    for name, p in m1 + m2:
        powers[name] = powers.get(name, 0) + p
    return tuple(sorted(powers.items()))


def _as_symbolic(v):
    if isinstance(v, SymbolicValue):
        return v
    sc = _coerce_scalar(v)
    if sc is not None:
        return SymbolicValue.rational(sc)
    return NotImplemented


ZERO = SymbolicValue()
ONE = SymbolicValue.rational(1)
