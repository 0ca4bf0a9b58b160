"""Registry and runner for all identity checks.

Each registered ID maps to a deterministic procedure that returns a list of
(label, residual, tolerance) points; a report passes iff every residual is
within its point tolerance.  Residuals are relative when the reference
magnitude exceeds 1e-3 and absolute otherwise; exact (rational/symbolic)
checks use tolerance 0.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import mp

from .compositions import Composition
from .constants import PrecisionContext
from . import engine, hypergeometrics, reductions
from .powerseries import (
    LogSeries,
    annihilation_residual,
    ode_analytic_solution,
    ode_log_solution,
    y1_series_in_x,
)


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    params: dict
    tolerance: float
    kind: str  # numeric_residual | exact_coeff


@dataclass
class VerificationReport:
    id: str
    points: list = field(default_factory=list)  # (label, residual, tolerance)
    max_residual: float = 0.0
    passed: bool = True
    elapsed: float = 0.0

    def to_json(self):
        return {
            "id": self.id,
            "points": [
                {"label": lab, "residual": float(r), "tolerance": float(t)}
                for lab, r, t in self.points
            ],
            "max_residual": float(self.max_residual),
            "pass": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
        }


def _residual(value, reference) -> float:
    """Relative residual for O(1) references, absolute for small ones."""
    diff = abs(value - reference)
    mag = abs(reference)
    return float(diff / mag) if mag > 1e-3 else float(diff)


# ---------------------------------------------------------------------------
# check procedures
# ---------------------------------------------------------------------------


def _check_euler_d2(tol, ctx):
    out = []
    for n in range(2, 7):
        red = reductions.euler_depth2(n)
        oracle = engine.eval_auto(red.target, 1, mp.mpf(tol) / 10, ctx)
        out.append((f"n={n}", _residual(oracle.value, red.numeric(ctx)), tol))
    return out


def _check_z31(tol, ctx):
    out = []
    for n in (1, 2, 3):
        red = reductions.z31_block(n)
        point_tol = 1e-9 if n == 1 else tol
        oracle = engine.eval_auto(red.target, 1, mp.mpf(point_tol), ctx)
        out.append((f"n={n}", _residual(oracle.value, red.numeric(ctx)), point_tol))
    return out


def _check_family(make, tol, ctx, rng=(0, 1, 2)):
    out = []
    for n in rng:
        red = make(n)
        oracle = engine.eval_auto(red.target, 1, mp.mpf(tol) / 10, ctx)
        out.append((f"n={n}", _residual(oracle.value, red.numeric(ctx)), tol))
    return out


def _check_thm1(tol, ctx):
    return _check_family(reductions.thm1, tol, ctx)


def _check_thm2(tol, ctx):
    return _check_family(reductions.thm2, tol, ctx)


def _check_cor3(tol, ctx):
    return _check_family(reductions.cor3, tol, ctx)


def _check_cream(tol, ctx):
    out = []
    for n in range(5):
        red = reductions.cream(n)[0]
        if red.target.depth == 0:
            out.append(("even n=0", float(abs(red.numeric(ctx) - 1)), tol))
            continue
        oracle = engine.eval_auto(red.target, 1, mp.mpf(tol) / 10, ctx)
        out.append((f"even n={n}", float(abs(oracle.value - red.numeric(ctx))), tol))
    for n in range(4):
        red = reductions.cream(n)[1]
        oracle = engine.eval_auto(red.target, 1, mp.mpf(tol) / 10, ctx)
        out.append((f"odd n={n}", float(abs(oracle.value - red.numeric(ctx))), tol))
    return out


def _check_cheese(tol, ctx):
    out = []
    for n in range(4):
        for tag, red in zip(("odd", "even"), reductions.cheese(n)):
            oracle = engine.eval_auto(red.target, 1, mp.mpf(tol) / 10, ctx)
            out.append(
                (f"{tag} n={n}", float(abs(oracle.value - red.numeric(ctx))), tol)
            )
    return out


def _check_half_duals(tol, ctx):
    out = []
    half = Fraction(1, 2)
    for fam in reductions.HALF_DUAL_FAMILIES:
        for n in range(3):
            red = reductions.half_duals(fam, n)
            if red.target.depth == 0:
                v = mp.one
            else:
                tr = engine.eval_truncated(red.target, half, 200)
                v = ctx.mpf(tr)
            out.append((f"{fam} n={n}", float(abs(v - red.numeric(ctx))), tol))
    return out


def _s_lhs(x, z, ctx, nmax, engine_tol):
    total = mp.zero
    for n in range(nmax + 1):
        comp = Composition.of(*([3] + [1, 3] * n))
        r = engine.eval_auto(comp, x, mp.mpf(engine_tol), ctx)
        total += (-1) ** n * z ** (4 * n + 2) * 4**n * r.value
    return total


def _check_prop1(tol, ctx):
    out = []
    pts = [
        (mp.mpf("0.5"), mp.mpf("0.25"), tol, 14, 1e-14),
        (mp.mpf("0.75"), mp.mpc("0.2", "0.1"), tol, 14, 1e-14),
        (mp.one, mp.mpf("0.3"), 1e-8, 10, 1e-11),
    ]
    for x, z, point_tol, nmax, etol in pts:
        lhs = _s_lhs(x, z, ctx, nmax, etol)
        rhs = hypergeometrics.S_rhs(x, z, ctx)
        out.append((f"x={x}, z={z}", float(abs(lhs - rhs)), point_tol))
    return out


def _m_lhs(x, t, ctx, order):
    total = mp.one
    for w in range(1, order + 1):
        args = [-1 if j % 2 else 1 for j in range(1, w + 1)]
        comp = Composition.of(*args)
        total += t**w * engine.eval_auto(comp, x, mp.mpf(1e-14), ctx).value
    return total


def _check_prop2(tol, ctx):
    out = []
    for xs, ts in (("0.5", "0.2"), ("0.8", "0.3")):
        x, t = mp.mpf(xs), mp.mpf(ts)
        lhs = _m_lhs(x, t, ctx, 40)
        rhs = hypergeometrics.M_rhs(x, t, ctx)
        out.append((f"x={xs}, t={ts}", float(abs(lhs - rhs)), tol))
    return out


def _check_bbb14(tol, ctx):
    route = reductions.gf_coeff_route("bbb14", 10)
    return [
        (
            f"m={m}",
            0.0 if route.coeff(m) == reductions.cream_coefficient(m) else 1.0,
            0.0,
        )
        for m in range(11)
    ]


def _check_tmilk(tol, ctx):
    route = reductions.gf_coeff_route("tmilk", 10)
    return [
        (
            f"m={m}",
            0.0 if route.coeff(m) == reductions.cheese_coefficient(m) else 1.0,
            0.0,
        )
        for m in range(11)
    ]


def _check_sprime_gf(tol, ctx):
    sp = reductions.gf_coeff_route("Sprime1", 14)
    out = []
    for n in range(4):
        lhs = sp.coeff(4 * n + 2) * Fraction((-1) ** n, 4**n)
        ok = lhs == reductions.thm2(n).closed_form
        out.append((f"n={n}", 0.0 if ok else 1.0, 0.0))
    return out


def _check_jacobi(tol, ctx):
    out = []
    for n in range(1, 6):
        worst = mp.zero
        for k in range(1, 10):
            x = mp.mpf(k) / 10
            worst = max(worst, hypergeometrics.jacobi_residual(x, n, ctx))
        out.append((f"n={n}, x=0.1..0.9", float(worst), tol))
    return out


def _check_ode_annihilation(tol, ctx):
    t = Fraction(1, 9)  # z = 1/3
    order = 30
    upto = order - 4
    out = []
    prod = y1_series_in_x(t, order + 4) * y1_series_in_x(-t, order + 4)
    r = annihilation_residual(prod, t, upto, chart="x")
    out.append(("x-chart analytic product", float(r), 0.0))
    pp = ode_analytic_solution(t, order + 4)
    pm = ode_analytic_solution(-t, order + 4)
    vp = ode_log_solution(t, order + 4)
    vm = ode_log_solution(-t, order + 4)
    basis = [
        ("p+ p-", LogSeries.from_series(pp * pm)),
        ("V+ p-", vp * pm),
        ("p+ V-", vm * pp),
        ("V+ V-", vp * vm),
    ]
    for label, obj in basis:
        r = annihilation_residual(obj, t, upto, chart="w")
        out.append((f"w-chart {label}", float(r), 0.0))
    return out


def _check_wronskian(tol, ctx):
    out = []
    for zs in ("0.2", "0.3"):
        z = mp.mpf(zs)
        ref = (
            -(mp.mpf(2) ** 13)
            * z**6
            * (mp.sin(mp.pi * z) / (mp.pi * z)) ** 2
            * (mp.sinh(mp.pi * z) / (mp.pi * z)) ** 2
        )
        w = hypergeometrics.wronskian_half(z, ctx)
        out.append((f"z={zs}", float(abs(w - ref)), tol))
    return out


def _check_maclaurin_opening(tol, ctx):
    """The stated opening x-coefficients of the depth-odd generating sum:
    [x^m] = z^2 c_m(3) - 4 z^6 c_m(3,1,3) for m <= 4."""
    single = Composition.of(3)
    triple = Composition.of(3, 1, 3)
    expected = {
        # m: (coefficient of z^2, coefficient of z^6)
        1: (Fraction(1), Fraction(0)),
        2: (Fraction(1, 8), Fraction(0)),
        3: (Fraction(1, 27), Fraction(-2, 27)),
        4: (Fraction(1, 64), Fraction(-7, 128)),
    }
    out = []
    for m, (c2, c6) in expected.items():
        got2 = engine.coeff_x_exact(single, m)
        got6 = -4 * engine.coeff_x_exact(triple, m)
        ok = got2 == c2 and got6 == c6
        out.append((f"m={m}", 0.0 if ok else 1.0, 0.0))
    return out


def _check_gauss_sum(tol, ctx):
    out = []
    for zs in ("0.1", "0.3", "0.45"):
        z = mp.mpf(zs)
        v = hypergeometrics.Y1(1, z, ctx)
        out.append((f"z={zs}", float(abs(v - mp.sin(mp.pi * z) / (mp.pi * z))), tol))
    return out


def _check_removable_sing(tol, ctx):
    # the limit of (z - pn) S_rhs is estimated by a symmetric two-point
    # mean, which cancels the O(offset) term of the finite part
    ctx = PrecisionContext(30)
    x = mp.mpf("0.6")
    eps = mp.mpf("1e-6")
    out = []
    with ctx.workdps():
        dirs = [("real", mp.one), ("diag", (1 + mp.mpc(0, 1)) / mp.sqrt(2))]
        for n in (1, 2):
            for pname, p in (("1", 1), ("-1", -1), ("i", mp.mpc(0, 1)), ("-i", -mp.mpc(0, 1))):
                for dname, d in dirs:
                    vals = [
                        (s * eps * d) * hypergeometrics.S_rhs(x, p * n + s * eps * d, ctx)
                        for s in (1, -1)
                    ]
                    res = abs((vals[0] + vals[1]) / 2)
                    out.append((f"p={pname}, n={n}, {dname}", float(res), tol))
    return out


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

REGISTRY = {
    "EULER_D2": IdentityCheck("EULER_D2", {"n": "2..6"}, 1e-8, "numeric_residual"),
    "Z31": IdentityCheck("Z31", {"n": "1..3"}, 1e-8, "numeric_residual"),
    "THM1": IdentityCheck("THM1", {"n": "0..2"}, 1e-8, "numeric_residual"),
    "THM2": IdentityCheck("THM2", {"n": "0..2"}, 1e-6, "numeric_residual"),
    "COR3": IdentityCheck("COR3", {"n": "0..2"}, 1e-6, "numeric_residual"),
    "CREAM": IdentityCheck("CREAM", {"n": "0..4 / 0..3"}, 1e-9, "numeric_residual"),
    "CHEESE": IdentityCheck("CHEESE", {"n": "0..3"}, 1e-9, "numeric_residual"),
    "HALF_DUALS": IdentityCheck(
        "HALF_DUALS", {"families": 8, "n": "0..2", "N": 200}, 1e-12, "numeric_residual"
    ),
    "PROP1": IdentityCheck("PROP1", {"points": 3}, 1e-12, "numeric_residual"),
    "PROP2": IdentityCheck("PROP2", {"points": 2}, 1e-10, "numeric_residual"),
    "BBB14": IdentityCheck("BBB14", {"m": "0..10"}, 0.0, "exact_coeff"),
    "TMILK": IdentityCheck("TMILK", {"m": "0..10"}, 0.0, "exact_coeff"),
    "SPRIME_GF": IdentityCheck("SPRIME_GF", {"n": "0..3"}, 0.0, "exact_coeff"),
    "JACOBI": IdentityCheck("JACOBI", {"n": "1..5"}, 1e-40, "numeric_residual"),
    "ODE_ANNIHILATION": IdentityCheck(
        "ODE_ANNIHILATION", {"z": "1/3", "order": 30}, 0.0, "exact_coeff"
    ),
    "WRONSKIAN": IdentityCheck("WRONSKIAN", {"z": "0.2, 0.3"}, 1e-30, "numeric_residual"),
    "MACLAURIN_OPENING": IdentityCheck(
        "MACLAURIN_OPENING", {"m": "1..4"}, 0.0, "exact_coeff"
    ),
    "GAUSS_SUM": IdentityCheck("GAUSS_SUM", {"z": "3 points"}, 1e-30, "numeric_residual"),
    "REMOVABLE_SING": IdentityCheck(
        "REMOVABLE_SING", {"n": "1..2", "offset": 1e-6}, 1e-8, "numeric_residual"
    ),
}

_PROCEDURES = {
    "EULER_D2": _check_euler_d2,
    "Z31": _check_z31,
    "THM1": _check_thm1,
    "THM2": _check_thm2,
    "COR3": _check_cor3,
    "CREAM": _check_cream,
    "CHEESE": _check_cheese,
    "HALF_DUALS": _check_half_duals,
    "PROP1": _check_prop1,
    "PROP2": _check_prop2,
    "BBB14": _check_bbb14,
    "TMILK": _check_tmilk,
    "SPRIME_GF": _check_sprime_gf,
    "JACOBI": _check_jacobi,
    "ODE_ANNIHILATION": _check_ode_annihilation,
    "WRONSKIAN": _check_wronskian,
    "MACLAURIN_OPENING": _check_maclaurin_opening,
    "GAUSS_SUM": _check_gauss_sum,
    "REMOVABLE_SING": _check_removable_sing,
}


def run(check_id: str, overrides: dict | None = None) -> VerificationReport:
    """Execute one registered check, optionally overriding tol/digits."""
    if check_id not in REGISTRY:
        raise KeyError(f"unknown check id {check_id!r}")
    overrides = overrides or {}
    check = REGISTRY[check_id]
    tol = overrides.get("tol", check.tolerance)
    ctx = PrecisionContext(overrides.get("digits", 60))
    start = time.monotonic()
    with ctx.workdps():
        points = _PROCEDURES[check_id](tol, ctx)
    report = VerificationReport(id=check_id)
    report.points = points
    report.max_residual = max((r for _, r, _ in points), default=0.0)
    report.passed = all(r <= t for _, r, t in points)
    report.elapsed = time.monotonic() - start
    return report


def run_suite(ids=None, overrides: dict | None = None):
    """Run the registry (or the given subset) in deterministic order."""
    reports = [run(i, overrides) for i in (ids if ids is not None else REGISTRY)]
    return reports, all(r.passed for r in reports)
