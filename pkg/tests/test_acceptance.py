"""Acceptance gate: the 17 criteria, one test each, tolerances pinned.

Each criterion is executed through the verifier registry so the CLI
`mzv suite` and this gate exercise the identical code path.
"""

import pytest

from polyzeta.verifier import run

# criterion -> (registry id, pinned tolerance, time budget in seconds)
# exact-coefficient checks pin tolerance 0.0
CRITERIA = {
    "c01_euler_depth2": ("EULER_D2", 1e-8, 30),
    "c02_z31_blocks": ("Z31", 1e-8, 60),
    "c03_thm1_family": ("THM1", 1e-8, 60),
    "c04_thm2_family": ("THM2", 1e-6, 90),
    "c05_cor3_family": ("COR3", 1e-6, 90),
    "c06_cream_coefficients": ("CREAM", 1e-9, 30),
    "c07_cheese_coefficients": ("CHEESE", 1e-9, 30),
    "c08_half_duals_all_families": ("HALF_DUALS", 1e-12, 10),
    "c09_depth_odd_gf_pointwise": ("PROP1", 1e-12, 120),
    "c10_alternating_gf_pointwise": ("PROP2", 1e-10, 60),
    "c11a_cream_gf_route_exact": ("BBB14", 0.0, 5),
    "c11b_cheese_gf_route_exact": ("TMILK", 0.0, 5),
    "c12_sprime_coefficients_exact": ("SPRIME_GF", 0.0, 5),
    "c13_quadratic_transformation": ("JACOBI", 1e-40, 10),
    "c14_ode_annihilation_exact": ("ODE_ANNIHILATION", 0.0, 10),
    "c15_wronskian_closed_form": ("WRONSKIAN", 1e-30, 5),
    "c16_maclaurin_opening_exact": ("MACLAURIN_OPENING", 0.0, 5),
    "c17a_gauss_summation": ("GAUSS_SUM", 1e-30, 30),
    "c17b_removable_singularities": ("REMOVABLE_SING", 1e-8, 30),
}


@pytest.mark.parametrize("name", CRITERIA, ids=list(CRITERIA))
def test_acceptance(name):
    check_id, tol, budget = CRITERIA[name]
    report = run(check_id, {"tol": tol} if tol > 0 else None)
    detail = "; ".join(f"{lab}: {res:.3e}" for lab, res, _ in report.points)
    assert report.passed, f"{check_id} residuals: {detail}"
    assert report.max_residual <= tol, detail
    assert report.elapsed < budget, f"{check_id} took {report.elapsed:.1f}s"


def test_thm1_z31_tight_point():
    # the depth-2 member carries the tighter 1e-9 requirement
    report = run("Z31")
    tight = [res for lab, res, _ in report.points if "n=1" in lab]
    assert tight and max(tight) <= 1e-9
