"""Identity-check registry plumbing (fast checks only; the full registry
runs in test_acceptance)."""

import pytest

from polyzeta.verifier import REGISTRY, run, run_suite

FAST_IDS = [
    "Z31",
    "HALF_DUALS",
    "BBB14",
    "TMILK",
    "SPRIME_GF",
    "JACOBI",
    "ODE_ANNIHILATION",
    "WRONSKIAN",
    "MACLAURIN_OPENING",
    "GAUSS_SUM",
]


def test_registry_complete():
    assert len(REGISTRY) == 19
    assert list(REGISTRY) == [
        "EULER_D2", "Z31", "THM1", "THM2", "COR3", "CREAM", "CHEESE",
        "HALF_DUALS", "PROP1", "PROP2", "BBB14", "TMILK", "SPRIME_GF",
        "JACOBI", "ODE_ANNIHILATION", "WRONSKIAN", "MACLAURIN_OPENING",
        "GAUSS_SUM", "REMOVABLE_SING",
    ]


@pytest.mark.parametrize("check_id", FAST_IDS)
def test_fast_checks_pass(check_id):
    report = run(check_id)
    assert report.passed, report.points
    assert report.max_residual <= REGISTRY[check_id].tolerance
    assert report.points


def test_unknown_id_raises():
    with pytest.raises(KeyError):
        run("NOT_A_CHECK")


def test_zero_tolerance_fails_numeric_check():
    # forcing tol = 0 on a floating-point check must produce a failure
    report = run("WRONSKIAN", {"tol": 0.0})
    assert not report.passed


def test_report_json_shape():
    report = run("GAUSS_SUM")
    payload = report.to_json()
    assert payload["id"] == "GAUSS_SUM"
    assert payload["pass"] is True
    assert isinstance(payload["points"], list) and payload["points"]
    assert "elapsed_seconds" in payload


def test_run_suite_subset():
    reports, ok = run_suite(ids=["GAUSS_SUM", "MACLAURIN_OPENING"])
    assert ok and len(reports) == 2


def test_run_suite_empty():
    reports, ok = run_suite(ids=[])
    assert ok and reports == []
