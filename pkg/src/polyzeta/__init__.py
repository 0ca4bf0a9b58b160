"""Numerics and exact verification for multiple zeta values, multiple
polylogarithms, and alternating unit Euler sums."""

__version__ = "0.1.0"

from .compositions import Composition, PeriodicSpec, dual, parse, render
from .constants import PrecisionContext
from .engine import EvalResult, coeff_x_exact, eval_auto, eval_truncated
from .reductions import Reduction, match_family
from .symbolic import SymbolicValue
from .verifier import run, run_suite

__all__ = [
    "Composition",
    "EvalResult",
    "PeriodicSpec",
    "PrecisionContext",
    "Reduction",
    "SymbolicValue",
    "coeff_x_exact",
    "dual",
    "eval_auto",
    "eval_truncated",
    "match_family",
    "parse",
    "render",
    "run",
    "run_suite",
    "__version__",
]
