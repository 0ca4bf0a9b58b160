"""Command-line front end: eval / closed / dual / coeffs / verify / suite."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from . import __version__
from .compositions import DomainError, ParseError, dual, parse, render
from .constants import PrecisionContext
from .engine import eval_auto, eval_truncated, coeff_x_exact
from .reductions import match_family
from .verifier import REGISTRY, run, run_suite

USAGE_ERROR = 2
NO_FAMILY = 3


@dataclass(frozen=True)
class CliConfig:
    digits: int = 60
    tol: float = 1e-10
    json_output: bool = False
    out_path: str | None = None

    @property
    def ctx(self) -> PrecisionContext:
        return PrecisionContext(self.digits)

    @property
    def display_digits(self) -> int:
        return min(self.digits - 5, 30)


def _parse_x(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}", 0) from exc


def _emit(config: CliConfig, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2) if config.json_output else text
    if config.out_path:
        with open(config.out_path, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _numstr(v, config: CliConfig) -> str:
    with config.ctx.workdps():
        return mp.nstr(v, config.display_digits)


def _cmd_eval(args, config: CliConfig) -> int:
    comp = parse(args.composition).expansion()
    x = _parse_x(args.x)
    with config.ctx.workdps():
        if args.terms is not None:
            value = eval_truncated(comp, x, args.terms, config.ctx)
            value_num = config.ctx.mpf(value)
            err, terms, method, warning = 0.0, args.terms, "truncated", False
        else:
            res = eval_auto(comp, x, mp.mpf(args.tol), config.ctx)
            value_num = res.value
            err, terms, method, warning = (
                float(res.err_bound), res.terms_used, res.method, res.warning,
            )
        result = {
            "expr": render(comp),
            "x": str(x),
            "value": _numstr(value_num, config),
            "err_bound": err,
            "terms": terms,
            "method": method,
        }
        if warning:
            result["warning"] = "tolerance not achieved within budget"
    payload = {
        "command": "eval",
        "inputs": {"composition": args.composition, "x": str(x), "tol": args.tol},
        "result": result,
        "version": __version__,
    }
    text = (
        f"zeta_x({render(comp)}) at x={x}\n"
        f"  value    = {result['value']}\n"
        f"  err_bound= {err:.3e}\n"
        f"  method   = {method} ({terms} terms)"
        + ("\n  warning: tolerance not achieved within budget" if warning else "")
    )
    _emit(config, payload, text)
    return 0


def _cmd_closed(args, config: CliConfig) -> int:
    comp = parse(args.composition).expansion()
    x = _parse_x(args.x)
    red = match_family(comp, x)
    if red is None:
        print(
            f"no closed-form family matches {render(comp)} at x={x}",
            file=sys.stderr,
        )
        return NO_FAMILY
    numeric = red.numeric(config.ctx)
    payload = {
        "command": "closed",
        "inputs": {"composition": args.composition, "x": str(x)},
        "result": {
            "expr": render(comp),
            "route": red.route,
            "closed_form": str(red.closed_form),
            "closed_form_terms": red.closed_form.to_json(),
            "value": _numstr(numeric, config),
        },
        "version": __version__,
    }
    text = (
        f"zeta_x({render(comp)}) at x={x}  [route: {red.route}]\n"
        f"  = {red.closed_form}\n"
        f"  = {_numstr(numeric, config)}"
    )
    _emit(config, payload, text)
    return 0


def _cmd_dual(args, config: CliConfig) -> int:
    comp = parse(args.composition).expansion()
    d = dual(comp)
    payload = {
        "command": "dual",
        "inputs": {"composition": args.composition},
        "result": {"expr": render(comp), "dual": render(d)},
        "version": __version__,
    }
    _emit(config, payload, render(d))
    return 0


def _cmd_coeffs(args, config: CliConfig) -> int:
    comp = parse(args.composition).expansion()
    n = args.terms if args.terms is not None else 10
    coeffs = [coeff_x_exact(comp, m) for m in range(n + 1)]
    payload = {
        "command": "coeffs",
        "inputs": {"composition": args.composition, "terms": n},
        "result": {
            "expr": render(comp),
            "coefficients": [str(c) for c in coeffs],
        },
        "version": __version__,
    }
    lines = [f"[x^{m}] zeta_x({render(comp)}) = {c}" for m, c in enumerate(coeffs)]
    _emit(config, payload, "\n".join(lines))
    return 0


def _report_text(r) -> str:
    status = "PASS" if r.passed else "FAIL"
    return f"{r.id:<20s} {status}  max residual {r.max_residual:.3e}  ({r.elapsed:.1f}s)"


def _cmd_verify(args, config: CliConfig) -> int:
    if args.id not in REGISTRY:
        print(f"unknown check id {args.id!r}; known: {', '.join(REGISTRY)}", file=sys.stderr)
        return USAGE_ERROR
    overrides = {"digits": config.digits}
    if args.tol is not None:
        overrides["tol"] = args.tol
    report = run(args.id, overrides)
    payload = {
        "command": "verify",
        "inputs": {"id": args.id, "tol": args.tol},
        "reports": [report.to_json()],
        "version": __version__,
    }
    lines = [_report_text(report)]
    for lab, res, tol in report.points:
        lines.append(f"    {lab:<24s} residual {res:.3e}  tol {tol:.1e}")
    _emit(config, payload, "\n".join(lines))
    return 0 if report.passed else 1


def _cmd_suite(args, config: CliConfig) -> int:
    reports, ok = run_suite(overrides={"digits": config.digits})
    payload = {
        "command": "suite",
        "inputs": {},
        "reports": [r.to_json() for r in reports],
        "version": __version__,
    }
    lines = [_report_text(r) for r in reports]
    lines.append("overall: " + ("PASS" if ok else "FAIL"))
    _emit(config, payload, "\n".join(lines))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--prec", type=int, default=argparse.SUPPRESS,
        help="precision in digits (env MZV_PREC)",
    )
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help="JSON output"
    )
    common.add_argument(
        "--out", default=argparse.SUPPRESS, help="write output to file"
    )
    parser = argparse.ArgumentParser(
        prog="mzv",
        description="Evaluate and verify multiple zeta values, multiple "
        "polylogarithms and alternating unit Euler sums.",
    )
    parser.add_argument("--prec", type=int, default=None)
    parser.add_argument("--json", action="store_true", default=False)
    parser.add_argument("--out", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate zeta_x by the summation oracle")
    p.add_argument("composition")
    p.add_argument("--x", default="1")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--terms", type=int, default=None, help="exact partial sum over n1 <= N")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("closed", parents=[common], help="closed form from the reduction families")
    p.add_argument("composition")
    p.add_argument("--x", default="1")
    p.set_defaults(func=_cmd_closed)

    p = sub.add_parser("dual", parents=[common], help="MZV duality transform")
    p.add_argument("composition")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("coeffs", parents=[common], help="exact Maclaurin coefficients in x")
    p.add_argument("composition")
    p.add_argument("--terms", type=int, default=None)
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("verify", parents=[common], help="run one registered identity check")
    p.add_argument("id")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("suite", parents=[common], help="run the full verification suite")
    p.set_defaults(func=_cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    digits = args.prec or int(os.environ.get("MZV_PREC", 60))
    try:
        config = CliConfig(
            digits=digits, json_output=args.json, out_path=args.out
        )
        config.ctx  # validate precision eagerly
        return args.func(args, config)
    except (ParseError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
