#!/usr/bin/env python3
"""Run the full identity-verification suite and print a summary table.

Equivalent to `mzv suite`, but usable directly from a checkout and
convenient for sweeping precision settings:

    python3 scripts/run_suite.py --prec 60 --json out.json
"""

import argparse
import json
import sys
import time

from polyzeta.verifier import REGISTRY, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--prec", type=int, default=60, help="working digits")
    parser.add_argument("--ids", nargs="*", default=None, help="subset of check ids")
    parser.add_argument("--json", metavar="PATH", help="also write a JSON report")
    args = parser.parse_args()

    unknown = set(args.ids or []) - set(REGISTRY)
    if unknown:
        parser.error(f"unknown check ids: {sorted(unknown)}")

    start = time.monotonic()
    reports, ok = run_suite(ids=args.ids, overrides={"digits": args.prec})
    total = time.monotonic() - start

    width = max(len(r.id) for r in reports) if reports else 8
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.id:<{width}}  {status}  max residual {r.max_residual:.3e}  {r.elapsed:6.2f}s")
    print(f"{'overall':<{width}}  {'PASS' if ok else 'FAIL'}  ({total:.1f}s at {args.prec} digits)")

    if args.json:
        with open(args.json, "w") as fh:
            json.dump(
                {
                    "digits": args.prec,
                    "pass": ok,
                    "elapsed_seconds": round(total, 3),
                    "reports": [r.to_json() for r in reports],
                },
                fh,
                indent=2,
            )
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
