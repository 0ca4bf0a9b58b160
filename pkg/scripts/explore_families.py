#!/usr/bin/env python3
"""Print the closed-form families side by side with the summation oracle.

For each family and index n, shows the exact closed form, its numeric
value, the oracle value, and the residual — a quick way to eyeball how
deep the agreement goes beyond the acceptance range:

    python3 scripts/explore_families.py --max-n 3
"""

import argparse
import sys
from fractions import Fraction

from mpmath import mp

from polyzeta.constants import PrecisionContext
from polyzeta.engine import eval_auto, eval_truncated
from polyzeta.reductions import (
    HALF_DUAL_FAMILIES,
    cor3,
    cream,
    cheese,
    half_duals,
    thm1,
    thm2,
    z31_block,
)

FAMILIES = [
    ("zeta({3,1}^n)", z31_block),
    ("zeta(3,{1,3}^n)", thm1),
    ("zeta(2,{1,3}^n)", thm2),
    ("zeta(2,1,{3,1}^n)", cor3),
    ("zeta({-1,1}^n)", lambda n: cream(n)[0]),
    ("zeta(-1,{1,-1}^n)", lambda n: cream(n)[1]),
    ("zeta(-1,{-1,1}^n)", lambda n: cheese(n)[0]),
    ("zeta(-1,-1,{1,-1}^n)", lambda n: cheese(n)[1]),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=2)
    parser.add_argument("--prec", type=int, default=60)
    parser.add_argument("--tol", type=float, default=1e-9)
    args = parser.parse_args()

    ctx = PrecisionContext(args.prec)
    with ctx.workdps():
        for label, make in FAMILIES:
            print(f"== {label} ==")
            for n in range(args.max_n + 1):
                red = make(n)
                closed = red.numeric(ctx)
                if red.target.depth == 0:
                    oracle = mp.one
                else:
                    oracle = eval_auto(red.target, 1, mp.mpf(args.tol), ctx).value
                print(
                    f"  n={n}: {red.closed_form}\n"
                    f"        closed  = {mp.nstr(closed, 25)}\n"
                    f"        oracle  = {mp.nstr(oracle, 25)}"
                    f"   |diff| = {mp.nstr(abs(closed - oracle), 3)}"
                )
        print("== zeta_{1/2} families (exact dyadic truncation, N = 300) ==")
        half = Fraction(1, 2)
        for fam in HALF_DUAL_FAMILIES:
            for n in range(args.max_n + 1):
                red = half_duals(fam, n)
                closed = red.numeric(ctx)
                if red.target.depth == 0:
                    oracle = mp.one
                else:
                    oracle = ctx.mpf(eval_truncated(red.target, half, 300, ctx))
                print(
                    f"  {fam} n={n}: closed = {mp.nstr(closed, 25)}"
                    f"   |diff| = {mp.nstr(abs(closed - oracle), 3)}"
                )
    return 0


if __name__ == "__main__":
    sys.exit(main())
