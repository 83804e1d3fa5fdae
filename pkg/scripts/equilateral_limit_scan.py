#!/usr/bin/env python3
"""Scan the equilateral limit of the fundamental inequality decade by decade.

For side triples (1, 1 + d/2, 1 + d) with d = 10^-k the inequality's slack
shrinks to zero as the triangle approaches equilateral.  This script prints,
for each decade:

  * the exact squared slack (rational arithmetic, never touches floats),
  * the observed decay order between consecutive decades,
  * the float residual from the closed-form evaluation, which tracks the
    exact value until it drowns in rounding noise around d = 1e-5.

The decay order settling near 6 shows the squared slack vanishing like
d^6 (the one-sided residual itself decays like d^3); the float
column makes the noise floor visible, which is why the trend check in the
acceptance suite relies on exact arithmetic below that decade.

Usage:
    python3 scripts/equilateral_limit_scan.py
    python3 scripts/equilateral_limit_scan.py --first 2 --last 12 --csv
"""

import argparse
import math
import sys
from fractions import Fraction

from tribary.blundon import fundamental_residual, fundamental_slack_sq
from tribary.kernel import TriangleSides, derive_elements
from tribary.serialize import csv_cell


def scan(first: int, last: int):
    rows = []
    previous = None
    for k in range(first, last + 1):
        d = Fraction(1, 10 ** k)
        sides = TriangleSides(Fraction(1), 1 + d / 2, 1 + d)
        slack = fundamental_slack_sq(sides)
        order = None
        if previous is not None and slack > 0:
            order = math.log10(float(previous / slack))
        float_sides = TriangleSides(*(float(v) for v in sides.as_tuple()))
        residual = fundamental_residual(derive_elements(float_sides))
        rows.append((k, slack, order, residual))
        previous = slack
    return rows


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--first", type=int, default=2,
                        help="first decade exponent k (default 2)")
    parser.add_argument("--last", type=int, default=10,
                        help="last decade exponent k (default 10)")
    parser.add_argument("--csv", action="store_true",
                        help="emit CSV instead of the aligned table")
    args = parser.parse_args(argv)
    if args.first >= args.last:
        parser.error("--first must be smaller than --last")

    rows = scan(args.first, args.last)
    if args.csv:
        print("decade,exact_slack_sq,decay_order,float_residual")
        for k, slack, order, residual in rows:
            cells = [csv_cell(k), csv_cell(float(slack)),
                     "" if order is None else csv_cell(order),
                     csv_cell(residual)]
            print(",".join(cells))
        return 0

    print(f"{'d':>8} {'exact slack^2':>14} {'decay order':>12} "
          f"{'float residual':>15}")
    for k, slack, order, residual in rows:
        order_text = "" if order is None else f"{order:.3f}"
        print(f"{f'1e-{k}':>8} {float(slack):>14.6e} {order_text:>12} "
              f"{residual:>15.6e}")
    print()
    print("exact slack stays positive and strictly decreasing; the float")
    print("residual goes to rounding noise once d is below about 1e-5.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
