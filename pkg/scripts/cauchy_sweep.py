#!/usr/bin/env python3
"""Sweep the projection-order bounds along partial braids of a few complete
specs and print how fast the certified bounds grow."""

import argparse
import math

from krtl.braid import InfiniteBraidSpec
from krtl.bounds import cauchy_report

SPECS = {
    "two-strand": InfiniteBraidSpec(n=2, m=1, level=math.inf, tail=(1,)),
    "three-strand": InfiniteBraidSpec(n=3, m=1, level=math.inf, tail=(1, 2)),
    "four-strand-scrambled": InfiniteBraidSpec(
        n=4, m=1, level=math.inf, tail=(2, 1, 3, 2, 1, 3)
    ),
    "three-strand-colored": InfiniteBraidSpec(n=3, m=2, level=5, tail=(1, 2)),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-ell", type=int, default=48)
    parser.add_argument("--step", type=int, default=4)
    args = parser.parse_args()

    ells = list(range(args.step, args.max_ell + 1, args.step))
    for name, spec in SPECS.items():
        report = cauchy_report(spec, ells)
        print(f"== {name} (n={spec.n}, m={spec.m})")
        print("ell  y   z   bound_F  bound_g")
        for row in report.reports:
            bf = "inf" if row.bound_F == math.inf else row.bound_F
            bg = "-" if row.bound_g is None else row.bound_g
            print(f"{row.ell:<4} {row.y:<3} {row.z:<3} {bf:<8} {bg}")
        print(f"y nondecreasing: {report.y_nondecreasing}, growing: {report.y_growing}")
        print()


if __name__ == "__main__":
    main()
