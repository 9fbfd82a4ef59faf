#!/usr/bin/env python3
"""Watch the two-variable polynomials of torus braid closures stabilize:
print the renormalized leading coefficients and the pairwise agreement depth
as the twist count grows."""

import argparse

from krtl.stable import AZD, _AZD_ORDER, stability_check


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2, help="strand count")
    parser.add_argument(
        "--k",
        default="3,5,7,9",
        help="comma-separated twist counts (coprime with n keeps closures knots)",
    )
    args = parser.parse_args()

    ks = [int(x) for x in args.k.split(",")]
    report = stability_check(args.n, ks)
    for k, poly in zip(report.ks, report.polynomials):
        print(f"k={k}: {poly.pretty(AZD, _AZD_ORDER)}")
    print()
    for (k1, k2), depth in zip(zip(report.ks, report.ks[1:]), report.agreements):
        print(f"agreement depth {k1} vs {k2}: {depth}")
    print(f"nondecreasing: {report.nondecreasing}")


if __name__ == "__main__":
    main()
