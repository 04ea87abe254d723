#!/usr/bin/env python3
"""Scan depth-1 extremal forms for integrality and print the first coefficients of the integral ones."""

import argparse

import exqmf.extremal as ex


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--wmax", type=int, default=130)
    ap.add_argument("--n", type=int, default=60, help="coefficients checked per weight")
    ap.add_argument("--show", type=int, default=5, help="coefficients printed after the leading 1")
    args = ap.parse_args()

    rows = ex.integrality_scan(args.wmax, 1, args.n)
    integral = ex.integral_weights(rows)
    for w in integral:
        rec = ex.extremal_depth1_recursive(w, args.n)
        v = rec.vanishing_order
        coeffs = " ".join(str(c) for c in rec.series.coeffs[v + 1:v + 1 + args.show])
        print(f"{w:>4}  {coeffs}")
    for row in rows:
        if row.exists and not row.integral:
            print(f"{row.w:>4}  denominator at q^{row.first_bad_index}, primes {list(row.primes)}")
    print(f"integral weights ({len(integral)}): {integral}")


if __name__ == "__main__":
    main()
