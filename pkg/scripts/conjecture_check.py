#!/usr/bin/env python3
"""Check that the depth-r generalized Atkin polynomials agree with the depth-1 one modulo p."""

import argparse

import exqmf.extremal as ex


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="+", default=[11, 17, 19])
    ap.add_argument("--rmax", type=int, default=6)
    args = ap.parse_args()

    for p in args.primes:
        out = ex.atkin_conjecture_check(p, r_max=args.rmax)
        print(f"p={p:<3} u={out['u']}  depth-1 polynomial mod p: {out['A1_mod_p']}")
        for r, agrees in sorted(out["agrees"].items()):
            print(f"p={p:<3} r={r}  {'agrees' if agrees is True else agrees}")


if __name__ == "__main__":
    main()
