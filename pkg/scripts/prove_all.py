#!/usr/bin/env python3
"""Run the finite congruence check for every representative weight and summarize."""

import argparse
import sys

from exqmf.congruence import REPRESENTATIVE_WEIGHTS, verify_main_theorem_case


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("weights", nargs="*", type=int, help="weights to check (default: all representatives)")
    ap.add_argument("--verbose", action="store_true", help="print the per-modulus table")
    args = ap.parse_args()

    ok = True
    for w in args.weights or REPRESENTATIVE_WEIGHTS:
        rep = verify_main_theorem_case(w)
        ok &= rep.passed
        if args.verbose:
            print(rep.to_text())
            print()
        else:
            verdict = "PASS" if rep.passed else "FAIL"
            print(f"{verdict}  w={w:<4} family={rep.family}  C={rep.C}  moduli={len(rep.rows)}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
