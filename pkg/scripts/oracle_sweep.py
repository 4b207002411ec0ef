#!/usr/bin/env python3
"""Sweep the (p, q, k) grid and compare the closed-form torsion
classification against the Nagell-Lutz oracle on every curve.

Exits nonzero and prints each discrepancy if any is found."""

import argparse
import sys
import time

from concordia.sweeps import DEFAULT_K_VALUES, curve_grid, oracle_equivalence_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=30,
                    help="bound on the coprime pair p, q (default 30)")
    ap.add_argument("--jobs", type=int, default=1,
                    help="worker processes (default 1)")
    ap.add_argument("--k", type=int, nargs="*", default=None,
                    help=f"k values to sweep (default {DEFAULT_K_VALUES})")
    args = ap.parse_args()

    kvals = tuple(args.k) if args.k else DEFAULT_K_VALUES
    total = sum(1 for _ in curve_grid(args.pmax, kvals))
    print(f"sweeping {total} curves: p,q <= {args.pmax}, k in {kvals}, "
          f"jobs={args.jobs}")
    t0 = time.monotonic()
    failures = oracle_equivalence_sweep(p_max=args.pmax, k_values=kvals,
                                        jobs=args.jobs)
    dt = time.monotonic() - t0
    for line in failures:
        print("DISCREPANCY:", line)
    print(f"{total} curves checked in {dt:.1f}s, "
          f"{len(failures)} discrepancies")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
