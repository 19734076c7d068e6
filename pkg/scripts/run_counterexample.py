#!/usr/bin/env python3
"""Run the two-algebra family experiment at several primes and print a
compact table: value groups, per-sample residue checks, lattice distinctness.

Usage:
    python scripts/run_counterexample.py [--samples N] [--precision W] [--seed S]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from palgebra import counterexample_check  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=25)
    ap.add_argument("--precision", type=int, default=8)
    ap.add_argument("--seed", type=int, default=2026)
    args = ap.parse_args()

    print(f"{'p':>3} {'[1,a) group':>14} {'[1,b) group':>14} {'checks':>9} {'distinct':>9} {'time':>7}")
    for p in (2, 3, 5):
        t0 = time.time()
        rep = counterexample_check(p, args.precision, args.samples, args.seed)
        print(
            f"{p:>3} {rep.value_group_a:>14} {rep.value_group_b:>14} "
            f"{rep.checks_passed:>4}/{rep.total_checks:<4} "
            f"{str(rep.lattices_always_distinct):>9} {time.time() - t0:>6.2f}s"
        )
    print()
    print("Sampled p-central elements u*y put the fractional value coordinate on")
    print("the a-axis in [1,a) and on the b-axis in [1,b), so the two algebras")
    print("never share the value group of an inseparable subfield from this family.")


if __name__ == "__main__":
    main()
