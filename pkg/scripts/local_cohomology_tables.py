#!/usr/bin/env python3
"""Print stabilized local cohomology tables for small free modules.

Usage: python scripts/local_cohomology_tables.py [--vars 1|2] [--tower J]
"""

import argparse

from adichh.completion import local_cohomology
from adichh.modules import FPModule
from adichh.rings import QQ, Ring


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--vars", type=int, choices=[1, 2], default=2)
    ap.add_argument("--tower", type=int, default=12)
    ap.add_argument("--window", type=int, default=10)
    args = ap.parse_args()

    names = ["x"] if args.vars == 1 else ["x", "y"]
    R = Ring(QQ, names)
    M = FPModule.free(R, (0,))
    degrees = list(range(-args.window, 1))
    res = local_cohomology(M, R.gens(), args.tower, degrees)
    print(f"H^i_({','.join(names)}) of {R}, tower depth {args.tower}")
    header = "  i\\d " + " ".join(f"{d:>4d}" for d in degrees)
    print(header)
    for i in range(args.vars + 1):
        row = [f"{i:>5d}"]
        for d in degrees:
            cell = res.cells.get((i, d))
            if cell is None:
                row.append("   .")
            elif cell.stable:
                row.append(f"{cell.value:>4d}")
            else:
                row.append("   ?")
        print(" ".join(row))
    print("all cells stable" if res.all_stable() else "UNSTABLE CELLS REMAIN")


if __name__ == "__main__":
    main()
