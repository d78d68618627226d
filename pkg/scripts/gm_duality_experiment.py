#!/usr/bin/env python3
"""Run the tower-based duality comparison on the standard module pairs
and print the stabilized nonzero cells.

Usage: python scripts/gm_duality_experiment.py [--window 10]
"""

import argparse
import time

from adichh.completion import gm_duality_check
from adichh.verify import _gm_pairs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--window", type=int, default=10)
    ap.add_argument("--i-max", type=int, default=3)
    args = ap.parse_args()
    degrees = list(range(-args.window, args.window + 1))
    i_values = list(range(args.i_max + 1))

    for label, M, N, a, J in _gm_pairs():
        t0 = time.time()
        rep = gm_duality_check(M, N, a, i_values, degrees, J=J)
        nonzero = {}
        for key, cell in sorted(rep.left.items()):
            right = rep.right.get(key)
            lv = cell.value if cell.stable else None
            rv = right.value if right is not None and right.stable else None
            if lv or rv:
                nonzero[key] = (lv, rv)
        print(f"{label:32s} {rep.verdict:6s} J={J} "
              f"nonzero={nonzero} ({time.time() - t0:.1f} s)")


if __name__ == "__main__":
    main()
