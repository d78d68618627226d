#!/usr/bin/env python3
"""Tabulate both sides of the completion/Hochschild comparison on the
bimodule corpus.

Usage: python scripts/hochschild_corpus.py [--field QQ|GF(5)] [--precision N]
"""

import argparse
import time

from adichh.hochschild import main_theorem_check
from adichh.verify import _main_corpus_cases
from adichh.rings import GF, QQ


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--field", default="QQ")
    ap.add_argument("--precision", type=int, default=None,
                    help="override the per-case precision")
    args = ap.parse_args()
    field = QQ if args.field in ("QQ", "Q") else GF(int(args.field[3:-1]))

    for label, E, a, M, i_values, N in _main_corpus_cases(field):
        N = args.precision or N
        for i in i_values:
            t0 = time.time()
            r = main_theorem_check(E, a, M, i, N)
            left = [r.left_dims[d] for d in r.window]
            right = [r.right.dims[d] for d in r.window]
            print(f"{label:28s} i={i} N={N} {r.verdict:6s} "
                  f"left={left} right={right} ({time.time() - t0:.2f} s)")


if __name__ == "__main__":
    main()
