#!/usr/bin/env python3
"""Run the full verification battery and write reports to a directory.

Usage: python scripts/run_verify_all.py [outdir] [--workers N] [--format md|json]
"""

import argparse
import pathlib
import sys
import time

from adichh import verify
from adichh.reports import emit


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", nargs="?", default="reports")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--format", choices=["json", "markdown"], default="json")
    args = ap.parse_args()

    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    t0 = time.time()
    verdict, reports = verify.verify_all(args.workers)
    ext = "json" if args.format == "json" else "md"
    for r in reports:
        path = out / f"{r.check_id}.{ext}"
        path.write_text(emit(r, args.format))
        print(f"{r.check_id:14s} {r.verdict:12s} -> {path}")
    print(f"overall: {verdict}  ({time.time() - t0:.1f} s)")
    return {"pass": 0, "fail": 2, "inconclusive": 3}[verdict]


if __name__ == "__main__":
    sys.exit(main())
