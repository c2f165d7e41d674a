#!/usr/bin/env python3
"""Run one or more corpus suites and write their rows as CSV.

Usage: python3 scripts/run_corpus.py trichotomy trees --out results/
"""

import argparse
import csv
import sys
import time
from pathlib import Path

from ramsey_lab.corpus import SUITES, run_suite, worker_count


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("suites", nargs="*", default=sorted(SUITES), help="suite names (default: all)")
    parser.add_argument("--n", type=int, default=None, help="override the suite's size cap")
    parser.add_argument("--out", type=Path, default=Path("corpus_results"))
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    bad = 0
    for name in args.suites:
        start = time.monotonic()
        rows = run_suite(name, args.n)
        failed = [r for r in rows if not r["passed"]]
        bad += len(failed)
        cols = sorted({k for r in rows for k in r})
        with open(args.out / f"{name}.csv", "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=cols)
            writer.writeheader()
            writer.writerows(rows)
        secs = time.monotonic() - start
        print(f"{name:12s} {len(rows):7d} rows  {len(failed):4d} failed  {secs:7.1f}s  ({worker_count()} workers)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
