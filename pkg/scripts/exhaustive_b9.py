"""Exhaustive verification of s(9) = 1/4: systole of every 3-edge-connected
cubic graph on 16 vertices, reporting the argmax set. Long-running (a few
hours single-threaded; use --jobs).

Usage: python scripts/exhaustive_b9.py [--jobs N]
"""

import argparse
import json
import sys
import time

from regma.tables import verify_tables


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    t0 = time.time()
    report = verify_tables(9, exhaustive=True, jobs=args.jobs)
    print(json.dumps(report, sort_keys=True, indent=2))
    print(f"total {time.time() - t0:.0f}s", file=sys.stderr)
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
