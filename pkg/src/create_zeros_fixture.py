#!/usr/bin/env python3
"""
Write a longer or more precise zeros table than the one shipped in gbl_audit/data.

The ordinates come from mpmath.zetazero, written in the same one-value-per-line
format as the published tables so load_zeros reads both. Slow for counts in
the thousands.
"""

import argparse
import logging
import os
import sys
from datetime import datetime

import mpmath

from gbl_audit import config

logger = logging.getLogger(__name__)


def create_zeros_file(path: str, count: int = 1000, digits: int = 12) -> int:
    """Compute the first `count` ordinates and save them to `path`"""
    partial = path + ".partial"
    with mpmath.workdps(digits + 5), open(partial, "w", encoding="utf-8") as handle:
        handle.write(f"# source: mpmath.zetazero, {digits} decimals\n")
        handle.write(f"# created: {datetime.now().isoformat(timespec='seconds')}\n")
        handle.write(f"# count: {count}\n")
        for k in range(1, count + 1):
            gamma = mpmath.zetazero(k).imag
            handle.write(mpmath.nstr(gamma, digits + 4, strip_zeros=False) + "\n")
            if k % 100 == 0:
                logger.info(f"{k} of {count} zeros computed")
    os.replace(partial, path)
    return count


def main():
    logging.basicConfig(level=config.LOG_LEVEL, format=config.LOG_FORMAT)
    parser = argparse.ArgumentParser(description="Write a zeta-zero fixture file")
    parser.add_argument("--out", default="zeros_fixture.txt")
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--digits", type=int, default=12)
    args = parser.parse_args()

    try:
        written = create_zeros_file(args.out, args.count, args.digits)
    except OSError as e:
        print(f"❌ Cannot write {args.out}: {e}")
        return 2
    print(f"✅ Created {args.out} with {written} zeros")
    return 0


if __name__ == "__main__":
    sys.exit(main())
