#!/usr/bin/env python3
"""Census of Mullineux-fixed partitions.

For each e, tabulates per size n: the number of e-regular partitions, the
number of fixed points, the alternating-count formula value, and the crystal
class whose vertices parameterize the fixed points.
"""

import argparse
import time

from mullineux.involution import mullineux_map, regular_count
from mullineux.partitions import CrystalKind
from mullineux.twisted import class_partitions


def census(e, max_n):
    images = mullineux_map(e, max_n)
    kind = CrystalKind.odd(e // 2) if e % 2 else CrystalKind.even(e // 2)
    print(f"\ne = {e}  (crystal: {kind.parity}, ell = {kind.ell})")
    print(f"{'n':>3} {'#regular':>9} {'#fixed':>7} {'alt-count':>10} {'#class':>7}")
    for n in range(max_n + 1):
        fixed = sum(1 for lam, img in images.items()
                    if sum(lam) == n and img == lam)
        kn = regular_count(e, n)
        alt = (kn + 3 * fixed) // 2
        print(f"{n:>3} {kn:>9} {fixed:>7} {alt:>10} {len(class_partitions(n, kind)):>7}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-e", type=int, action="append",
                        help="repeatable; defaults to 2..6")
    parser.add_argument("--max-n", type=int, default=16)
    args = parser.parse_args()
    start = time.perf_counter()
    for e in args.e or [2, 3, 4, 5, 6]:
        census(e, args.max_n)
    print(f"\ntotal time: {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
