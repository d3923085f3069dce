#!/usr/bin/env python3
"""Count lonesum 0/1 matrices by brute force and compare with the
negative-upper-index values.

A 0/1 matrix is lonesum when it is the only matrix with its row and column
sums, equivalently when no 2x2 submatrix is a permutation pattern.  The
number of lonesum n x k matrices must equal the value at (n, -k); this
script enumerates all 2^(n*k) matrices per cell, so keep the ranges small.
"""

import argparse
import sys
from dataclasses import dataclass
from itertools import combinations, product

from polybernoulli.numbers import poly_bernoulli_negative


@dataclass(frozen=True)
class GridConfig:
    n_max: int
    k_max: int


def is_lonesum(rows: tuple[int, ...], cols: int) -> bool:
    for r1, r2 in combinations(rows, 2):
        for c, d in combinations(range(cols), 2):
            upper = (r1 >> c & 1, r1 >> d & 1)
            lower = (r2 >> c & 1, r2 >> d & 1)
            if (upper, lower) in (((1, 0), (0, 1)), ((0, 1), (1, 0))):
                return False
    return True


def brute_force_count(n: int, k: int) -> int:
    return sum(1 for m in product(range(1 << k), repeat=n) if is_lonesum(m, k))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=3, help="largest row count")
    parser.add_argument("--k-max", type=int, default=3, help="largest column count")
    args = parser.parse_args(argv)
    cfg = GridConfig(args.n_max, args.k_max)

    mismatches = 0
    print(f"{'n':>3} {'k':>3} {'brute force':>12} {'closed form':>12}")
    for n in range(cfg.n_max + 1):
        for k in range(cfg.k_max + 1):
            brute = brute_force_count(n, k)
            closed = poly_bernoulli_negative(n, k)
            marker = "" if brute == closed else "   MISMATCH"
            if brute != closed:
                mismatches += 1
            print(f"{n:>3} {k:>3} {brute:>12} {closed:>12}{marker}")
    if mismatches:
        print(f"FAILED: {mismatches} cells disagree")
        return 1
    print("ok: every cell agrees")
    return 0


if __name__ == "__main__":
    sys.exit(main())
