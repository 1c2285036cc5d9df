#!/usr/bin/env python3
"""Sweep squarefree moduli: chromatic and clique numbers against prime counts.

For squarefree n the graph on the submodules of Z_n has chromatic number =
clique number = the number of prime factors of n; primes themselves give the
empty graph.  This prints the whole table up to a bound.
"""

import argparse
import sys
import time

from agmod import aggraph
from agmod.finmod import Module
from agmod.finring import Ring, prime_factors, squarefree_kernel


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=210)
    args = ap.parse_args()

    print(f"{'n':>5} {'omega':>6} {'clique':>7} {'chi':>5} {'vertices':>9} {'secs':>7}")
    mismatches = 0
    for n in range(2, args.max_n + 1):
        if squarefree_kernel(n) != n:
            continue
        start = time.time()
        module = Module(Ring([n]), [(n, 0)])
        inv = aggraph.invariants(aggraph.build_AG(module))
        elapsed = time.time() - start
        expected = len(prime_factors(n)) if len(prime_factors(n)) >= 2 else 0
        marker = "" if inv.chromatic_number == inv.clique_number == expected else "  <-- MISMATCH"
        if marker:
            mismatches += 1
        print(
            f"{n:>5} {len(prime_factors(n)):>6} {inv.clique_number:>7} "
            f"{inv.chromatic_number:>5} {len(module.lattice()) - 2:>9} {elapsed:>7.2f}{marker}"
        )
    if mismatches:
        print(f"{mismatches} mismatches")
        return 1
    print("all values match")
    return 0


if __name__ == "__main__":
    sys.exit(main())
