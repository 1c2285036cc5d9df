#!/usr/bin/env python3
"""Run the structural-predicate suite over a generated corpus and print a table."""

import argparse
import sys
import time

from agmod.theorems import CorpusSpec, generate_corpus, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-ring", type=int, default=36)
    ap.add_argument("--max-module", type=int, default=128)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    spec = CorpusSpec(max_ring_card=args.max_ring, max_module_card=args.max_module)
    corpus = generate_corpus(spec)
    start = time.time()
    report = run_suite(corpus, corpus_spec=spec, jobs=args.jobs)
    elapsed = time.time() - start

    print(f"instances: {len(corpus)}   elapsed: {elapsed:.1f}s")
    print(f"{'predicate':<12} {'pass':>6} {'FAIL':>6} {'not met':>8} {'skipped':>8}")
    for tid, c in report.counts.items():
        print(
            f"{tid:<12} {c['applicable_pass']:>6} {c['applicable_FAIL']:>6} "
            f"{c['hypotheses_not_met']:>8} {c['skipped']:>8}"
        )
    if report.violations:
        print(f"\n{len(report.violations)} VIOLATIONS:")
        for r in report.violations:
            print(f"  {r.theorem_id} on {r.instance_id}: {r.witness}")
        return 2
    print("\nno violations")
    return 3 if report.skips else 0


if __name__ == "__main__":
    sys.exit(main())
