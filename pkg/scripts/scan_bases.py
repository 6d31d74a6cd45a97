"""Decide random bases, cross-check each with the oracle and tabulate the
stage outcomes."""

import argparse
import collections
import random
import time

from pinperm.decide import cross_check, decide, random_basis
from pinperm.perm import fmt


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-elements", type=int, default=3)
    ap.add_argument("--max-size", type=int, default=5)
    ap.add_argument("--mode", choices=["exact", "optimized"], default="optimized")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    tally: collections.Counter = collections.Counter()
    bad = 0
    t0 = time.perf_counter()
    for _ in range(args.count):
        basis = random_basis(rng, args.max_elements, args.max_size)
        v = decide(basis, args.mode)
        tally["finite" if v.finite else "infinite"] += 1
        tally.update(k for k, ok in v.stages.items() if not ok)
        problems = cross_check(basis, args.mode)
        if problems:
            bad += 1
            print(" ".join(map(fmt, basis)), problems[:3])
    print(f"{args.count} bases in {time.perf_counter() - t0:.1f} s, {bad} inconsistent")
    for key in ("finite", "infinite", "parallel", "wedge1", "wedge2", "proper_pins"):
        label = key if key in ("finite", "infinite") else f"{key} failed"
        print(f"  {label:<20} {tally[key]}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
