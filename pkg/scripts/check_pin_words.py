"""Compare symbolic pin-word sets with brute-force enumeration."""

import argparse
import time
from itertools import permutations

from pinperm.oracle import enumerate_pin_words
from pinperm.pinclass import is_pin_perm, pin_words


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=7, help="at most 8")
    args = ap.parse_args()
    bad = 0
    for n in range(1, args.max_size + 1):
        t0 = time.perf_counter()
        count = 0
        for p in permutations(range(1, n + 1)):
            brute = enumerate_pin_words(p)
            if is_pin_perm(p) != bool(brute) or (brute and pin_words(p) != brute):
                bad += 1
                print(f"mismatch at {p}")
            count += bool(brute)
        print(f"size {n}: {count} pin-permutations checked in {time.perf_counter() - t0:.1f} s")
    print("all agree" if not bad else f"{bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
