"""State counts of the exact and optimized automata, by permutation size."""

import argparse
import statistics
from itertools import permutations

from pinperm.builder import BuildMode, build_A_pi_perm
from pinperm.pinclass import is_pin_perm


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=6)
    args = ap.parse_args()
    print(f"{'n':>2} {'count':>6} " + " ".join(f"{m.value + ' mean/max':>20}" for m in BuildMode))
    for n in range(1, args.max_size + 1):
        pins = [p for p in permutations(range(1, n + 1)) if is_pin_perm(p)]
        cols = []
        for mode in BuildMode:
            sizes = [build_A_pi_perm(p, mode).n_states for p in pins]
            cols.append(f"{statistics.mean(sizes):>13.1f}/{max(sizes):<6}")
        print(f"{n:>2} {len(pins):>6} " + " ".join(cols))


if __name__ == "__main__":
    main()
