"""Rewrite the derived golden files under tests/golden (or check them with --check)."""

import argparse
import sys
from pathlib import Path

from pinperm.golden import DERIVED

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true", help="report differences without writing")
    args = ap.parse_args()
    stale = 0
    for name, make in DERIVED.items():
        body = make()
        path = GOLDEN / name
        if args.check:
            same = path.exists() and path.read_text() == body
            stale += not same
            print(f"{'ok   ' if same else 'STALE'} {name}")
        else:
            path.write_text(body)
            print(f"wrote {name} ({len(body.splitlines())} lines)")
    return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
