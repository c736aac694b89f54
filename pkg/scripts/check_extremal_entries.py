"""Check the extremal-entry property on every simple permutation in Av(24153, 31524).

The property: the greatest entry lies left of the least entry, or the leftmost
entry lies above the rightmost entry.  Lengths 1 and 2 are excluded because
``12`` is trivially simple and fails it.

Usage: python3 scripts/check_extremal_entries.py [--n 9]
"""
import argparse
import time
from collections import Counter

from permwqo.enumeration import avoiders
from permwqo.perm import Perm, extremal_entry_property, is_simple


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=9, help="largest length checked")
    args = ap.parse_args()
    start = time.perf_counter()
    simple: Counter[int] = Counter()
    violations = []
    for p in avoiders([Perm.parse("24153"), Perm.parse("31524")], args.n):
        if len(p) >= 4 and is_simple(p):
            simple[len(p)] += 1
            if not extremal_entry_property(p):
                violations.append(p)
    for n in sorted(simple):
        print(f"length {n}: {simple[n]} simple")
    print(f"violations: {len(violations)}")
    for p in violations[:10]:
        print("  ", p)
    print(f"{time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
