"""Check that avoiders of the decreasing permutation of length l have substitution depth at most 2l - 3.

Usage: python3 scripts/check_depth_bound.py [--n 9] [--ell 3 4]
"""
import argparse
import time
from collections import Counter

from permwqo.enumeration import avoiders
from permwqo.perm import Perm
from permwqo.substitution import substitution_depth


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=9, help="largest length checked")
    ap.add_argument("--ell", type=int, nargs="+", default=[3, 4])
    args = ap.parse_args()
    for ell in args.ell:
        start = time.perf_counter()
        depths: Counter[int] = Counter()
        for p in avoiders([Perm.decreasing(ell)], args.n):
            depths[substitution_depth(p)] += 1
        bound = 2 * ell - 3
        worst = max(depths)
        verdict = "ok" if worst <= bound else "VIOLATED"
        print(f"l = {ell}: {sum(depths.values())} avoiders, depth histogram {dict(sorted(depths.items()))}")
        print(f"  max depth {worst}, bound {bound}: {verdict} ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
