"""Re-derive the affixes of the monotone grid antichain by exhaustive search.

An element of the 2x2 all-increasing grid class is fixed by four words that
record how neighbouring cells interleave (see ``permwqo.antichain.from_words``).
Element ``k`` uses an alternating core of length ``2k`` in every word, so the
points wind around the four cells.  The cores alone form a chain, so each word
gets a prefix and a suffix of length at most two over its two letters.

The search keeps every affix choice whose first ``--count`` elements

* have exactly two proper intervals, both ``12`` pairs, and
* are pairwise incomparable under containment,

and reports the one with the fewest affix letters (ties broken by enumeration
order).  It then checks that this choice is the one the library uses.

Usage: python3 scripts/derive_families.py [--count N]
"""
import argparse
import itertools
import time

from permwqo.antichain import from_words, monotone_grid_words
from permwqo.perm import contains, proper_intervals

CORE = {"top": "BA", "right": "BC", "bottom": "DC", "left": "AD"}
ORDER = ("top", "right", "bottom", "left")


def affixes(x: str, y: str) -> list[str]:
    return ["", x, y, x + y, y + x, x + x, y + y]


def words(mods, k):
    return tuple(mods[w][0] + CORE[w] * k + mods[w][1] for w in ORDER)


def element(mods, k):
    try:
        return from_words(*words(mods, k))
    except ValueError:
        return None


def anchored_by_12(p) -> bool:
    iv = proper_intervals(p)
    return len(iv) == 2 and all(b == a + 1 and p[a - 1] < p[b - 1] for a, b in iv)


def antichain(elems) -> bool:
    return not any(contains(x, y) is not None for x, y in itertools.combinations(elems, 2))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=12, help="prefix length that must be certified")
    args = ap.parse_args()
    start = time.perf_counter()
    choices = {w: [(a, b) for a in affixes(*CORE[w]) for b in affixes(*CORE[w])] for w in ORDER}
    survivors = []
    for combo in itertools.product(*(choices[w] for w in ORDER)):
        mods = dict(zip(ORDER, combo))
        small = [element(mods, k) for k in (1, 2, 3)]
        if any(p is None or not anchored_by_12(p) for p in small) or not antichain(small):
            continue
        survivors.append(mods)
    print(f"{len(survivors)} affix choices pass the first three elements")
    certified = []
    for mods in sorted(survivors, key=lambda m: sum(len(a) + len(b) for a, b in m.values())):
        elems = [element(mods, k) for k in range(1, args.count + 1)]
        if all(anchored_by_12(p) for p in elems) and antichain(elems):
            certified.append(mods)
            break
    if not certified:
        print("no affix choice survives")
        return
    best = certified[0]
    print("shortest certified choice:", {w: best[w] for w in ORDER})
    print("element 1:", element(best, 1))
    same = all(words(best, k) == monotone_grid_words(k) for k in range(1, args.count + 1))
    print("matches the library:", same)
    print(f"{time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
