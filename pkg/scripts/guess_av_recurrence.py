"""Count Av(24153, 31524, l...21) and try to guess a linear recurrence for the counts.

The class is strongly rational, so some recurrence exists, but its order may
exceed what a handful of terms can pin down.  The outcome is reported, not
asserted.

Usage: python3 scripts/guess_av_recurrence.py [--ell 4] [--n 11] [--holdout 2]
"""
import argparse
import time

from permwqo.enumeration import count_avoiders, guess_recurrence
from permwqo.perm import Basis, Perm


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ell", type=int, default=4)
    ap.add_argument("--n", type=int, default=11)
    ap.add_argument("--holdout", type=int, default=2)
    args = ap.parse_args()
    basis = Basis.reduced([Perm.parse("24153"), Perm.parse("31524"), Perm.decreasing(args.ell)])
    start = time.perf_counter()
    seq = count_avoiders(basis, args.n)
    print("basis", ", ".join(p.pretty() for p in basis.sorted()))
    print("\n".join(seq.lines()))
    print(f"counted in {time.perf_counter() - start:.1f}s")
    rec = guess_recurrence(seq, holdout=args.holdout)
    train = len(seq.counts) - args.holdout
    if rec is None:
        print(f"no recurrence of order <= {train // 2} fits with {args.holdout} held-out terms")
    else:
        print(rec)


if __name__ == "__main__":
    main()
