"""Counting permutation classes and guessing linear recurrences for the counts.

Avoiders of length ``n`` are grown from avoiders of length ``n - 1`` by
inserting the new maximum into every gap.  A class is closed under deletion, so
a child can only fail through a copy of a basis pattern that uses the new
entry, and only that needs checking.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .perm import Basis, Perm, contains_through

COUNT_CAP = 11


@dataclass(frozen=True)
class CountSequence:
    """``counts[n - 1]`` is the number of avoiders of length ``n``."""

    basis: Basis
    counts: tuple[int, ...]

    def at(self, n: int) -> int:
        return self.counts[n - 1]

    def lines(self) -> list[str]:
        return [f"{n} {c}" for n, c in enumerate(self.counts, start=1)]


def _as_basis(basis: Basis | Sequence[Sequence[int]]) -> Basis:
    return basis if isinstance(basis, Basis) else Basis.reduced(basis)


def avoiders(basis: Basis | Sequence[Sequence[int]], n_max: int) -> Iterator[Perm]:
    """Every permutation of length ``1..n_max`` avoiding ``basis``, depth first.

    A plain list of patterns may contain redundant ones; they are dropped.

    >>> [p.compact() for p in avoiders([(2, 1)], 3)]
    ['1', '12', '123']
    """
    basis = _as_basis(basis)
    patterns = basis.sorted()
    if n_max < 1 or any(len(q) == 1 for q in patterns):
        return

    def grow(p: tuple[int, ...]) -> Iterator[Perm]:
        n = len(p)
        yield Perm._trusted(p)
        if n == n_max:
            return
        for gap in range(n + 1):
            child = p[:gap] + (n + 1,) + p[gap:]
            if not any(contains_through(q, child, gap + 1) for q in patterns):
                yield from grow(child)

    yield from grow((1,))


def count_avoiders(basis: Basis | Sequence[Sequence[int]], n_max: int) -> CountSequence:
    """Number of permutations of each length ``1..n_max`` avoiding ``basis``.

    >>> count_avoiders(Basis.parse("321"), 5).counts
    (1, 2, 5, 14, 42)
    """
    basis = _as_basis(basis)
    if n_max > COUNT_CAP:
        raise ValueError(f"count_avoiders is capped at n = {COUNT_CAP}, got {n_max}")
    counts = [0] * max(n_max, 0)
    for p in avoiders(basis, n_max):
        counts[len(p) - 1] += 1
    return CountSequence(basis, tuple(counts))


@dataclass(frozen=True)
class LinearRecurrence:
    """``a(n) = c_1 a(n-1) + ... + c_d a(n-d)`` with ``a(start), ..., a(start+d-1)`` given."""

    coefficients: tuple[Fraction, ...]
    initial: tuple[int, ...]
    start: int = 1

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def terms(self, count: int) -> list[int]:
        """The first ``count`` terms, starting at index ``start``."""
        out = list(self.initial[:count])
        while len(out) < count:
            value = sum(c * out[-i] for i, c in enumerate(self.coefficients, start=1))
            if value.denominator != 1:
                raise ValueError(f"recurrence gives the non-integer term {value}")
            out.append(int(value))
        return out

    def __str__(self) -> str:
        coeffs = " ".join(str(c) for c in self.coefficients)
        init = " ".join(str(a) for a in self.initial)
        return f"order {self.order}\ncoefficients {coeffs}\ninitial {init}"


def predict(rec: LinearRecurrence, n: int) -> int:
    """The term ``a(n)``.

    >>> predict(LinearRecurrence((Fraction(2),), (1,)), 7)
    64
    """
    if n < rec.start:
        raise ValueError(f"index {n} precedes the first term a({rec.start})")
    return rec.terms(n - rec.start + 1)[-1]


def _solve(rows: list[list[Fraction]], rhs: list[Fraction], d: int) -> list[Fraction] | None:
    """A solution of the possibly overdetermined system, or ``None`` if inconsistent.

    Free variables are set to zero.
    """
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    pivots: list[int] = []
    r = 0
    for col in range(d):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    if any(all(x == 0 for x in row[:d]) and row[d] != 0 for row in m[r:]):
        return None
    sol = [Fraction(0)] * d
    for i, col in enumerate(pivots):
        sol[col] = m[i][d]
    return sol


def guess_recurrence(
    seq: CountSequence | Sequence[int], max_order: int | None = None, holdout: int = 2
) -> LinearRecurrence | None:
    """The lowest-order recurrence that fits all but the last ``holdout`` terms
    and then predicts those held-out terms exactly.

    >>> str(guess_recurrence([1, 2, 4, 8, 16, 32, 64]).coefficients)
    '(Fraction(2, 1),)'
    >>> guess_recurrence([1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786], 4) is None
    True
    """
    terms = list(seq.counts if isinstance(seq, CountSequence) else seq)
    if holdout < 0:
        raise ValueError("holdout must be non-negative")
    train = len(terms) - holdout
    if max_order is None:
        max_order = train // 2
    if max_order < 1 or train < 2 * max_order:
        raise ValueError(
            f"{len(terms)} terms are too few for order {max_order} with holdout {holdout}"
        )
    for d in range(1, max_order + 1):
        rows = [[Fraction(terms[n - i]) for i in range(1, d + 1)] for n in range(d, train)]
        rhs = [Fraction(terms[n]) for n in range(d, train)]
        sol = _solve(rows, rhs, d)
        if sol is None:
            continue
        rec = LinearRecurrence(tuple(sol), tuple(terms[:d]))
        try:
            if rec.terms(len(terms)) == terms:
                return rec
        except ValueError:
            continue
    return None
