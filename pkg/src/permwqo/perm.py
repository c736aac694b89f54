"""Permutations in one-line notation and the containment order.

Permutations are 1-indexed: ``Perm((2, 4, 1, 5, 3))`` maps position 1 to 2,
position 2 to 4 and so on.  The plot of a permutation is the point set
``{(i, p(i))}`` in Cartesian (position, value) coordinates.
"""
from __future__ import annotations

import bisect
import functools
import itertools
from typing import Iterable, Iterator, Sequence

SYMMETRIES = (
    "inverse",
    "reverse",
    "complement",
    "reverse_complement",
    "inverse_reverse_complement",
)


class Perm(tuple):
    """An immutable permutation of ``{1, ..., n}``.

    >>> Perm((2, 4, 1, 5, 3)).inverse()
    Perm(31524)
    >>> str(Perm.parse("24153"))
    '2 4 1 5 3'
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, (int(x) for x in entries))
        if sorted(self) != list(range(1, len(self) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self)}: {tuple(self)}")
        return self

    @classmethod
    def _trusted(cls, entries: Iterable[int]) -> "Perm":
        return tuple.__new__(cls, entries)

    @classmethod
    def parse(cls, text: str) -> "Perm":
        """Read whitespace-separated one-line notation or the compact digit form."""
        text = text.strip()
        tokens = text.replace(",", " ").split()
        if len(tokens) == 1 and len(tokens[0]) > 1:
            digits = tokens[0]
            if not digits.isdigit():
                raise ValueError(f"cannot parse permutation {text!r}")
            if len(digits) > 9:
                raise ValueError(
                    f"compact form is ambiguous for length {len(digits)}; "
                    "use whitespace-separated entries"
                )
            tokens = list(digits)
        try:
            return cls(int(t) for t in tokens)
        except ValueError as exc:
            raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls._trusted(range(1, n + 1))

    @classmethod
    def decreasing(cls, n: int) -> "Perm":
        return cls._trusted(range(n, 0, -1))

    def __repr__(self) -> str:
        return f"Perm({self.compact() if len(self) <= 9 else str(self)})"

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def compact(self) -> str:
        if len(self) > 9:
            raise ValueError("compact form needs length <= 9")
        return "".join(map(str, self))

    def pretty(self) -> str:
        """Compact form when unambiguous, otherwise whitespace-separated."""
        return self.compact() if len(self) <= 9 else str(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    @property
    def n(self) -> int:
        return len(self)

    def plot(self) -> list[tuple[int, int]]:
        return [(i, v) for i, v in enumerate(self, 1)]

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Perm._trusted(inv)

    def reverse(self) -> "Perm":
        return Perm._trusted(reversed(self))

    def complement(self) -> "Perm":
        m = len(self) + 1
        return Perm._trusted(m - v for v in self)

    def reverse_complement(self) -> "Perm":
        m = len(self) + 1
        return Perm._trusted(m - v for v in reversed(self))

    def symmetries(self) -> tuple["Perm", "Perm", "Perm", "Perm"]:
        """The orbit ``(p, p^-1, p^rc, (p^-1)^rc)`` used throughout the graph arguments."""
        inv = self.inverse()
        return (self, inv, self.reverse_complement(), inv.reverse_complement())


def standardize(values: Sequence[int]) -> Perm:
    """The permutation order isomorphic to a sequence of distinct numbers."""
    order = sorted(range(len(values)), key=values.__getitem__)
    out = [0] * len(values)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return Perm._trusted(out)


def permutations(n: int) -> Iterator[Perm]:
    """All permutations of length n in lexicographic order."""
    for p in itertools.permutations(range(1, n + 1)):
        yield Perm._trusted(p)


def symmetry(p: Perm, which: str) -> Perm:
    if which == "inverse":
        return p.inverse()
    if which == "reverse":
        return p.reverse()
    if which == "complement":
        return p.complement()
    if which == "reverse_complement":
        return p.reverse_complement()
    if which == "inverse_reverse_complement":
        return p.inverse().reverse_complement()
    raise ValueError(f"unknown symmetry {which!r}; expected one of {SYMMETRIES}")


# -- containment -------------------------------------------------------------


@functools.lru_cache(maxsize=4096)
def _value_neighbours(pattern: tuple[int, ...]) -> list[tuple[int, int]]:
    """For each pattern index j, the earlier indices holding the nearest smaller
    and nearest larger value (-1 when absent)."""
    out = []
    for j, v in enumerate(pattern):
        lo, hi = -1, -1
        for i in range(j):
            w = pattern[i]
            if w < v and (lo < 0 or w > pattern[lo]):
                lo = i
            elif w > v and (hi < 0 or w < pattern[hi]):
                hi = i
        out.append((lo, hi))
    return out


def contains(pattern: Sequence[int], host: Sequence[int]) -> tuple[int, ...] | None:
    """Lexicographically least embedding of ``pattern`` in ``host``.

    Returns the 1-based host indices ``i_1 < ... < i_k`` or ``None`` when the
    pattern is avoided.

    >>> contains(Perm.parse("1"), Perm.parse("24153"))
    (1,)
    >>> contains(Perm.parse("321"), Perm.parse("24153")) is None
    True
    """
    k, n = len(pattern), len(host)
    if k == 0:
        return ()
    if k > n:
        return None
    bounds = _value_neighbours(tuple(pattern))
    chosen = [0] * k
    host = tuple(host)

    def extend(j: int, start: int) -> bool:
        lo, hi = bounds[j]
        vlo = host[chosen[lo]] if lo >= 0 else 0
        vhi = host[chosen[hi]] if hi >= 0 else n + 1
        last = n - (k - j)
        for pos in range(start, last + 1):
            v = host[pos]
            if vlo < v < vhi:
                chosen[j] = pos
                if j + 1 == k or extend(j + 1, pos + 1):
                    return True
        return False

    if extend(0, 0):
        return tuple(c + 1 for c in chosen)
    return None


def contains_through(pattern: Sequence[int], host: Sequence[int], index: int) -> bool:
    """Whether some embedding of ``pattern`` uses host position ``index`` (1-based)."""
    k, n = len(pattern), len(host)
    if k > n or k == 0:
        return False
    bounds = _value_neighbours(tuple(pattern))
    target = index - 1
    chosen = [0] * k

    def extend(j: int, start: int, used: bool) -> bool:
        lo, hi = bounds[j]
        vlo = host[chosen[lo]] if lo >= 0 else 0
        vhi = host[chosen[hi]] if hi >= 0 else n + 1
        last = n - (k - j)
        if not used:
            last = min(last, target)
        for pos in range(start, last + 1):
            v = host[pos]
            if vlo < v < vhi:
                chosen[j] = pos
                now = used or pos == target
                if j + 1 == k:
                    if now:
                        return True
                elif extend(j + 1, pos + 1, now):
                    return True
        return False

    return extend(0, 0, False)


def avoids(host: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return all(contains(p, host) is None for p in patterns)


class Basis(frozenset):
    """A finite antichain of nonempty patterns, the basis of ``Av(B)``.

    Construction rejects a pattern set in which one pattern contains another;
    use :meth:`reduced` to keep only the minimal ones.
    """

    def __new__(cls, patterns: Iterable[Sequence[int]] = ()):
        perms = [p if isinstance(p, Perm) else Perm(p) for p in patterns]
        if any(len(p) == 0 for p in perms):
            raise ValueError("basis patterns must be nonempty")
        perms = list(dict.fromkeys(perms))
        for a, b in itertools.permutations(perms, 2):
            if contains(a, b) is not None:
                raise ValueError(f"basis is not minimal: {a.pretty()} <= {b.pretty()}")
        return super().__new__(cls, perms)

    @classmethod
    def reduced(cls, patterns: Iterable[Sequence[int]]) -> "Basis":
        perms = sorted({Perm(p) for p in patterns}, key=lambda p: (len(p), p))
        keep: list[Perm] = []
        for p in perms:
            if all(contains(q, p) is None for q in keep):
                keep.append(p)
        return cls(keep)

    @classmethod
    def parse(cls, text: str, reduce: bool = False) -> "Basis":
        """Read comma- or semicolon-separated patterns; ``reduce`` drops non-minimal ones."""
        patterns = [Perm.parse(t) for t in text.replace(";", ",").split(",") if t.strip()]
        return cls.reduced(patterns) if reduce else cls(patterns)

    def sorted(self) -> list[Perm]:
        return sorted(self, key=lambda p: (len(p), p))

    def admits(self, p: Sequence[int]) -> bool:
        """Membership of ``p`` in ``Av(self)``."""
        return avoids(p, self)

    def __repr__(self) -> str:
        return f"Basis({', '.join(p.pretty() for p in self.sorted())})"


# -- sums and inflations -----------------------------------------------------


def direct_sum(*parts: Sequence[int]) -> Perm:
    out: list[int] = []
    for part in parts:
        shift = len(out)
        out.extend(v + shift for v in part)
    return Perm._trusted(out)


def skew_sum(*parts: Sequence[int]) -> Perm:
    total = sum(len(p) for p in parts)
    out: list[int] = []
    for part in parts:
        top = total - len(part)
        out.extend(v + top for v in part)
        total -= len(part)
    return Perm._trusted(out)


def combine(sigma: Sequence[int], tau: Sequence[int], mode: str = "sum") -> Perm:
    """``sigma (+) tau`` (``mode='sum'``) or ``sigma (-) tau`` (``mode='skew'``).

    >>> combine(Perm.parse("21"), Perm.parse("21"), "sum")
    Perm(2143)
    >>> combine(Perm.parse("12"), Perm.parse("12"), "skew")
    Perm(3412)
    """
    if not sigma or not tau:
        raise ValueError("sum and skew sum need nonempty operands")
    if mode == "sum":
        return direct_sum(sigma, tau)
    if mode == "skew":
        return skew_sum(sigma, tau)
    raise ValueError(f"unknown mode {mode!r}")


def inflate(sigma: Sequence[int], parts: Sequence[Sequence[int]]) -> Perm:
    """The inflation ``sigma[a_1, ..., a_m]``; part i replaces the entry at position i.

    >>> inflate(Perm.parse("21"), [Perm.parse("12"), Perm.parse("21")])
    Perm(3421)
    """
    if len(parts) != len(sigma):
        raise ValueError(
            f"malformed inflation: {len(sigma)} entries but {len(parts)} parts"
        )
    if any(len(a) == 0 for a in parts):
        raise ValueError("malformed inflation: empty part")
    # offset of each block is the total size of blocks inflating smaller values
    sizes_by_value = [0] * (len(sigma) + 1)
    for v, a in zip(sigma, parts):
        sizes_by_value[v] = len(a)
    offset = [0] * (len(sigma) + 2)
    for v in range(1, len(sigma) + 1):
        offset[v + 1] = offset[v] + sizes_by_value[v]
    out: list[int] = []
    for v, a in zip(sigma, parts):
        out.extend(x + offset[v] for x in a)
    return Perm(out)


# -- intervals and simplicity --------------------------------------------------


def intervals(p: Sequence[int]) -> list[tuple[int, int]]:
    """All intervals ``[a, b]`` (1-based, inclusive) of length at least 2.

    >>> intervals(Perm.parse("2143"))
    [(1, 2), (1, 4), (3, 4)]
    """
    n = len(p)
    out = []
    for a in range(n):
        lo = hi = p[a]
        for b in range(a + 1, n):
            v = p[b]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == b - a:
                out.append((a + 1, b + 1))
    return out


def proper_intervals(p: Sequence[int]) -> list[tuple[int, int]]:
    n = len(p)
    return [(a, b) for a, b in intervals(p) if b - a + 1 < n]


def is_simple(p: Sequence[int]) -> bool:
    """No interval of length strictly between 1 and n; lengths 1 and 2 count as simple."""
    n = len(p)
    for a in range(n):
        lo = hi = p[a]
        for b in range(a + 1, n if a else n - 1):
            v = p[b]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == b - a:
                return False
    return True


def sum_components(p: Sequence[int]) -> list[Perm]:
    """Sum-indecomposable parts of ``p`` from left to right."""
    parts, start, high = [], 0, 0
    for i, v in enumerate(p):
        high = max(high, v)
        if high == i + 1:
            parts.append(standardize(p[start : i + 1]))
            start = i + 1
    return parts


def skew_components(p: Sequence[int]) -> list[Perm]:
    n = len(p)
    parts, start, low = [], 0, n + 1
    for i, v in enumerate(p):
        low = min(low, v)
        if low == n - i:
            parts.append(standardize(p[start : i + 1]))
            start = i + 1
    return parts


# -- monotone structure -------------------------------------------------------


def longest_increasing(p: Sequence[int]) -> int:
    tails: list[int] = []
    for v in p:
        k = bisect.bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


def longest_monotone(p: Sequence[int]) -> tuple[int, int]:
    """Lengths of the longest increasing and longest decreasing subsequences."""
    if not p:
        raise ValueError("longest_monotone needs a nonempty permutation")
    return longest_increasing(p), longest_increasing([-v for v in p])


def _largest_power(p: Sequence[int], unit: Perm, glue) -> int:
    k = 0
    while 2 * (k + 1) <= len(p) and contains(glue(*([unit] * (k + 1))), p) is not None:
        k += 1
    return k


def monotone_chain_diagnostic(p: Sequence[int]) -> tuple[int, int]:
    """Largest k with the k-fold sum of 21, and the k-fold skew sum of 12, inside p.

    >>> monotone_chain_diagnostic(Perm.parse("214365"))
    (3, 1)
    """
    return (
        _largest_power(p, Perm._trusted((2, 1)), direct_sum),
        _largest_power(p, Perm._trusted((1, 2)), skew_sum),
    )


def extremal_entry_property(p: Sequence[int]) -> bool:
    """True when the greatest entry lies left of the least entry, or the leftmost
    entry lies above the rightmost entry.

    Every simple permutation of length at least 4 avoiding 24153 and 31524 has
    this property.  When it fails the four extremal entries form a 2143.

    >>> extremal_entry_property(Perm.parse("24153")), extremal_entry_property(Perm.parse("3142"))
    (False, True)
    """
    if not p:
        raise ValueError("extremal_entry_property needs a nonempty permutation")
    n = len(p)
    return p.index(n) < p.index(1) or p[0] > p[-1]
