"""Antichain constructions and exact incomparability verifiers.

Two graph encodings turn permutations into graphs.  ``ding_graph`` builds a
three-part graph from two chain graphs and a complete bipartite graph.
``split_graph`` splits the first part into a matched pair of parts.

Four permutation families are provided, each indexed by ``k >= 1``:

``parallel``
    Length ``4k + 8``, two columns of ``21`` blocks with a ``21`` anchor at each
    end.  It lives in ``Grid(oplus21 oplus21)``.
``hook``
    Length ``6k + 5``, in the grid class with rows ``oplus21 av21`` over
    ``0 oplus21``.
``monotone_grid``
    Length ``4k + 8``, inside the 2x2 grid class whose four cells are all
    increasing.  See :func:`monotone_grid_element` for the construction.
``increasing_osc``
    Length ``k + 5``, an increasing oscillation whose two end entries are
    inflated by ``21``.  See :func:`increasing_osc_element`.

The verifiers only certify finite prefixes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .graphs import ForbiddenPair, Graph, graph_of, induced_contains
from .grid import GridMatrix, grid_membership, parse_matrix
from .perm import Perm, contains, inflate, proper_intervals

FAMILY_KINDS = ("ding", "split", "parallel", "hook", "monotone_grid", "increasing_osc")
CLI_NAMES = {
    "ding": "ding",
    "split": "split",
    "parallel": "parallel",
    "hook": "hook",
    "monogrid": "monotone_grid",
    "incosc": "increasing_osc",
}
DIRECT_VERTEX_CAP = 24

# The grid class and forbidden path/clique pair that each permutation family is meant to satisfy.
FAMILY_MATRIX = {
    "parallel": "oplus21 oplus21",
    "hook": "oplus21 av21 / 0 oplus21",
    "monotone_grid": "1 1 / 1 1",
}
FAMILY_FORBIDDEN = {
    "parallel": ForbiddenPair(7, 5),
    "hook": ForbiddenPair(6, 6),
    "monotone_grid": ForbiddenPair(8, 4),
}


@dataclass(frozen=True)
class FamilyId:
    kind: str
    k: int = 1

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        if self.k < 1:
            raise ValueError(f"family index must be >= 1, got {self.k}")

    @classmethod
    def parse(cls, name: str, k: int = 1) -> "FamilyId":
        """Accept the short command-line names as well as the full kind names."""
        return cls(CLI_NAMES.get(name, name), k)


# -- graph encodings ------------------------------------------------------------


def ding_graph(p: Sequence[int]) -> Graph:
    """The three-part graph ``B_p``: parts U, V, W of size n each.

    ``u_i`` is adjacent to ``v_1..v_i``, ``u_{p(i)}`` is adjacent to
    ``w_1..w_i``, and every V--W edge is present.  Vertices ``0..n-1`` are U,
    ``n..2n-1`` are V and ``2n..3n-1`` are W.
    """
    n = len(p)
    if n == 0:
        raise ValueError("ding_graph needs a nonempty permutation")
    u, v, w = 0, n, 2 * n
    edges = []
    for i in range(n):
        edges += [(u + i, v + j) for j in range(i + 1)]
        edges += [(u + p[i] - 1, w + j) for j in range(i + 1)]
    edges += [(v + a, w + b) for a in range(n) for b in range(n)]
    return Graph.from_edges(3 * n, edges, ["U"] * n + ["V"] * n + ["W"] * n)


def split_graph(p: Sequence[int]) -> Graph:
    """``B_p`` with every ``u`` split into ``u1`` (keeping the V edges) and ``u2``
    (keeping the W edges), joined by a perfect matching.

    Layout: U1 = ``0..n-1``, U2 = ``n..2n-1``, V, then W.
    """
    n = len(p)
    if n == 0:
        raise ValueError("split_graph needs a nonempty permutation")
    u1, u2, v, w = 0, n, 2 * n, 3 * n
    edges = [(u1 + i, u2 + i) for i in range(n)]
    for i in range(n):
        edges += [(u1 + i, v + j) for j in range(i + 1)]
        edges += [(u2 + p[i] - 1, w + j) for j in range(i + 1)]
    edges += [(v + a, w + b) for a in range(n) for b in range(n)]
    labels = ["U1"] * n + ["U2"] * n + ["V"] * n + ["W"] * n
    return Graph.from_edges(4 * n, edges, labels)


# -- permutation families -------------------------------------------------------


def parallel_element(k: int) -> Perm:
    """Element ``k`` of the parallel antichain, length ``4k + 8``.

    The left column is ``3 2``, then ``k`` blocks ``4j+3, 4j``, then ``N, N-4``;
    the right column is ``5 1``, then ``k`` blocks ``4j+5, 4j+2``, then
    ``N-1, N-2``.

    >>> parallel_element(1).pretty()
    '3 2 7 4 12 8 5 1 9 6 11 10'
    """
    _check_index(k)
    N = 4 * k + 8
    left = [3, 2] + [x for j in range(1, k + 1) for x in (4 * j + 3, 4 * j)] + [N, N - 4]
    right = [5, 1] + [x for j in range(1, k + 1) for x in (4 * j + 5, 4 * j + 2)] + [N - 1, N - 2]
    return Perm(left + right)


def hook_element(k: int) -> Perm:
    """Element ``k`` of the hook antichain, length ``6k + 5``.

    >>> hook_element(1).pretty()
    '8 5 10 9 6 2 1 4 7 11 3'
    """
    _check_index(k)
    N = 6 * k + 5
    left = [x for j in range(1, k + 1) for x in (2 * k + 2 + 4 * j, 2 * k - 1 + 4 * j)]
    left += [N - 1, N - 2]
    middle = [2 * k + 4, 2, 1]
    right: list[int] = []
    for j in range(1, k + 1):
        third = 2 * k + 4 + 4 * j if j < k else N
        right += [2 * j + 2, 2 * k + 1 + 4 * j, third, 2 * j + 1]
    return Perm(left + middle + right)


def from_words(top: str, right: str, bottom: str, left: str) -> Perm:
    """Assemble a permutation of the 2x2 all-increasing grid class from its cells.

    The cells are A (top left), B (top right), C (bottom right) and D (bottom
    left), each increasing.  Such a permutation is fixed by the order in which
    neighbouring cells interleave.  ``left`` and ``right`` list the cells of
    each column from left to right.  ``bottom`` and ``top`` list the cells of
    each row from bottom to top.

    >>> from_words("AB", "BC", "DC", "DA").pretty()
    '1342'
    """
    for word, letters in ((top, "AB"), (right, "BC"), (bottom, "DC"), (left, "DA")):
        if set(word) - set(letters):
            raise ValueError(f"word {word!r} may only use {letters}")
    for cell, (w1, w2) in {"A": (top, left), "B": (top, right), "C": (right, bottom), "D": (bottom, left)}.items():
        if w1.count(cell) != w2.count(cell):
            raise ValueError(f"the two words through cell {cell} disagree on its size")

    def ranks(word: str) -> dict[tuple[str, int], int]:
        seen = dict.fromkeys("ABCD", 0)
        out = {}
        for rank, cell in enumerate(word, start=1):
            out[cell, seen[cell]] = rank
            seen[cell] += 1
        return out

    pos = ranks(left + right)
    val = ranks(bottom + top)
    entries = [0] * len(pos)
    for key, i in pos.items():
        entries[i - 1] = val[key]
    return Perm(entries)


def monotone_grid_words(k: int) -> tuple[str, str, str, str]:
    _check_index(k)
    return (
        "BA" + "BA" * k + "AB",
        "BB" + "BC" * k + "CC",
        "CD" + "DC" * k + "DC",
        "DD" + "AD" * k + "AA",
    )


def monotone_grid_element(k: int) -> Perm:
    """Element ``k`` of an antichain inside the 2x2 all-increasing grid class.

    Each of the four cells holds ``k + 2`` points.  In the middle of every
    word the two cells alternate, so the points wind around the four cells like
    a spiral.  Those alternating cores alone form a chain under containment.
    The short fixed prefixes and suffixes in :func:`monotone_grid_words` pin
    down both ends.  Each element then has exactly two proper intervals, both
    ``12`` pairs.  The affixes were chosen by an exhaustive search over
    prefixes and suffixes of length at most two.  The search kept the shortest
    choice that made the first twelve elements a permutation antichain with
    only the two anchor intervals (see ``scripts/derive_families.py``).

    >>> monotone_grid_element(1).pretty()
    '2 3 8 5 10 11 7 9 12 1 4 6'
    """
    return from_words(*monotone_grid_words(k))


def increasing_oscillation(n: int) -> Perm:
    """The increasing oscillation of length ``n``, whose permutation graph is a path.

    It is the restriction of ``2 4 1 6 3 8 5 ...`` to the first ``n`` vertices
    along its path, which visits positions ``1, 3, 2, 5, 4, 7, 6, ...``.

    >>> [increasing_oscillation(n).compact() for n in (4, 5, 6)]
    ['2413', '24153', '241635']
    """
    if n < 1:
        raise ValueError("oscillations need n >= 1")
    size = n + 3
    seq = [2] + [j + 2 if j % 2 == 0 else j - 2 for j in range(2, size + 1)]
    path = [1] + [i for j in range(1, size) for i in (2 * j + 1, 2 * j)]
    keep = sorted(path[:n])
    ordered = sorted(seq[i - 1] for i in keep)
    rank = {v: r for r, v in enumerate(ordered, start=1)}
    return Perm(rank[seq[i - 1]] for i in keep)


def increasing_osc_element(k: int) -> Perm:
    """Element ``k`` of the anchored increasing oscillation antichain, length ``k + 5``.

    The increasing oscillation of length ``k + 3`` has a path as its graph.
    Inflating the entries at both ends of that path by ``21`` anchors it.  An
    embedding of one element in a longer one would have to send anchors to
    anchors, and so would have to embed a path in a longer path end to end.

    >>> increasing_osc_element(1).pretty()
    '326154'
    """
    _check_index(k)
    base = increasing_oscillation(k + 3)
    g = graph_of(base)
    ends = {v + 1 for v in range(g.n) if g.degree(v) == 1}
    two_one = Perm((2, 1))
    return inflate(base, [two_one if i in ends else Perm((1,)) for i in range(1, len(base) + 1)])


_GENERATORS = {
    "parallel": parallel_element,
    "hook": hook_element,
    "monotone_grid": monotone_grid_element,
    "increasing_osc": increasing_osc_element,
}


def antichain_element(family: FamilyId) -> Perm:
    if family.kind not in _GENERATORS:
        raise ValueError(
            f"{family.kind} is a graph encoding, not a permutation family; use {family.kind}_graph"
        )
    return _GENERATORS[family.kind](family.k)


def family_prefix(kind: str, count: int) -> list[Perm]:
    return [antichain_element(FamilyId(kind, k)) for k in range(1, count + 1)]


def family_matrix(kind: str) -> GridMatrix:
    return parse_matrix(FAMILY_MATRIX[kind])


def _check_index(k: int) -> None:
    if k < 1:
        raise ValueError(f"family index must be >= 1, got {k}")


# -- verification ---------------------------------------------------------------


@dataclass(frozen=True)
class PairVerdict:
    """Outcome for the ordered pair ``(elements[i], elements[j])``.

    ``witness`` is ``None`` when element ``i`` does not embed in element ``j``;
    otherwise it is a permutation embedding (1-based positions) or a graph
    embedding (0-based vertices) showing that it does.  In symmetry mode
    ``via`` names which symmetry of element ``i`` embeds.
    """

    i: int
    j: int
    witness: tuple[int, ...] | None
    via: str | None = None

    @property
    def incomparable(self) -> bool:
        return self.witness is None

    def line(self) -> str:
        if self.witness is None:
            return f"{self.i + 1} {self.j + 1} incomparable"
        how = f" via {self.via}" if self.via else ""
        return f"{self.i + 1} {self.j + 1} embeds{how} at {' '.join(map(str, self.witness))}"


@dataclass(frozen=True)
class AntichainReport:
    elements: tuple[Perm, ...]
    mode: str
    verdicts: tuple[PairVerdict, ...]
    membership: tuple[bool, ...] | None = field(default=None)

    @property
    def violations(self) -> list[PairVerdict]:
        return [v for v in self.verdicts if not v.incomparable]

    @property
    def is_antichain(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        out = [v.line() for v in self.verdicts]
        if self.membership is not None:
            out += [f"{i + 1} member {'yes' if m else 'no'}" for i, m in enumerate(self.membership)]
        out.append("antichain" if self.is_antichain else "not an antichain")
        return out


def _prepare(elems: Sequence[Sequence[int]]) -> tuple[Perm, ...]:
    perms = tuple(Perm(e) for e in elems)
    if not perms:
        raise ValueError("need at least one element")
    if len(set(perms)) != len(perms):
        raise ValueError("elements must be pairwise distinct")
    return perms


def _membership(perms, matrix: GridMatrix | None):
    if matrix is None:
        return None
    return tuple(grid_membership(p, matrix) is not None for p in perms)


def verify_perm_antichain(
    elems: Sequence[Sequence[int]], matrix: GridMatrix | None = None
) -> AntichainReport:
    """Check every ordered pair of distinct elements for containment.

    >>> verify_perm_antichain([Perm.parse("2413"), Perm.parse("3142")]).is_antichain
    True
    """
    perms = _prepare(elems)
    verdicts = tuple(
        PairVerdict(i, j, contains(perms[i], perms[j]))
        for i, j in itertools.permutations(range(len(perms)), 2)
    )
    return AntichainReport(perms, "perm", verdicts, _membership(perms, matrix))


def anchor_intervals_ok(p: Sequence[int]) -> bool:
    """True when the only proper intervals of ``p`` are two ``21`` pairs."""
    iv = proper_intervals(p)
    return len(iv) == 2 and all(b == a + 1 and p[a - 1] > p[b - 1] for a, b in iv)


SYMMETRY_NAMES = ("identity", "inverse", "reverse_complement", "inverse_reverse_complement")


def verify_graph_antichain(
    elems: Sequence[Sequence[int]],
    mode: str = "direct",
    matrix: GridMatrix | None = None,
    vertex_cap: int = DIRECT_VERTEX_CAP,
) -> AntichainReport:
    """Certify that the permutation graphs of ``elems`` are pairwise incomparable.

    ``direct`` runs induced subgraph search on every ordered pair and refuses
    graphs with more than ``vertex_cap`` vertices.  ``symmetry`` first checks
    that every element's only proper intervals are two ``21`` anchors.  When
    that holds, the graphs that are isomorphic to the graph of an element are
    exactly the graphs of its four symmetries (identity, inverse,
    reverse-complement and their composite).  So ``G_s`` embeds in ``G_p``
    precisely when one of those four symmetries of ``s`` is contained in ``p``.
    """
    perms = _prepare(elems)
    pairs = list(itertools.permutations(range(len(perms)), 2))
    if mode == "direct":
        big = [p for p in perms if len(p) > vertex_cap]
        if big:
            raise ValueError(
                f"direct mode is capped at {vertex_cap} vertices; got an element of length {len(big[0])}"
            )
        graphs = [graph_of(p) for p in perms]
        verdicts = tuple(PairVerdict(i, j, induced_contains(graphs[j], graphs[i])) for i, j in pairs)
    elif mode == "symmetry":
        for p in perms:
            if not anchor_intervals_ok(p):
                raise ValueError(
                    f"symmetry mode needs exactly two proper intervals, both 21 pairs; "
                    f"{p.pretty()} has {proper_intervals(p)}"
                )
        verdicts = tuple(_symmetry_verdict(perms, i, j) for i, j in pairs)
    else:
        raise ValueError(f"unknown mode {mode!r}; expected direct or symmetry")
    return AntichainReport(perms, mode, verdicts, _membership(perms, matrix))


def _symmetry_verdict(perms: tuple[Perm, ...], i: int, j: int) -> PairVerdict:
    for name, s in zip(SYMMETRY_NAMES, perms[i].symmetries()):
        hit = contains(s, perms[j])
        if hit is not None:
            return PairVerdict(i, j, hit, name)
    return PairVerdict(i, j, None)
