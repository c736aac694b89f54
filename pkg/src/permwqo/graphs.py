"""Finite simple graphs, permutation graphs and induced subgraph search.

Vertices are ``0..n-1`` and adjacency is held as one bitmask per vertex.  The
permutation graph of ``p`` uses vertex ``i - 1`` for position ``i``.  The text
format is 1-indexed: a line with ``n`` followed by one ``i j`` edge per line.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .perm import Perm

PERMS_OF_HARD_CAP = 9
CANONICAL_CAP = 8


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency list length does not match vertex count")
        for v, mask in enumerate(self.adj):
            if mask >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if mask >> self.n:
                raise ValueError(f"vertex {v} adjacent to a vertex outside 0..{self.n - 1}")
            for w in _bits(mask):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric between {v} and {w}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("one label per vertex required")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            mask = 0
            for w in _bits(self.adj[v]):
                if w in index:
                    mask |= 1 << index[w]
            adj.append(mask)
        labels = tuple(self.labels[v] for v in vertices) if self.labels else None
        return Graph(len(vertices), tuple(adj), labels)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.adj)))

    def to_text(self) -> str:
        lines = [str(self.n)]
        lines += [f"{u + 1} {v + 1}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    def is_bipartite(self) -> bool:
        colour: dict[int, int] = {}
        for s in range(self.n):
            if s in colour:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in _bits(self.adj[v]):
                    if w not in colour:
                        colour[w] = 1 - colour[v]
                        stack.append(w)
                    elif colour[w] == colour[v]:
                        return False
        return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def parse_graph(text: str) -> Graph:
    """Parse the ``n`` / ``i j`` edge-list format (1-indexed, blank lines and ``#`` ignored)."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ValueError("empty graph description")
    lineno, first = rows[0]
    try:
        n = int(first)
    except ValueError:
        raise ValueError(f"line {lineno}, column 1: expected vertex count, got {first!r}") from None
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}, column 1: expected 'i j', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}, column 1: non-integer vertex in {line!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            col = 1 if not 1 <= u <= n else len(parts[0]) + 2
            raise ValueError(f"line {lineno}, column {col}: vertex out of range 1..{n}")
        if u == v:
            raise ValueError(f"line {lineno}, column 1: loop at vertex {u}")
        edges.append((u - 1, v - 1))
    return Graph.from_edges(n, edges)


# -- constructions -------------------------------------------------------------


def graph_of(p: Sequence[int]) -> Graph:
    """The permutation graph: positions i < j adjacent when p(i) > p(j).

    >>> graph_of(Perm.parse("231")).edges()
    [(0, 2), (1, 2)]
    """
    n = len(p)
    if n == 0:
        raise ValueError("graph_of needs a nonempty permutation")
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if p[i] > p[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def build_named(kind: str, n: int) -> Graph:
    """``path`` (edges i -- i+1), ``clique``, ``edgeless`` or ``cycle`` on n vertices."""
    if n < 1:
        raise ValueError("named graphs need n >= 1")
    if kind == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "clique":
        return Graph.from_edges(n, itertools.combinations(range(n), 2))
    if kind == "edgeless":
        return Graph(n, (0,) * n)
    if kind == "cycle":
        if n < 3:
            raise ValueError("cycles need n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    raise ValueError(f"unknown named graph {kind!r}")


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    for g in graphs:
        shift = len(adj)
        adj.extend(m << shift for m in g.adj)
    return Graph(len(adj), tuple(adj))


# -- induced subgraph search ---------------------------------------------------


def _search_order(g: Graph) -> list[int]:
    """Pattern vertices ordered so each one has many already-placed neighbours."""
    order: list[int] = []
    placed = 0
    remaining = set(range(g.n))
    while remaining:
        v = max(
            remaining,
            key=lambda u: ((g.adj[u] & placed).bit_count(), g.degree(u), -u),
        )
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def induced_contains(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """An embedding of ``pattern`` as an induced subgraph of ``host``.

    The result maps pattern vertex i to host vertex ``result[i]``; the first
    witness under a fixed search order is returned, or ``None``.
    """
    k, n = pattern.n, host.n
    if k == 0:
        return ()
    if k > n:
        return None
    full = (1 << n) - 1
    order = _search_order(pattern)
    hdeg = host.degrees()
    allowed = []
    links = []
    for j, v in enumerate(order):
        d = pattern.degree(v)
        nd = k - 1 - d
        mask = 0
        for h in range(n):
            if hdeg[h] >= d and n - 1 - hdeg[h] >= nd:
                mask |= 1 << h
        allowed.append(mask)
        links.append([(i, pattern.adjacent(v, order[i])) for i in range(j)])
    image = [0] * k

    def extend(j: int, used: int) -> bool:
        cand = allowed[j] & ~used
        for i, linked in links[j]:
            a = host.adj[image[i]]
            cand &= a if linked else full & ~a
            if not cand:
                return False
        for h in _bits(cand):
            image[j] = h
            if j + 1 == k or extend(j + 1, used | 1 << h):
                return True
        return False

    if not extend(0, 0):
        return None
    out = [0] * k
    for j, v in enumerate(order):
        out[v] = image[j]
    return tuple(out)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return induced_contains(g, h) is not None


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Lexicographically least relabelled edge list; exhaustive, so n <= 8 only."""
    if g.n > CANONICAL_CAP:
        raise ValueError(f"canonical_form is exhaustive and capped at {CANONICAL_CAP} vertices")
    edges = g.edges()
    best = None
    for relabel in itertools.permutations(range(g.n)):
        form = tuple(sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in edges))
        if best is None or form < best:
            best = form
    return g.n, best or ()


def perms_of_graph(g: Graph, length_cap: int = PERMS_OF_HARD_CAP) -> frozenset[Perm]:
    """Every permutation whose permutation graph is isomorphic to ``g``.

    Brute force over the ``n!`` candidates, building each left to right; the
    degree of a position is fixed the moment its value is chosen, which prunes
    against the degree multiset of ``g``.
    """
    n = g.n
    if length_cap > PERMS_OF_HARD_CAP or n > length_cap:
        raise ValueError(
            f"perms_of_graph is brute force: {n} vertices with cap {length_cap} "
            f"(hard cap {PERMS_OF_HARD_CAP})"
        )
    if n == 0:
        return frozenset({Perm()})
    wanted: dict[int, int] = {}
    for d in g.degrees():
        wanted[d] = wanted.get(d, 0) + 1
    found = []
    prefix: list[int] = []
    unused = list(range(1, n + 1))

    def extend() -> None:
        if not unused:
            p = Perm._trusted(prefix)
            if is_isomorphic(graph_of(p), g):
                found.append(p)
            return
        for idx, v in enumerate(list(unused)):
            deg = sum(1 for w in prefix if w > v) + idx
            if wanted.get(deg, 0) == 0:
                continue
            wanted[deg] -= 1
            prefix.append(v)
            del unused[idx]
            extend()
            unused.insert(idx, v)
            prefix.pop()
            wanted[deg] += 1

    extend()
    return frozenset(found)


# -- modules -------------------------------------------------------------------


def is_module(g: Graph, members: int) -> bool:
    outside = ((1 << g.n) - 1) & ~members
    for w in _bits(outside):
        seen = g.adj[w] & members
        if seen and seen != members:
            return False
    return True


MODULES_CAP = 16


def graph_modules(g: Graph) -> list[frozenset[int]]:
    """All modules with at least 2 and fewer than n vertices (exhaustive over subsets)."""
    if g.n > MODULES_CAP:
        raise ValueError(f"graph_modules enumerates subsets; capped at {MODULES_CAP} vertices")
    out = []
    full = (1 << g.n) - 1
    for members in range(1, full):
        size = members.bit_count()
        if size >= 2 and is_module(g, members):
            out.append(frozenset(_bits(members)))
    out.sort(key=lambda m: (len(m), sorted(m)))
    return out


def module_closure(g: Graph, members: int) -> int:
    """Smallest module containing the given vertex set."""
    full = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for w in _bits(full & ~members):
            seen = g.adj[w] & members
            if seen and seen != members:
                members |= 1 << w
                changed = True
    return members


def is_prime(g: Graph) -> bool:
    """No module of size strictly between 1 and n."""
    full = (1 << g.n) - 1
    for u, v in itertools.combinations(range(g.n), 2):
        if module_closure(g, 1 << u | 1 << v) != full:
            return False
    return True


# -- forbidden paths and cliques -----------------------------------------------


@dataclass(frozen=True)
class ForbiddenPair:
    """The pair ``{P_k, K_l}``."""

    path: int
    clique: int

    def __post_init__(self):
        if self.path < 1 or self.clique < 1:
            raise ValueError("path and clique sizes must be >= 1")


def clique_number(g: Graph) -> int:
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(size + 1, cand & g.adj[v])

    grow(0, (1 << g.n) - 1)
    return best


def omits(g: Graph, pair: ForbiddenPair) -> bool:
    """Whether g has neither an induced P_k nor a K_l."""
    if clique_number(g) >= pair.clique:
        return False
    return induced_contains(g, build_named("path", pair.path)) is None
