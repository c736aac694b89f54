"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here shares code with the package beyond the ``Perm`` container and
simple data classes, so agreement is a real cross-check.
"""
from __future__ import annotations

import itertools
import math

import networkx as nx
from hypothesis import strategies as st

from permwqo.perm import Perm


def std(values):
    order = sorted(values)
    return tuple(order.index(v) + 1 for v in values)


def bf_contains(pattern, host):
    """Lexicographically least embedding by scanning all index subsets in order."""
    k = len(pattern)
    pattern = tuple(pattern)
    for idx in itertools.combinations(range(len(host)), k):
        if std([host[i] for i in idx]) == pattern:
            return tuple(i + 1 for i in idx)
    return None


def bf_intervals(p):
    n = len(p)
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            block = p[a : b + 1]
            if max(block) - min(block) == b - a:
                out.append((a + 1, b + 1))
    return sorted(out)


def bf_longest(p):
    best_inc = best_dec = 0
    n = len(p)
    for r in range(1, n + 1):
        for idx in itertools.combinations(range(n), r):
            vals = [p[i] for i in idx]
            if all(x < y for x, y in zip(vals, vals[1:])):
                best_inc = max(best_inc, r)
            if all(x > y for x, y in zip(vals, vals[1:])):
                best_dec = max(best_dec, r)
    return best_inc, best_dec


def all_perms(n):
    return [tuple(q) for q in itertools.permutations(range(1, n + 1))]


def naive_count(basis, n):
    return sum(1 for q in all_perms(n) if all(bf_contains(b, q) is None for b in basis))


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_isomorphic(g, h):
    return nx.is_isomorphic(to_nx(g), to_nx(h))


def nx_induced(host, pattern):
    """Induced subgraph containment via networkx's VF2 node-induced matcher."""
    return nx.algorithms.isomorphism.GraphMatcher(to_nx(host), to_nx(pattern)).subgraph_is_isomorphic()


def inversion_graph_nx(p):
    h = nx.Graph()
    h.add_nodes_from(range(len(p)))
    h.add_edges_from((i, j) for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])
    return h


def bf_perms_of(g):
    target = to_nx(g)
    return {q for q in all_perms(g.n) if nx.is_isomorphic(inversion_graph_nx(q), target)}


def bf_modules(g):
    n = g.n
    out = []
    for r in range(2, n):
        for members in itertools.combinations(range(n), r):
            inside = set(members)
            if all(
                len({g.adjacent(v, m) for m in members}) == 1 for v in range(n) if v not in inside
            ):
                out.append(frozenset(members))
    return out


def bf_max_independent(rects):
    for r in range(len(rects), 0, -1):
        for sub in itertools.combinations(rects, r):
            if all(not a.dependent(b) for a, b in itertools.combinations(sub, 2)):
                return r
    return 0


def bf_min_slicing(rects):
    """Fewest lines at integer coordinates, trying every candidate set by size."""
    xs = range(min(r.x1 for r in rects), max(r.x2 for r in rects) + 1)
    ys = range(min(r.y1 for r in rects), max(r.y2 for r in rects) + 1)
    lines = [("x", c) for c in xs] + [("y", c) for c in ys]
    for size in range(1, len(rects) + 1):
        for chosen in itertools.combinations(lines, size):
            if all(
                any((r.x1 <= c <= r.x2) if a == "x" else (r.y1 <= c <= r.y2) for a, c in chosen)
                for r in rects
            ):
                return size
    return math.inf


def bf_grid_member(p, rows_top_down):
    """Membership in a 0/+-1 grid class by trying every cut placement."""
    n = len(p)
    u, t = len(rows_top_down), len(rows_top_down[0])
    cell = {(k + 1, u - l): rows_top_down[l][k] for l in range(u) for k in range(t)}
    for cols in itertools.combinations_with_replacement(range(1, n + 2), t - 1):
        cc = (1, *cols, n + 1)
        for rows in itertools.combinations_with_replacement(range(1, n + 2), u - 1):
            rr = (1, *rows, n + 1)
            good = True
            for (k, l), c in cell.items():
                vals = [p[i - 1] for i in range(cc[k - 1], cc[k]) if rr[l - 1] <= p[i - 1] < rr[l]]
                if c == 0 and vals:
                    good = False
                elif c == 1 and any(a > b for a, b in zip(vals, vals[1:])):
                    good = False
                elif c == -1 and any(a < b for a, b in zip(vals, vals[1:])):
                    good = False
                if not good:
                    break
            if good:
                return True
    return False


def perms(min_size=1, max_size=8):
    """Hypothesis strategy for permutations."""
    return st.integers(min_size, max_size).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(Perm)
    )
