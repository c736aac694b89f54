"""Substitution decomposition trees.

Every permutation other than 1 is uniquely a sum of sum-indecomposables, a
skew sum of skew-indecomposables, or an inflation of a nonmonotone simple
permutation of length at least 4.  Applying this recursively gives the
substitution decomposition tree; its height is the substitution depth.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .perm import (
    Perm,
    direct_sum,
    inflate,
    is_simple,
    skew_components,
    skew_sum,
    standardize,
    sum_components,
)

KINDS = ("leaf", "sum", "skew", "simple")


@dataclass(frozen=True)
class DecompositionTree:
    kind: str
    children: tuple["DecompositionTree", ...] = ()
    skeleton: Perm | None = field(default=None)

    @property
    def height(self) -> int:
        if self.kind == "leaf":
            return 0
        return 1 + max(c.height for c in self.children)

    @property
    def size(self) -> int:
        if self.kind == "leaf":
            return 1
        return sum(c.size for c in self.children)

    def node_skeleton(self) -> Perm:
        """The permutation being inflated at this node (``1`` for a leaf)."""
        if self.kind == "leaf":
            return Perm.identity(1)
        if self.kind == "sum":
            return Perm.identity(len(self.children))
        if self.kind == "skew":
            return Perm.decreasing(len(self.children))
        return self.skeleton

    def is_monotone_node(self) -> bool:
        return self.kind in ("sum", "skew") and all(c.kind == "leaf" for c in self.children)

    def __str__(self) -> str:
        head = self.node_skeleton().pretty()
        if self.kind == "leaf" or self.is_monotone_node():
            return head
        return head + "[" + ",".join(str(c) for c in self.children) + "]"

    def validate(self) -> None:
        """Raise ``ValueError`` if this tree is not a canonical decomposition tree."""
        if self.kind not in KINDS:
            raise ValueError(f"unknown node kind {self.kind!r}")
        if self.kind == "leaf":
            if self.children:
                raise ValueError("leaf with children")
            return
        if self.kind in ("sum", "skew"):
            if len(self.children) < 2:
                raise ValueError(f"{self.kind} node needs at least 2 children")
            if any(c.kind == self.kind for c in self.children):
                raise ValueError(f"{self.kind} node has a {self.kind} child")
        else:
            sk = self.skeleton
            if sk is None or len(sk) < 4 or not is_simple(sk):
                raise ValueError(f"skeleton {sk!r} is not simple of length >= 4")
            if len(sk) != len(self.children):
                raise ValueError(
                    f"skeleton of length {len(sk)} has {len(self.children)} children"
                )
        for c in self.children:
            c.validate()


LEAF = DecompositionTree("leaf")


def _blocks(p: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal proper intervals of a sum- and skew-indecomposable permutation,
    as 0-based half-open ranges covering every position."""
    n = len(p)
    longest = list(range(n))  # longest[a] = last index of the longest proper interval from a
    for a in range(n):
        lo = hi = p[a]
        for b in range(a + 1, n):
            v = p[b]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == b - a and b - a + 1 < n:
                longest[a] = b
    blocks = []
    a = 0
    while a < n:
        blocks.append((a, longest[a] + 1))
        a = longest[a] + 1
    return blocks


def decompose(p: Sequence[int]) -> DecompositionTree:
    """The substitution decomposition tree of a nonempty permutation.

    >>> str(decompose(Perm.parse("2143")))
    '12[21,21]'
    """
    n = len(p)
    if n == 0:
        raise ValueError("cannot decompose the empty permutation")
    if n == 1:
        return LEAF
    parts = sum_components(p)
    if len(parts) > 1:
        return DecompositionTree("sum", tuple(decompose(q) for q in parts))
    parts = skew_components(p)
    if len(parts) > 1:
        return DecompositionTree("skew", tuple(decompose(q) for q in parts))
    blocks = _blocks(p)
    skeleton = standardize([p[a] for a, _ in blocks])
    children = tuple(decompose(standardize(p[a:b])) for a, b in blocks)
    return DecompositionTree("simple", children, skeleton)


def reconstruct(tree: DecompositionTree) -> Perm:
    tree.validate()
    return _build(tree)


def _build(tree: DecompositionTree) -> Perm:
    if tree.kind == "leaf":
        return Perm.identity(1)
    parts = [_build(c) for c in tree.children]
    if tree.kind == "sum":
        return direct_sum(*parts)
    if tree.kind == "skew":
        return skew_sum(*parts)
    return inflate(tree.skeleton, parts)


def substitution_depth(p: Sequence[int]) -> int:
    """Height of the decomposition tree: 0 for ``1``, 1 for simple or monotone perms."""
    return decompose(p).height


def parse_tree(text: str) -> DecompositionTree:
    """Read the nested notation produced by ``str(tree)``, e.g. ``2413[1,3142[1,1,21,1],12,1]``."""
    pos = 0

    def node() -> DecompositionTree:
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos] not in "[],":
            pos += 1
        if start == pos:
            raise ValueError(f"expected a permutation at column {pos + 1}")
        head = Perm.parse(text[start:pos])
        if pos < len(text) and text[pos] == "[":
            pos += 1
            kids = [node()]
            while pos < len(text) and text[pos] == ",":
                pos += 1
                kids.append(node())
            if pos >= len(text) or text[pos] != "]":
                raise ValueError(f"expected ']' at column {pos + 1}")
            pos += 1
        else:
            kids = [LEAF] * len(head)
        if len(head) == 1:
            return LEAF if not kids or kids == [LEAF] else kids[0]
        if len(kids) != len(head):
            raise ValueError(f"{head.pretty()} needs {len(head)} children, got {len(kids)}")
        if head == Perm.identity(len(head)):
            return DecompositionTree("sum", tuple(kids))
        if head == Perm.decreasing(len(head)):
            return DecompositionTree("skew", tuple(kids))
        return DecompositionTree("simple", tuple(kids), head)

    text = text.strip()
    tree = node()
    if pos != len(text):
        raise ValueError(f"trailing input at column {pos + 1}")
    return tree
