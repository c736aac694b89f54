"""Grid classes, griddings, rectangles and hull propagation.

Matrices use Cartesian indexing: column 1 is leftmost, row 1 is the bottom
row.  A cell is ``0`` (empty), ``1`` (increasing), ``-1`` (decreasing) or a
:class:`~permwqo.perm.Basis` standing for the class it defines.

Cuts follow the gridding convention: column cuts ``1 = c_1 <= ... <= c_{t+1} = n+1``
put positions ``c_k <= i < c_{k+1}`` in column k, and likewise for values and rows.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence, Union

from .perm import Basis, Perm, standardize

Cell = Union[int, Basis]

OPLUS21 = Basis.parse("321,231,312")


class GridError(ValueError):
    pass


def _cell_token(cell: Cell) -> str:
    if isinstance(cell, Basis):
        if cell == OPLUS21:
            return "oplus21"
        return "av(" + ";".join(p.pretty() for p in cell.sorted()) + ")"
    return str(cell)


def parse_cell(token: str) -> Cell:
    t = token.strip().lower()
    if t in ("0", "1", "-1"):
        return int(t)
    if t == "av21":
        return 1
    if t == "av12":
        return -1
    if t == "oplus21":
        return OPLUS21
    if t.startswith("av(") and t.endswith(")"):
        return Basis.parse(t[3:-1])
    raise GridError(f"unknown cell token {token!r}")


@dataclass(frozen=True)
class GridMatrix:
    """A t x u matrix stored column by column: ``columns[k-1][l-1]`` is cell (k, l)."""

    columns: tuple[tuple[Cell, ...], ...]

    def __post_init__(self):
        if not self.columns or not self.columns[0]:
            raise GridError("grid matrices need t >= 1 and u >= 1")
        if len({len(c) for c in self.columns}) != 1:
            raise GridError("ragged grid matrix")

    @classmethod
    def from_rows(cls, rows_top_down: Sequence[Sequence[Cell]]) -> "GridMatrix":
        rows = [list(r) for r in reversed(rows_top_down)]
        if len({len(r) for r in rows}) != 1:
            raise GridError("ragged grid matrix")
        return cls(tuple(tuple(rows[l][k] for l in range(len(rows))) for k in range(len(rows[0]))))

    @classmethod
    def from_cells(cls, t: int, u: int, cells: dict[tuple[int, int], Cell]) -> "GridMatrix":
        return cls(tuple(tuple(cells.get((k, l), 0) for l in range(1, u + 1)) for k in range(1, t + 1)))

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def height(self) -> int:
        return len(self.columns[0])

    def __getitem__(self, kl: tuple[int, int]) -> Cell:
        k, l = kl
        return self.columns[k - 1][l - 1]

    def cells(self) -> Iterator[tuple[tuple[int, int], Cell]]:
        for k in range(1, self.width + 1):
            for l in range(1, self.height + 1):
                yield (k, l), self[k, l]

    def nonzero(self) -> list[tuple[int, int]]:
        return [kl for kl, c in self.cells() if not (isinstance(c, int) and c == 0)]

    def is_monotone(self) -> bool:
        return all(isinstance(c, int) for _, c in self.cells())

    def rows_top_down(self) -> list[list[Cell]]:
        return [[self[k, l] for k in range(1, self.width + 1)] for l in range(self.height, 0, -1)]

    def to_text(self) -> str:
        return "\n".join(" ".join(_cell_token(c) for c in row) for row in self.rows_top_down()) + "\n"


def parse_matrix(text: str) -> GridMatrix:
    """Rows top to bottom separated by newlines or ``/``; cells by whitespace."""
    rows = [r.split() for r in text.replace("/", "\n").splitlines() if r.strip()]
    if not rows:
        raise GridError("empty matrix")
    return GridMatrix.from_rows([[parse_cell(t) for t in r] for r in rows])


# -- cell graph ----------------------------------------------------------------


@dataclass(frozen=True)
class CellGraph:
    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    def is_forest(self) -> bool:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True


def cell_graph(m: GridMatrix) -> CellGraph:
    """Nonzero cells, adjacent when they share a row or column with no nonzero cell between."""
    cells = m.nonzero()
    edges = []
    for k in range(1, m.width + 1):
        col = sorted(l for kk, l in cells if kk == k)
        edges += [((k, a), (k, b)) for a, b in zip(col, col[1:])]
    for l in range(1, m.height + 1):
        row = sorted(k for k, ll in cells if ll == l)
        edges += [((a, l), (b, l)) for a, b in zip(row, row[1:])]
    return CellGraph(tuple(cells), tuple(edges))


def corner_free(m: GridMatrix) -> bool:
    """No nonzero cell with a nonzero cell below it in its column and one to its right in its row."""
    if not m.is_monotone():
        raise GridError("corner_free is defined for 0/+-1 matrices only")
    nz = set(m.nonzero())
    for k, l in nz:
        below = any((k, ll) in nz for ll in range(1, l))
        right = any((kk, l) in nz for kk in range(k + 1, m.width + 1))
        if below and right:
            return False
    return True


# -- griddings -----------------------------------------------------------------


@dataclass(frozen=True)
class Gridding:
    col_cuts: tuple[int, ...]
    row_cuts: tuple[int, ...]

    @property
    def width(self) -> int:
        return len(self.col_cuts) - 1

    @property
    def height(self) -> int:
        return len(self.row_cuts) - 1

    def cell_of(self, i: int, v: int) -> tuple[int, int]:
        k = next(k for k in range(1, self.width + 1) if self.col_cuts[k - 1] <= i < self.col_cuts[k])
        l = next(l for l in range(1, self.height + 1) if self.row_cuts[l - 1] <= v < self.row_cuts[l])
        return k, l

    def cell_values(self, p: Sequence[int], k: int, l: int) -> list[int]:
        """Values of p inside cell (k, l), in position order."""
        c0, c1 = self.col_cuts[k - 1], self.col_cuts[k]
        r0, r1 = self.row_cuts[l - 1], self.row_cuts[l]
        return [v for v in p[c0 - 1 : c1 - 1] if r0 <= v < r1]


def cell_conforms(values: Sequence[int], cell: Cell) -> bool:
    if isinstance(cell, Basis):
        return not values or cell.admits(standardize(values))
    if cell == 0:
        return not values
    if cell == 1:
        return all(a < b for a, b in zip(values, values[1:]))
    if cell == -1:
        return all(a > b for a, b in zip(values, values[1:]))
    raise GridError(f"bad cell {cell!r}")


def _cut_sequences(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing cut sequences ``1 = c_1 <= ... <= c_{parts+1} = n+1``, lexicographic."""
    for inner in itertools.combinations_with_replacement(range(1, n + 2), parts - 1):
        yield (1, *inner, n + 1)


def grid_membership(p: Sequence[int], m: GridMatrix) -> Gridding | None:
    """The lexicographically first M-gridding of p, or ``None`` if p is not in Grid(M)."""
    n = len(p)
    t, u = m.width, m.height
    memo: dict[tuple[int, int, int, int, int], bool] = {}

    def ok(k: int, l: int, cols: tuple[int, ...], r0: int, r1: int) -> bool:
        c0, c1 = cols[k - 1], cols[k]
        key = (c0, c1, r0, r1, k * 1000 + l)
        hit = memo.get(key)
        if hit is None:
            values = [v for v in p[c0 - 1 : c1 - 1] if r0 <= v < r1]
            hit = memo[key] = cell_conforms(values, m[k, l])
        return hit

    for cols in _cut_sequences(n, t):
        rows = [1]

        def place(l: int) -> bool:
            if l == u:
                candidates = [n + 1]
            else:
                candidates = range(rows[-1], n + 2)
            for r in candidates:
                if all(ok(k, l, cols, rows[-1], r) for k in range(1, t + 1)):
                    rows.append(r)
                    if l == u or place(l + 1):
                        return True
                    rows.pop()
            return False

        if place(1):
            return Gridding(cols, tuple(rows))
    return None


def check_gridding(p: Sequence[int], m: GridMatrix, g: Gridding) -> bool:
    """Replay a gridding cell by cell, independently of the search that produced it."""
    n = len(p)
    if g.width != m.width or g.height != m.height:
        return False
    for cuts in (g.col_cuts, g.row_cuts):
        if cuts[0] != 1 or cuts[-1] != n + 1 or list(cuts) != sorted(cuts):
            return False
    cells: dict[tuple[int, int], list[int]] = {}
    for i, v in enumerate(p, 1):
        cells.setdefault(g.cell_of(i, v), []).append(v)
    for kl, cell in m.cells():
        if not cell_conforms(cells.get(kl, []), cell):
            return False
    return True


def _strict_cuts(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    for inner in itertools.combinations(range(2, n + 1), parts - 1):
        yield (1, *inner, n + 1)


def _monotone_cell(values: list[int], allow_dec: bool) -> int | None:
    if not values:
        return 0
    if all(a < b for a, b in zip(values, values[1:])):
        return 1
    if allow_dec and all(a > b for a, b in zip(values, values[1:])):
        return -1
    return None


def _min_gridding(
    p: Sequence[int], dim_cap: int, allow_dec: bool, accept: Callable[[GridMatrix], bool]
) -> tuple[GridMatrix, Gridding] | None:
    n = len(p)
    for total in range(2, dim_cap + 1):
        for t in range(1, total):
            u = total - t
            if t > n or u > n:
                continue
            for cols in _strict_cuts(n, t):
                column_values = [p[cols[k] - 1 : cols[k + 1] - 1] for k in range(t)]
                for rows in _strict_cuts(n, u):
                    cells = {}
                    for k in range(t):
                        for l in range(u):
                            r0, r1 = rows[l], rows[l + 1]
                            c = _monotone_cell([v for v in column_values[k] if r0 <= v < r1], allow_dec)
                            if c is None:
                                break
                            if c:
                                cells[k + 1, l + 1] = c
                        else:
                            continue
                        break
                    else:
                        mat = GridMatrix.from_cells(t, u, cells)
                        if accept(mat):
                            return mat, Gridding(cols, rows)
    return None


def min_corner_free_gridding(p: Sequence[int], dim_cap: int) -> tuple[GridMatrix, Gridding] | None:
    """A 0/1 corner-free matrix of least t+u (fewer columns first) that grids p.

    Empty rows and columns never help, so only strictly increasing cuts are tried.
    """
    if not p:
        raise GridError("need a nonempty permutation")
    return _min_gridding(p, dim_cap, allow_dec=False, accept=corner_free)


def min_monotone_gridding(p: Sequence[int], dim_cap: int) -> tuple[GridMatrix, Gridding] | None:
    """A 0/+-1 matrix of least t+u that grids p."""
    if not p:
        raise GridError("need a nonempty permutation")
    return _min_gridding(p, dim_cap, allow_dec=True, accept=lambda m: True)


# -- rectangles ----------------------------------------------------------------


@dataclass(frozen=True)
class Rectangle:
    """Closed axis-parallel rectangle ``[x1, x2] x [y1, y2]`` with integer corners."""

    x1: int
    x2: int
    y1: int
    y2: int

    def __post_init__(self):
        if self.x1 > self.x2 or self.y1 > self.y2:
            raise GridError(f"degenerate rectangle {self}")

    @classmethod
    def hull(cls, points: Iterable[tuple[int, int]]) -> "Rectangle":
        pts = list(points)
        if not pts:
            raise GridError("hull of no points")
        xs = [x for x, _ in pts]
        ys = [y for _, y in pts]
        return cls(min(xs), max(xs), min(ys), max(ys))

    def contains_point(self, x: int, y: int) -> bool:
        return self.x1 <= x <= self.x2 and self.y1 <= y <= self.y2

    def x_overlaps(self, other: "Rectangle") -> bool:
        return self.x1 <= other.x2 and other.x1 <= self.x2

    def y_overlaps(self, other: "Rectangle") -> bool:
        return self.y1 <= other.y2 and other.y1 <= self.y2

    def dependent(self, other: "Rectangle") -> bool:
        return self.x_overlaps(other) or self.y_overlaps(other)

    def intersects(self, other: "Rectangle") -> bool:
        return self.x_overlaps(other) and self.y_overlaps(other)


def points_in(p: Sequence[int], r: Rectangle) -> list[tuple[int, int]]:
    return [(i, v) for i, v in enumerate(p, 1) if r.contains_point(i, v)]


def is_monotone_rectangle(p: Sequence[int], r: Rectangle) -> bool:
    values = [v for _, v in points_in(p, r)]
    return _monotone_cell(values, allow_dec=True) is not None


def monotone_cover(p: Sequence[int], g: Gridding) -> list[Rectangle]:
    """Hulls of the nonempty cells of a monotone gridding: at most t*u monotone rectangles covering p."""
    cells: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for i, v in enumerate(p, 1):
        cells.setdefault(g.cell_of(i, v), []).append((i, v))
    return [Rectangle.hull(pts) for _, pts in sorted(cells.items())]


def max_independent_rectangles(rects: Sequence[Rectangle]) -> tuple[int, tuple[int, ...]]:
    """Largest pairwise-independent subset, as (size, indices), by branch and bound."""
    if not rects:
        raise GridError("need at least one rectangle")
    m = len(rects)
    conflict = [0] * m
    for a, b in itertools.combinations(range(m), 2):
        if rects[a].dependent(rects[b]):
            conflict[a] |= 1 << b
            conflict[b] |= 1 << a
    best: list[int] = []

    def grow(chosen: list[int], cand: int) -> None:
        nonlocal best
        if len(chosen) + cand.bit_count() <= len(best):
            return
        if not cand:
            best = list(chosen)
            return
        low = cand & -cand
        v = low.bit_length() - 1
        chosen.append(v)
        grow(chosen, cand & ~conflict[v] & ~low)
        chosen.pop()
        grow(chosen, cand & ~low)

    grow([], (1 << m) - 1)
    return len(best), tuple(sorted(best))


SLICE_CAP = 12


def _pierce(intervals: list[tuple[int, int]]) -> list[int]:
    """Fewest points meeting every closed interval (greedy on right endpoints)."""
    points: list[int] = []
    for lo, hi in sorted(intervals, key=lambda iv: (iv[1], iv[0])):
        if not points or points[-1] < lo:
            points.append(hi)
    return points


def min_slicing_lines(rects: Sequence[Rectangle]) -> list[tuple[str, int]]:
    """Fewest vertical (``('x', c)``) and horizontal (``('y', c)``) lines meeting every rectangle.

    Each rectangle is met by a vertical line or by a horizontal one; for each
    split of the rectangles between the two directions the 1-D piercing
    problems are solved exactly by the greedy rule.
    """
    if len(rects) > SLICE_CAP:
        raise GridError(f"min_slicing_lines is exhaustive; capped at {SLICE_CAP} rectangles")
    m = len(rects)
    best: list[tuple[str, int]] | None = None
    for mask in range(1 << m):
        xs = _pierce([(r.x1, r.x2) for i, r in enumerate(rects) if mask >> i & 1])
        ys = _pierce([(r.y1, r.y2) for i, r in enumerate(rects) if not mask >> i & 1])
        if best is None or len(xs) + len(ys) < len(best):
            best = [("x", c) for c in xs] + [("y", c) for c in ys]
    return sorted(best or [])


def line_slices(line: tuple[str, int], r: Rectangle) -> bool:
    axis, c = line
    return r.x1 <= c <= r.x2 if axis == "x" else r.y1 <= c <= r.y2


# -- hull propagation ----------------------------------------------------------


@dataclass(frozen=True)
class Hull:
    rect: Rectangle
    orientation: str  # "inc" or "dec"


@dataclass(frozen=True)
class HullConfig:
    host: Perm
    hulls: tuple[Hull, ...]

    def points(self, h: int) -> list[tuple[int, int]]:
        return points_in(self.host, self.hulls[h].rect)

    def validate(self) -> None:
        """Check monotonicity and coverage, that no two hulls intersect, and that no hull
        is dependent both with a hull to its right and with one beneath it."""
        hs = self.hulls
        for i, h in enumerate(hs):
            if h.orientation not in ("inc", "dec"):
                raise GridError(f"hull {i}: orientation must be 'inc' or 'dec'")
            values = [v for _, v in self.points(i)]
            if not values:
                raise GridError(f"hull {i} covers no points")
            want = 1 if h.orientation == "inc" else -1
            if len(values) > 1 and _monotone_cell(values, allow_dec=True) != want:
                raise GridError(f"hull {i} is not {h.orientation}reasing")
        for i, v in enumerate(self.host, 1):
            if not any(h.rect.contains_point(i, v) for h in hs):
                raise GridError(f"point ({i}, {v}) lies in no hull")
        for a, b in itertools.combinations(range(len(hs)), 2):
            if hs[a].rect.intersects(hs[b].rect):
                raise GridError(f"hulls {a} and {b} intersect")
        for a, h in enumerate(hs):
            right = [b for b, o in enumerate(hs) if o.rect.x1 > h.rect.x2 and o.rect.y_overlaps(h.rect)]
            below = [b for b, o in enumerate(hs) if o.rect.y2 < h.rect.y1 and o.rect.x_overlaps(h.rect)]
            if right and below:
                raise GridError(
                    f"hull {a} is dependent with hull {right[0]} to its right "
                    f"and hull {below[0]} beneath it"
                )


@dataclass
class Propagation:
    matrix: GridMatrix
    gridding: Gridding
    lines: list[tuple[str, int]]
    induced: list[tuple[tuple[str, int], int, tuple[str, int]]] = field(default_factory=list)
    max_sliced: int = 0


def _sliced_by(cfg: HullConfig, line: tuple[str, int], h: int) -> bool:
    axis, c = line
    coords = [x if axis == "x" else y for x, y in cfg.points(h)]
    return min(coords) < c <= max(coords)


def _induced_line(cfg: HullConfig, line: tuple[str, int], h: int) -> tuple[str, int]:
    axis, c = line
    pts = cfg.points(h)
    inc = cfg.hulls[h].orientation == "inc"
    if axis == "x":
        left = [y for x, y in pts if x < c]
        right = [y for x, y in pts if x >= c]
        return ("y", max(left if inc else right) + 1)
    lower = [x for x, y in pts if y < c]
    upper = [x for x, y in pts if y >= c]
    return ("x", max(lower if inc else upper) + 1)


def propagate_hulls(cfg: HullConfig) -> Propagation:
    """Grid the host by extending every hull side and propagating through sliced hulls.

    Lines are cuts: ``('x', c)`` separates positions ``< c`` from ``>= c`` and
    ``('y', r)`` does the same for values.  A line that splits the points of a
    hull induces the perpendicular line placing the two parts in opposite
    quadrants; induced lines propagate until nothing new appears.
    """
    cfg.validate()
    n = len(cfg.host)
    queue: deque[tuple[str, int]] = deque()
    seen: set[tuple[str, int]] = set()

    def push(line: tuple[str, int]) -> None:
        if 1 < line[1] <= n and line not in seen:
            seen.add(line)
            queue.append(line)

    for h in cfg.hulls:
        r = h.rect
        for line in (("x", r.x1), ("x", r.x2 + 1), ("y", r.y1), ("y", r.y2 + 1)):
            push(line)
    induced = []
    max_sliced = 0
    while queue:
        line = queue.popleft()
        hit = [h for h in range(len(cfg.hulls)) if _sliced_by(cfg, line, h)]
        max_sliced = max(max_sliced, len(hit))
        for h in hit:
            new = _induced_line(cfg, line, h)
            induced.append((line, h, new))
            push(new)
    cols = (1, *sorted(c for a, c in seen if a == "x"), n + 1)
    rows = (1, *sorted(c for a, c in seen if a == "y"), n + 1)
    g = Gridding(cols, rows)
    owner = {}
    for idx in range(len(cfg.hulls)):
        for pt in cfg.points(idx):
            owner[pt] = idx
    cells: dict[tuple[int, int], Cell] = {}
    for k in range(1, g.width + 1):
        for l in range(1, g.height + 1):
            values = g.cell_values(cfg.host, k, l)
            if not values:
                continue
            if len(values) == 1:
                i = cfg.host.index(values[0]) + 1
                cells[k, l] = 1 if cfg.hulls[owner[i, values[0]]].orientation == "inc" else -1
            else:
                c = _monotone_cell(values, allow_dec=True)
                if c is None:
                    raise GridError(f"cell ({k}, {l}) is not monotone after propagation")
                cells[k, l] = c
    mat = GridMatrix.from_cells(g.width, g.height, cells)
    return Propagation(mat, g, sorted(seen), induced, max_sliced)


def hull_cells(cfg: HullConfig, g: Gridding) -> list[list[tuple[int, int]]]:
    """For each hull, the distinct gridding cells its points fall in."""
    return [sorted({g.cell_of(i, v) for i, v in cfg.points(h)}) for h in range(len(cfg.hulls))]
