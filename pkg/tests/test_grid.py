import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bf_grid_member, bf_max_independent, bf_min_slicing, perms
from permwqo.antichain import parallel_element
from permwqo.grid import (
    OPLUS21,
    SLICE_CAP,
    GridError,
    GridMatrix,
    Gridding,
    Hull,
    HullConfig,
    Rectangle,
    cell_graph,
    check_gridding,
    corner_free,
    grid_membership,
    hull_cells,
    is_monotone_rectangle,
    line_slices,
    max_independent_rectangles,
    min_corner_free_gridding,
    min_monotone_gridding,
    min_slicing_lines,
    monotone_cover,
    parse_matrix,
    propagate_hulls,
)
from permwqo.perm import Basis, Perm, monotone_chain_diagnostic, permutations

P = Perm.parse
STAIRCASE = "0 1 1 / 1 1 0"


# -- matrices and cell graphs --------------------------------------------------


def test_cartesian_indexing():
    m = parse_matrix("1 0\n-1 oplus21")
    assert m.width == 2 and m.height == 2
    assert m[1, 2] == 1 and m[1, 1] == -1 and m[2, 1] == OPLUS21 and m[2, 2] == 0
    assert parse_matrix(m.to_text()) == m


def test_cell_tokens():
    assert parse_matrix("av21 av12") == parse_matrix("1 -1")
    m = parse_matrix("av(231;312)")
    assert m[1, 1] == Basis.parse("231, 312")
    with pytest.raises(GridError):
        parse_matrix("2")
    with pytest.raises(GridError):
        parse_matrix("1 1 / 1")
    with pytest.raises(GridError):
        parse_matrix("  ")


def test_cell_graph_examples():
    stair = cell_graph(parse_matrix(STAIRCASE))
    assert len(stair.vertices) == 4 and len(stair.edges) == 3
    assert stair.is_forest()
    square = cell_graph(parse_matrix("1 1 / 1 1"))
    assert len(square.edges) == 4 and not square.is_forest()
    assert cell_graph(parse_matrix("1")).is_forest()


def test_cell_graph_skips_blocked_pairs():
    g = cell_graph(parse_matrix("1 1 1"))
    assert len(g.edges) == 2 and g.is_forest()


# -- corner-free matrices ------------------------------------------------------


def test_corner_free_examples():
    assert not corner_free(GridMatrix.from_cells(2, 2, {(1, 2): 1, (2, 2): 1, (1, 1): 1}))
    for n in range(1, 6):
        for q in permutations(n):
            assert corner_free(GridMatrix.from_cells(n, n, {(i, v): 1 for i, v in q.plot()}))


def test_staircase_has_a_non_adjacent_corner():
    # cell (2, 2) has (2, 1) beneath it and (3, 2) to its right
    assert not corner_free(parse_matrix(STAIRCASE))


def test_corner_needs_no_adjacency():
    m = GridMatrix.from_cells(3, 3, {(1, 3): 1, (3, 3): 1, (1, 1): -1})
    assert not corner_free(m)


def test_corner_free_rejects_class_cells():
    with pytest.raises(GridError):
        corner_free(parse_matrix("oplus21"))


@pytest.mark.parametrize("t,u", [(t, u) for t in range(1, 4) for u in range(1, 4)])
def test_corner_free_implies_forest(t, u):
    for bits in itertools.product((0, 1), repeat=t * u):
        m = GridMatrix(tuple(tuple(bits[k * u : (k + 1) * u]) for k in range(t)))
        if corner_free(m):
            assert cell_graph(m).is_forest()


# -- gridding search -----------------------------------------------------------


def test_membership_examples():
    row = parse_matrix("oplus21 oplus21")
    assert grid_membership(P("51423"), row) is None
    assert grid_membership(P("34251"), row) is None
    elem = parallel_element(1)
    g = grid_membership(elem, row)
    assert g is not None and check_gridding(elem, row, g)
    assert len(g.col_cuts) == 3 and 1 < g.col_cuts[1] <= len(elem)
    for n in range(1, 8):
        assert grid_membership(Perm.identity(n), parse_matrix("1")) == Gridding((1, n + 1), (1, n + 1))


MONOTONE_MATRICES = ["1 1", "-1 1", "1 / -1", "1 0 / 0 1", "1 -1 / -1 1", "0 1 / 1 -1", "-1 0 1"]


@settings(max_examples=120)
@given(perms(1, 7), st.sampled_from(MONOTONE_MATRICES))
def test_membership_matches_brute_force(p, text):
    m = parse_matrix(text)
    g = grid_membership(p, m)
    assert (g is not None) == bf_grid_member(p, m.rows_top_down())
    if g is not None:
        assert check_gridding(p, m, g)


@settings(max_examples=80)
@given(perms(1, 8), st.sampled_from(["oplus21 oplus21", "oplus21 1 / 0 oplus21", "av(231) -1"]))
def test_membership_soundness_on_class_cells(p, text):
    m = parse_matrix(text)
    g = grid_membership(p, m)
    if g is not None:
        assert check_gridding(p, m, g)


def test_check_gridding_rejects_bad_cuts():
    m = parse_matrix("1")
    assert not check_gridding(P("21"), m, Gridding((1, 3), (1, 3)))
    assert not check_gridding(P("12"), m, Gridding((1, 2), (1, 3)))
    assert not check_gridding(P("12"), parse_matrix("1 1"), Gridding((1, 3), (1, 3)))


def test_min_corner_free_examples():
    m, g = min_corner_free_gridding(Perm.identity(5), 4)
    assert m == parse_matrix("1") and g == Gridding((1, 6), (1, 6))
    m, g = min_corner_free_gridding(P("2413"), 8)
    assert m == parse_matrix("1 1") and g == Gridding((1, 3, 5), (1, 5))
    assert min_corner_free_gridding(P("2413"), 2) is None


@settings(max_examples=40, deadline=None)
@given(perms(1, 6))
def test_min_corner_free_is_valid_and_within_permutation_matrix(p):
    n = len(p)
    m, g = min_corner_free_gridding(p, 2 * n)
    assert corner_free(m) and check_gridding(p, m, g)
    assert m.width + m.height <= 2 * n
    assert all(c in (0, 1) for _, c in m.cells())


def test_min_monotone_gridding_examples():
    m, _ = min_monotone_gridding(P("4321"), 4)
    assert m == parse_matrix("-1")
    m, g = min_monotone_gridding(P("2413"), 4)
    assert m.width + m.height == 3 and check_gridding(P("2413"), m, g)


@settings(max_examples=60)
@given(perms(1, 8))
def test_gridding_gives_a_monotone_cover(p):
    m, g = min_monotone_gridding(p, 2 * len(p))
    cover = monotone_cover(p, g)
    assert len(cover) <= m.width * m.height
    assert all(is_monotone_rectangle(p, r) for r in cover)
    assert all(any(r.contains_point(i, v) for r in cover) for i, v in p.plot())


@pytest.mark.parametrize("n", range(1, 9))
def test_bounded_chains_give_small_monotone_griddings(n):
    for p in permutations(n):
        a, b = monotone_chain_diagnostic(p)
        if a <= 1 and b <= 1:
            found = min_monotone_gridding(p, 6)
            assert found is not None and check_gridding(p, *found)


# -- rectangles ----------------------------------------------------------------


def test_rectangle_examples():
    a, b = Rectangle(1, 2, 1, 2), Rectangle(3, 4, 3, 4)
    assert max_independent_rectangles([a, b]) == (2, (0, 1))
    assert len(min_slicing_lines([a, b])) == 2
    c = Rectangle(2, 5, 7, 9)
    assert a.dependent(c) and not a.intersects(c)
    assert max_independent_rectangles([a, c]) == (1, (0,))
    assert min_slicing_lines([a, c]) == [("x", 2)]
    with pytest.raises(GridError):
        Rectangle(2, 1, 1, 1)
    with pytest.raises(GridError):
        max_independent_rectangles([])


def test_closed_intervals_touching_at_a_corner_are_dependent():
    assert Rectangle(1, 2, 1, 2).dependent(Rectangle(2, 3, 5, 6))


@st.composite
def rectangles(draw, max_count=SLICE_CAP):
    out = []
    for _ in range(draw(st.integers(1, max_count))):
        x1, x2 = sorted(draw(st.tuples(st.integers(1, 12), st.integers(1, 12))))
        y1, y2 = sorted(draw(st.tuples(st.integers(1, 12), st.integers(1, 12))))
        out.append(Rectangle(x1, x2, y1, y2))
    return out


@settings(max_examples=100)
@given(rectangles())
def test_max_independent_matches_brute_force(rects):
    size, idx = max_independent_rectangles(rects)
    assert size == bf_max_independent(rects) == len(idx)
    assert all(not rects[a].dependent(rects[b]) for a, b in itertools.combinations(idx, 2))


@settings(max_examples=60, deadline=None)
@given(rectangles(6))
def test_min_slicing_matches_brute_force(rects):
    lines = min_slicing_lines(rects)
    assert all(any(line_slices(ln, r) for ln in lines) for r in rects)
    assert len(lines) == bf_min_slicing(rects)
    assert len(lines) >= max_independent_rectangles(rects)[0]


def test_slicing_cap():
    with pytest.raises(GridError):
        min_slicing_lines([Rectangle(i, i, i, i) for i in range(1, SLICE_CAP + 2)])


# -- hull propagation ----------------------------------------------------------


def _config(p, hulls):
    return HullConfig(P(p), tuple(Hull(Rectangle(*r), o) for *r, o in hulls))


def _check_propagation(cfg):
    prop = propagate_hulls(cfg)
    assert corner_free(prop.matrix)
    assert check_gridding(cfg.host, prop.matrix, prop.gridding)
    for cells in hull_cells(cfg, prop.gridding):
        assert len({k for k, _ in cells}) == len(cells)
        assert len({l for _, l in cells}) == len(cells)
    return prop


def test_single_hull():
    prop = _check_propagation(_config("12345", [(1, 5, 1, 5, "inc")]))
    assert prop.matrix == parse_matrix("1")


def test_two_independent_hulls():
    prop = _check_propagation(_config("12543", [(1, 2, 1, 2, "inc"), (3, 5, 3, 5, "dec")]))
    assert prop.matrix == parse_matrix("0 -1 / 1 0")
    assert prop.induced == [] and prop.max_sliced == 0


CHAINED_HULLS = [
    (1, 2, 1, 2, "dec"),
    (3, 5, 5, 8, "inc"),
    (6, 6, 3, 3, "dec"),
    (7, 8, 4, 7, "dec"),
]


def test_chained_propagation():
    """A side of one hull slices a second, whose induced line slices a third, and so on."""
    cfg = _config("21568374", CHAINED_HULLS)
    prop = _check_propagation(cfg)
    assert (("y", 8), 1, ("x", 5)) in prop.induced
    assert (("y", 7), 3, ("x", 8)) in prop.induced
    assert prop.gridding == Gridding((1, 3, 5, 6, 7, 8, 9), (1, 3, 4, 5, 7, 8, 9))
    assert prop.matrix.width == prop.matrix.height == 6
    assert len(prop.matrix.nonzero()) == 6


def test_hull_errors_name_the_pair():
    with pytest.raises(GridError, match="hulls 0 and 1 intersect"):
        propagate_hulls(_config("1234", [(1, 3, 1, 3, "inc"), (3, 4, 3, 4, "inc")]))
    # hull 0 sits left of hull 1 in the same rows and above hull 2 in the same columns
    with pytest.raises(GridError, match="hull 0 is dependent with hull 1 to its right and hull 2 beneath it"):
        propagate_hulls(_config("561234", [(1, 2, 5, 6, "inc"), (4, 6, 2, 5, "inc"), (2, 3, 1, 1, "dec")]))


def test_hull_validation():
    with pytest.raises(GridError, match="not increasing"):
        propagate_hulls(_config("21", [(1, 2, 1, 2, "inc")]))
    with pytest.raises(GridError, match="lies in no hull"):
        propagate_hulls(_config("12", [(1, 1, 1, 1, "inc")]))
    with pytest.raises(GridError, match="orientation"):
        propagate_hulls(_config("1", [(1, 1, 1, 1, "up")]))
