"""Acceptance suite: one test per criterion, each with its own time limit.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary ends with one
PASS/FAIL line per criterion.
"""
import itertools
import time
from contextlib import contextmanager

import pytest

from oracles import naive_count
from permwqo.antichain import (
    FAMILY_FORBIDDEN,
    anchor_intervals_ok,
    ding_graph,
    family_matrix,
    family_prefix,
    split_graph,
    verify_graph_antichain,
)
from permwqo.enumeration import avoiders, count_avoiders, guess_recurrence, predict
from permwqo.graphs import (
    ForbiddenPair,
    build_named,
    disjoint_union,
    graph_of,
    induced_contains,
    omits,
    perms_of_graph,
)
from permwqo.grid import (
    GridMatrix,
    Hull,
    HullConfig,
    Rectangle,
    cell_graph,
    check_gridding,
    corner_free,
    grid_membership,
    hull_cells,
    parse_matrix,
    propagate_hulls,
)
from permwqo.perm import (
    Basis,
    Perm,
    contains,
    extremal_entry_property,
    is_simple,
    longest_monotone,
    permutations,
)
from permwqo.substitution import decompose, reconstruct, substitution_depth

P = Perm.parse


@contextmanager
def time_limit(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, limit {seconds}s"


def up_to(n):
    return [q for m in range(1, n + 1) for q in permutations(m)]


@pytest.mark.criterion(1)
def test_perms_of_paths():
    with time_limit(10):
        assert perms_of_graph(build_named("path", 5)) == {P("24153"), P("31524")}
        assert perms_of_graph(build_named("path", 7)) == {P("3152746"), P("2416375")}


@pytest.mark.criterion(2)
def test_simple_avoiders_have_the_extremal_entry_property():
    with time_limit(300):
        simple = [p for p in avoiders([P("24153"), P("31524")], 9) if len(p) >= 4 and is_simple(p)]
        violations = [p for p in simple if not extremal_entry_property(p)]
        assert len({len(p) for p in simple}) == 6
        assert violations == []


@pytest.mark.criterion(3)
@pytest.mark.parametrize("ell", [3, 4])
def test_substitution_depth_bound(ell):
    with time_limit(300):
        worst = max(substitution_depth(p) for p in avoiders([Perm.decreasing(ell)], 9))
        assert worst <= 2 * ell - 3


@pytest.mark.criterion(4)
def test_ding_construction():
    """Stated as an equivalence with plain containment.  B_p and B_(p inverse) are
    isomorphic, so pairs such as (231, 312) break it; see the ledger."""
    with time_limit(300):
        universe = up_to(4)
        graphs = {q: ding_graph(q) for q in universe}
        two_k2 = disjoint_union(build_named("clique", 2), build_named("clique", 2))
        k4 = build_named("clique", 4)
        for g in graphs.values():
            assert induced_contains(g, two_k2) is None
            assert induced_contains(g, k4) is None
        mismatches = [
            (s.pretty(), p.pretty())
            for s, p in itertools.product(universe, repeat=2)
            if len(s) <= len(p)
            and (contains(s, p) is not None) != (induced_contains(graphs[p], graphs[s]) is not None)
        ]
        assert mismatches == [], f"{len(mismatches)} pairs disagree, first {mismatches[:3]}"


@pytest.mark.criterion(5)
def test_split_construction():
    two_p3 = disjoint_union(build_named("path", 3), build_named("path", 3))
    for p in up_to(4):
        assert split_graph(p).is_bipartite()
    for p in up_to(3):
        assert induced_contains(split_graph(p), two_p3) is None


@pytest.mark.criterion(6)
def test_parallel_antichain():
    with time_limit(300):
        elems = family_prefix("parallel", 3)
        assert [len(p) for p in elems] == [12, 16, 20]
        matrix = family_matrix("parallel")
        for p in elems:
            g = grid_membership(p, matrix)
            assert g is not None and check_gridding(p, matrix, g)
            assert p.reverse_complement() == p
            assert contains(P("24531"), p) is not None
            assert anchor_intervals_ok(p)
            assert contains(P("51423"), p) is None and contains(P("34251"), p) is None
            assert omits(graph_of(p), FAMILY_FORBIDDEN["parallel"])
        assert FAMILY_FORBIDDEN["parallel"] == ForbiddenPair(7, 5)
        assert verify_graph_antichain(elems, "symmetry").is_antichain


@pytest.mark.criterion(7)
def test_hook_antichain():
    with time_limit(600):
        elems = family_prefix("hook", 3)
        assert [len(p) for p in elems] == [11, 17, 23]
        matrix = parse_matrix("oplus21 av21 / 0 oplus21")
        for p in elems:
            assert grid_membership(p, matrix) is not None
            assert omits(graph_of(p), FAMILY_FORBIDDEN["hook"])
        assert FAMILY_FORBIDDEN["hook"] == ForbiddenPair(6, 6)
        assert verify_graph_antichain(elems[:2], "direct").is_antichain
        assert verify_graph_antichain(elems, "symmetry").is_antichain


@pytest.mark.criterion(8)
def test_monotone_grid_antichain():
    with time_limit(600):
        elems = family_prefix("monotone_grid", 3)
        matrix = parse_matrix("1 1 / 1 1")
        for p in elems:
            assert grid_membership(p, matrix) is not None
            assert omits(graph_of(p), FAMILY_FORBIDDEN["monotone_grid"])
        assert FAMILY_FORBIDDEN["monotone_grid"] == ForbiddenPair(8, 4)
        assert verify_graph_antichain(elems, "direct").is_antichain


@pytest.mark.criterion(9)
def test_enumeration():
    with time_limit(120):
        assert count_avoiders(Basis.parse("21"), 10).counts == (1,) * 10
        naive = [naive_count([(3, 2, 1)], n) for n in range(1, 8)]
        assert list(count_avoiders(Basis.parse("321"), 7).counts) == naive
        assert count_avoiders(Basis.parse("24153, 31524, 321"), 5).at(5) == 40
        assert naive_count([(2, 4, 1, 5, 3), (3, 1, 5, 2, 4), (3, 2, 1)], 5) == 40


@pytest.mark.criterion(10)
def test_recurrence_guesser():
    constant = guess_recurrence([1] * 8)
    assert constant.order == 1 and constant.coefficients == (1,)
    doubling = guess_recurrence([2 ** i for i in range(8)])
    assert doubling.order == 1 and doubling.coefficients == (2,)
    assert predict(doubling, 8) == 128
    catalan = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786]
    assert guess_recurrence(catalan, max_order=4) is None


@pytest.mark.criterion(11)
def test_property_suites():
    # corner-free matrices have forest cell graphs
    for t, u in itertools.product(range(1, 4), repeat=2):
        for bits in itertools.product((0, 1), repeat=t * u):
            m = GridMatrix(tuple(tuple(bits[k * u : (k + 1) * u]) for k in range(t)))
            if corner_free(m):
                assert cell_graph(m).is_forest()
    # Erdos-Szekeres
    for a, b in itertools.product(range(1, 5), repeat=2):
        for q in permutations((a - 1) * (b - 1) + 1):
            inc, dec = longest_monotone(q)
            assert inc >= a or dec >= b
    # decomposition round trip
    for q in up_to(8):
        assert reconstruct(decompose(q)) == q
    # every returned gridding replays cell by cell
    matrices = [parse_matrix(t) for t in ("1 1", "1 -1 / -1 1", "oplus21 oplus21", "0 1 / 1 -1")]
    for q in up_to(6):
        for m in matrices:
            g = grid_membership(q, m)
            if g is not None:
                assert check_gridding(q, m, g)
    # hull propagation on a chained instance
    hulls = [(1, 2, 1, 2, "dec"), (3, 5, 5, 8, "inc"), (6, 6, 3, 3, "dec"), (7, 8, 4, 7, "dec")]
    cfg = HullConfig(P("21568374"), tuple(Hull(Rectangle(*r), o) for *r, o in hulls))
    prop = propagate_hulls(cfg)
    assert corner_free(prop.matrix) and check_gridding(cfg.host, prop.matrix, prop.gridding)
    assert any(h == 1 for _, h, _ in prop.induced) and any(h == 3 for _, h, _ in prop.induced)
    for cells in hull_cells(cfg, prop.gridding):
        assert len({k for k, _ in cells}) == len({l for _, l in cells}) == len(cells)
