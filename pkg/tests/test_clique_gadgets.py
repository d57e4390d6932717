import itertools

import networkx as nx
import pytest

from empirecol.core import reduce
from empirecol.gadgets import (
    build_B,
    build_B_minus,
    build_B_plus,
    clique_paths,
    minus_pairs,
    walecki,
)
from empirecol.solvers import Status, enumerate_colourings, exact_empire_colour
from support import brute_colourings, to_nx


def complete(n: int) -> set[tuple[int, int]]:
    return set(itertools.combinations(range(n), 2))


@pytest.mark.parametrize("r", range(1, 51))
def test_walecki_decomposes_odd_clique(r):
    d = walecki(r)
    assert len(d.cycles) == r
    union: set = set()
    for i, cyc in enumerate(d.cycles):
        assert sorted(cyc) == list(range(2 * r + 1))
        edges = d.cycle_edges(i)
        assert len(edges) == 2 * r + 1 if r > 1 else len(edges) == 3
        assert not union & edges
        union |= edges
    assert union == complete(2 * r + 1)


def test_walecki_small_cases():
    assert walecki(1).cycles == ((0, 1, 2),)
    assert walecki(2).cycles == ((0, 1, 3, 2, 4), (1, 2, 0, 3, 4))
    with pytest.raises(ValueError):
        walecki(0)


def same_path(a, b) -> bool:
    return list(a) == list(b) or list(a) == list(reversed(b))


def test_b35_rows_match_reference_rows():
    rows = clique_paths(3, 5)
    reference = [[1, 5, 2, 4, 3, 6], [2, 1, 6, 4, 5, 3], [4, 1, 3, 2, 6, 5]]
    assert all(same_path(a, b) for a, b in zip(rows, reference))


def test_b22_from_removal_rule():
    # B_{2,3} rows from Walecki(2) with 0 dropped: [1,3,2,4] and [2,4,1,3]... relabelled 1-based,
    # then label 4 removed with its neighbours rejoined
    assert clique_paths(2, 2) == [[1, 3, 2], [3, 1, 2]]
    b = build_B(2, 2).graph
    assert b.num_vertices == 6 and b.num_empires == 3
    assert reduce(b).adjacency == complete(3)


def test_b47_shape():
    a = build_B(4, 7)
    g = to_nx(a.graph)
    comps = list(nx.connected_components(g))
    assert len(comps) == 4 and all(len(c) == 8 for c in comps)
    assert reduce(a.graph).adjacency == complete(8)


@pytest.mark.parametrize("r, s", [(r, s) for r in range(2, 9) for s in range(1, 2 * r)])
def test_b_structure(r, s):
    a = build_B(r, s)
    g = a.graph
    # B0
    assert g.num_vertices == r * (s + 1) and g.num_empires == s + 1
    assert all(len(m) == r for m in g.members)
    # B1: a forest of exactly r paths
    h = to_nx(g)
    comps = [h.subgraph(c) for c in nx.connected_components(h)]
    assert nx.is_forest(h) and len(comps) == r
    assert all(max((d for _, d in c.degree()), default=0) <= 2 for c in comps)
    # B2: no path repeats an empire
    for c in comps:
        emp = [g.empire_of[x] for x in c]
        assert len(emp) == len(set(emp))
    # B3
    assert reduce(g).adjacency == complete(s + 1)
    # roles list each path in order
    for i in range(r):
        path = a.role(f"path{i}")
        assert all(h.has_edge(x, y) for x, y in zip(path, path[1:]))


@pytest.mark.parametrize("r, s", [(r, s) for r in range(2, 5) for s in range(2, 2 * r)])
def test_b_chromatic_requirement(r, s):
    g = build_B(r, s).graph
    assert exact_empire_colour(g, s + 1).status is Status.COLOURABLE
    assert exact_empire_colour(g, s).status is Status.NOT_COLOURABLE


def test_b_rejects_out_of_range():
    for r, s in [(3, 6), (2, 0), (1, 2)]:
        with pytest.raises(ValueError):
            build_B(r, s)


@pytest.mark.parametrize("r, s", [(r, s) for r in range(2, 7) for s in range(1, 2 * r)])
def test_b_plus_is_tree_with_clique(r, s):
    a = build_B_plus(r, s, root_empire=s % (s + 1))
    h = to_nx(a.graph)
    assert nx.is_tree(h)
    assert a.graph.num_vertices == r * (s + 1)
    assert reduce(a.graph).adjacency == complete(s + 1)


def test_b_plus_35_root_one():
    a = build_B_plus(3, 5, 0)
    h = to_nx(a.graph)
    assert nx.is_tree(h) and h.number_of_nodes() == 18
    root = a.graph.members[a.empire("root")]
    assert all(h.has_edge(x, y) for x, y in zip(root, root[1:]))
    with pytest.raises(ValueError):
        build_B_plus(1, 1)


def test_b_minus_35_reference_pair():
    a = build_B_minus(3, 5, 0, 4)
    (iso,) = a.role("isolated")
    assert a.graph.empire_of[iso] == 0 and a.graph.degree(iso) == 0
    assert a.empire("u") == 0 and a.empire("v") == 4
    assert minus_pairs(3, 5)[0] == (0, 0, 4)


@pytest.mark.parametrize("r, s", [(r, s) for r in range(2, 5) for s in range(2, 2 * r) if s + 1 <= 8 and minus_pairs(r, s)])
def test_b_minus_forces_equal_colours(r, s):
    a = build_B_minus(r, s)
    rg = reduce(a.graph)
    u, v = a.empire("u"), a.empire("v")
    assert not rg.has_edge(u, v)
    others = [e for e in range(s + 1) if e not in (u, v)]
    assert all(rg.has_edge(x, y) for x, y in itertools.combinations(others, 2))
    assert all(rg.has_edge(x, w) for x in others for w in (u, v))
    cols = enumerate_colourings(rg, s)
    assert cols and all(c[u] == c[v] for c in cols)


def test_b_minus_35_brute_force():
    a = build_B_minus(3, 5)
    rg = reduce(a.graph)
    sols = brute_colourings(6, rg.adjacency, 5)
    assert sols and all(c[0] == c[4] for c in sols)


def test_b_minus_exists_wherever_tree_reduction_needs_it():
    for r in range(3, 9):
        for s in range(4, 2 * r):
            assert minus_pairs(r, s)
    with pytest.raises(ValueError):
        build_B_minus(4, 3)


def test_b_minus_rejects_non_adjacent_pair():
    with pytest.raises(ValueError):
        build_B_minus(3, 5, 0, 1)
