import itertools
import os

import networkx as nx
import pytest

from empirecol.core import reduce
from empirecol.gadgets import SearchTimeout, build_D, check_D, delete_empire, planar_decompose_K, thickness_lower
from empirecol.gadgets import planar as planar_mod
from empirecol.io import read_artifact, write_artifact
from empirecol.solvers import enumerate_colourings
from support import brute_colourings, to_nx


def assert_partition(n, layers):
    union: set = set()
    for layer in layers:
        assert not union & layer
        union |= layer
        assert nx.check_planarity(nx.Graph(list(layer)))[0]
    assert union == set(itertools.combinations(range(n), 2))


@pytest.mark.parametrize("n, layers", [(4, 1), (6, 2), (8, 2), (9, 3), (12, 3)])
def test_planar_decompose_k(n, layers):
    out = planar_decompose_K(n, layers)
    assert len(out) == layers
    assert_partition(n, out)


def test_planar_decompose_k4_single_layer_is_whole_clique():
    assert planar_decompose_K(4, 1) == [set(itertools.combinations(range(4), 2))]


def test_planar_decompose_rejects_below_thickness():
    with pytest.raises(ValueError):
        planar_decompose_K(5, 1)
    with pytest.raises(ValueError):
        planar_decompose_K(9, 2)


def test_thickness_values():
    assert [thickness_lower(n) for n in range(1, 17)] == [1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]


def test_planar_search_budget_surfaces_as_timeout():
    planar_mod._decompose_K.cache_clear()
    with pytest.raises(SearchTimeout):
        planar_decompose_K(11, 3, budget=5)


D_PARAMS = [(2, s) for s in range(2, 7)] + [(3, s) for s in range(2, 9)]


@pytest.mark.parametrize("r, s", D_PARAMS)
def test_d_gadget_conditions(r, s):
    a = build_D(r, s)
    assert check_D(a, r, s) == []
    g = a.graph
    assert g.num_vertices == r * (s + 1) and g.num_empires == s + 1
    u, v = a.empire("u"), a.empire("v")
    rg = reduce(g)
    expected = set(itertools.combinations(range(s + 1), 2)) - {tuple(sorted((u, v)))}
    assert rg.adjacency == expected
    h = to_nx(g)
    for comp in nx.connected_components(h):
        assert nx.check_planarity(h.subgraph(comp))[0]
        emp = [g.empire_of[x] for x in comp]
        assert len(emp) == len(set(emp))


def test_d26_shape():
    a = build_D(2, 6)
    assert a.graph.num_vertices == 14 and a.graph.num_empires == 7


def test_d25_forces_u_and_v_together():
    a = build_D(2, 5, 2, 4)
    rg = reduce(a.graph)
    sols = brute_colourings(6, rg.adjacency, 5)
    assert sols and all(c[2] == c[4] for c in sols)
    assert len(enumerate_colourings(rg, 5)) == len(sols)


def test_d_custom_roots_and_errors():
    a = build_D(3, 7, 5, 2)
    assert a.empire("u") == 5 and a.empire("v") == 2 and check_D(a, 3, 7) == []
    with pytest.raises(ValueError):
        build_D(2, 7)
    with pytest.raises(ValueError):
        build_D(2, 4, 1, 1)


@pytest.mark.parametrize("r, s", [(2, 6), (3, 8)])
def test_empire_deletion_rule_yields_smaller_gadget(r, s):
    a = build_D(r, s)
    u, v = a.empire("u"), a.empire("v")
    for e in range(s + 1):
        if e in (u, v):
            with pytest.raises(ValueError):
                delete_empire(a, e)
            continue
        assert check_D(delete_empire(a, e), r, s - 1) == []


def test_d_gadget_disk_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("EMPIRECOL_CACHE", str(tmp_path))
    planar_mod._build_D_cached.cache_clear()
    a = build_D(2, 4)
    path = tmp_path / "D_2_4_0_1.eg"
    assert path.exists()
    assert write_artifact(read_artifact(path.read_text())) == write_artifact(a)
    planar_mod._build_D_cached.cache_clear()
    assert build_D(2, 4) == a
    # a corrupted cache entry is rebuilt rather than trusted
    path.write_text(path.read_text().replace("e ", "x ", 1))
    planar_mod._build_D_cached.cache_clear()
    assert check_D(build_D(2, 4), 2, 4) == []
    planar_mod._build_D_cached.cache_clear()
    assert os.environ["EMPIRECOL_CACHE"] == str(tmp_path)
