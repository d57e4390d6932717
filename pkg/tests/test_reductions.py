import random

import networkx as nx
import pytest

from empirecol.cnf import CnfFormula
from empirecol.core import EmpireGraph, reduce
from empirecol.reductions import (
    FormulaGraph,
    fg_to_lforest,
    fg_to_planar,
    fg_to_tree,
    ksat_to_formula_graph,
    pad_empires,
    sat3_to_lforest,
    sat3_to_tree,
)
from empirecol.solvers import Status, exact_empire_colour
from support import all_clauses, brute_sat, cnf_corpus, random_cnf, to_nx

SAMPLE_FORMULA = CnfFormula.of(3, [[1, 2, -3]])
CORPUS = cnf_corpus(seed=99, size=30)


def colourable(g: EmpireGraph, s: int) -> bool:
    res = exact_empire_colour(g, s)
    assert res.status is not Status.TIMEOUT
    return res.status is Status.COLOURABLE


def is_linear_forest(g: EmpireGraph) -> bool:
    h = to_nx(g)
    return nx.is_forest(h) and max((d for _, d in h.degree()), default=0) <= 2


# formula graphs


def test_sample_formula_graph():
    fg = ksat_to_formula_graph(SAMPLE_FORMULA, 5, k=3)
    assert fg.graph.num_vertices == 15 and fg.k == 3
    assert fg.check() == []
    # the fourth clause vertex is tied to F
    assert fg.F in fg.graph.neighbours[fg.clause(0)[3]]
    outs = sorted(fg.outside(c, 0) for c in fg.clause(0)[:3])
    assert outs == sorted([fg.literal(1), fg.literal(2), fg.literal(-3)])


def test_formula_graph_errors():
    with pytest.raises(ValueError):
        ksat_to_formula_graph(SAMPLE_FORMULA, 3)
    with pytest.raises(ValueError):
        ksat_to_formula_graph(SAMPLE_FORMULA, 5, k=2)
    with pytest.raises(ValueError):
        ksat_to_formula_graph(SAMPLE_FORMULA, 2, k=1)


@pytest.mark.parametrize("phi", CORPUS)
def test_formula_graph_size_and_colourability(phi):
    for s in (4, 5):
        fg = ksat_to_formula_graph(phi, s)
        assert fg.graph.num_vertices == s + 2 * phi.num_vars + phi.num_clauses * (s - 1)
        assert fg.check() == []
        assert colourable(fg.graph, s) == brute_sat(phi)


def test_all_clauses_formula_graph_not_colourable():
    fg = ksat_to_formula_graph(all_clauses(3), 4)
    assert not colourable(fg.graph, 4)


def test_formula_graph_artifact_round_trip():
    fg = ksat_to_formula_graph(CnfFormula.of(3, [[1, -2], [3, 2, 1]]), 5, k=3)
    back = FormulaGraph.from_artifact(fg.to_artifact())
    assert back == fg


# linear forests


def test_sat3_to_lforest_examples():
    sat = CnfFormula.of(4, [[1, 2, 4]])
    a = sat3_to_lforest(sat, 2)
    assert is_linear_forest(a.graph) and colourable(a.graph, 3)
    unsat = CnfFormula.of(1, [[1], [-1]])
    b = sat3_to_lforest(unsat, 2)
    assert is_linear_forest(b.graph) and not colourable(b.graph, 3)


def test_sat3_to_lforest_errors():
    with pytest.raises(ValueError):
        sat3_to_lforest(CnfFormula.of(4, [[1, 2, 3, 4]]), 2)
    with pytest.raises(ValueError):
        sat3_to_lforest(SAMPLE_FORMULA, 1)


@pytest.mark.parametrize("phi", CORPUS[:12])
@pytest.mark.parametrize("r", [2, 3])
def test_sat3_to_lforest_round_trip(phi, r):
    a = sat3_to_lforest(phi, r)
    assert is_linear_forest(a.graph)
    assert all(len(m) == r for m in a.graph.members)
    assert colourable(a.graph, 3) == brute_sat(phi)


def copies_of(fg: FormulaGraph, a) -> list[int]:
    """Map each output empire to the formula-graph vertex whose connector it belongs to."""
    names = ["T", "F"] + [f"X{j}" for j in range(1, fg.s - 1)]
    for v in range(1, fg.num_vars + 1):
        names += [f"a{v}", f"na{v}"]
    for i in range(1, fg.num_clauses + 1):
        names += [f"c{i}_{j}" for j in range(1, fg.s)]
    starts = [a.empire(n) for n in names]
    assert starts == sorted(starts) and starts[0] == 0
    owner = []
    for x, start in enumerate(starts):
        end = starts[x + 1] if x + 1 < len(starts) else a.graph.num_empires
        owner += [x] * (end - start)
    return owner


@pytest.mark.parametrize("phi", CORPUS[:10])
def test_fg_to_lforest_shrinks_back_to_formula_graph(phi):
    fg = ksat_to_formula_graph(phi, 4)
    a = fg_to_lforest(fg, 7)
    g = a.graph
    assert is_linear_forest(g)
    owner = copies_of(fg, a)
    between = [(owner[g.empire_of[u]], owner[g.empire_of[v]]) for u, v in g.edges]
    between = [tuple(sorted(p)) for p in between if p[0] != p[1]]
    assert sorted(between) == sorted(fg.graph.edges)
    assert colourable(g, 4) == brute_sat(phi)


def test_fg_to_lforest_errors():
    fg = ksat_to_formula_graph(SAMPLE_FORMULA, 4)
    with pytest.raises(ValueError):
        fg_to_lforest(fg, 2)
    with pytest.raises(ValueError):
        fg_to_lforest(ksat_to_formula_graph(SAMPLE_FORMULA, 5), 3)
    fg_to_lforest(fg, 3)


# trees


@pytest.mark.parametrize("phi", CORPUS[:12])
def test_sat3_to_tree_round_trip(phi):
    a = sat3_to_tree(phi)
    h = to_nx(a.graph)
    assert nx.is_tree(h) and a.graph.r == 2
    assert colourable(a.graph, 3) == brute_sat(phi)
    padded = pad_empires(a, 2, 3)
    assert nx.is_tree(to_nx(padded.graph))
    assert colourable(padded.graph, 3) == brute_sat(phi)


def test_pad_empires_examples():
    path = EmpireGraph.build(4, [(0, 1), (1, 2), (2, 3)], [0, 0, 1, 1], 2, strict_size=True)
    out = pad_empires(path, 2, 3)
    assert out.num_vertices == 6 and out.r == 3
    assert {(0, 4), (2, 5)} <= out.edges and out.empire_of[4:] == (0, 1)
    with pytest.raises(ValueError):
        pad_empires(path, 2, 2)
    with pytest.raises(ValueError):
        pad_empires(path, 3, 4)


@pytest.mark.parametrize("seed", range(25))
def test_pad_empires_preserves_colourability_on_random_trees(seed):
    rng = random.Random(seed)
    k = rng.randint(2, 6)
    n = 2 * k
    tree = nx.random_labeled_tree(n, seed=seed) if hasattr(nx, "random_labeled_tree") else nx.random_tree(n, seed=seed)
    empire_of = [v // 2 for v in range(n)]
    rng.shuffle(empire_of)
    g = EmpireGraph.build(n, tree.edges, empire_of, 2, strict_size=True)
    out = pad_empires(g, 2, 4)
    assert nx.is_tree(to_nx(out)) and out.num_vertices == n + 2 * k
    for s in (2, 3):
        assert colourable(g, s) == colourable(out, s)


def test_fg_to_tree_examples():
    one = ksat_to_formula_graph(CnfFormula.of(2, [[1, -2]]), 4)
    a = fg_to_tree(one, 3)
    assert nx.is_tree(to_nx(a.graph)) and colourable(a.graph, 4)
    for tag in ("T", "F", "X1", "X2", "a1", "na1", "W2_a1", "W1_na1", "W2_na1", "c1_1", "b1_3"):
        assert f"empire:{tag}" in a.roles
    assert "empire:W1_a1" not in a.roles
    unsat = ksat_to_formula_graph(all_clauses(3), 4)
    b = fg_to_tree(unsat, 3)
    assert nx.is_tree(to_nx(b.graph)) and not colourable(b.graph, 4)


@pytest.mark.parametrize("phi", CORPUS[:10])
def test_fg_to_tree_round_trip(phi):
    a = fg_to_tree(ksat_to_formula_graph(phi, 4), 3)
    assert nx.is_tree(to_nx(a.graph))
    assert colourable(a.graph, 4) == brute_sat(phi)


def test_fg_to_tree_larger_palette():
    phi = CnfFormula.of(3, [[1, -2, 3], [-1, 2]])
    a = fg_to_tree(ksat_to_formula_graph(phi, 5), 4)
    assert nx.is_tree(to_nx(a.graph)) and colourable(a.graph, 5)
    b = fg_to_tree(ksat_to_formula_graph(CnfFormula.of(1, [[1], [-1]]), 5), 4)
    assert not colourable(b.graph, 5)


def test_fg_to_tree_errors():
    fg = ksat_to_formula_graph(SAMPLE_FORMULA, 4)
    with pytest.raises(ValueError):
        fg_to_tree(fg, 2)
    with pytest.raises(ValueError):
        fg_to_tree(ksat_to_formula_graph(SAMPLE_FORMULA, 6), 3)
    with pytest.raises(ValueError):
        fg_to_tree(ksat_to_formula_graph(CnfFormula.of(2, [[1, -2]]), 4, k=2), 3)


def formula_edges_embed(fg: FormulaGraph, a) -> None:
    """Every formula-graph edge is a reduced edge or runs through a proxy.

    ``proxies[(near, far)]`` is the empire forced to copy ``far`` and joined to ``near``.
    """
    rg = reduce(a.graph)
    name = {fg.T: "T", fg.F: "F"}
    name.update({fg.X(j): f"X{j}" for j in range(1, fg.s - 1)})
    for v in range(1, fg.num_vars + 1):
        name[fg.literal(v)], name[fg.literal(-v)] = f"a{v}", f"na{v}"
    for i in range(fg.num_clauses):
        for j, c in enumerate(fg.clause(i), start=1):
            name[c] = f"c{i + 1}_{j}"
    emp = {x: a.empire(n) for x, n in name.items()}
    proxies = {}
    for v in range(1, fg.num_vars + 1):
        for lit, nm in ((v, f"a{v}"), (-v, f"na{v}")):
            for j in range(1, fg.s - 1):
                if f"empire:W{j}_{nm}" in a.roles:
                    proxies[(fg.literal(lit), fg.X(j))] = a.empire(f"W{j}_{nm}")
    for i in range(fg.num_clauses):
        for j, c in enumerate(fg.clause(i), start=1):
            proxies[(fg.outside(c, i), c)] = a.empire(f"b{i + 1}_{j}")
    for x, y in fg.graph.edges:
        if rg.has_edge(emp[x], emp[y]):
            continue
        p = proxies.get((x, y)) or proxies.get((y, x))
        assert p is not None, (name[x], name[y])
        near, far = (x, y) if (x, y) in proxies else (y, x)
        assert rg.has_edge(emp[near], p) and not rg.has_edge(emp[far], p)


@pytest.mark.parametrize("phi", CORPUS[:5])
def test_tree_and_planar_outputs_embed_formula_graph(phi):
    fg = ksat_to_formula_graph(phi, 4)
    formula_edges_embed(fg, fg_to_tree(fg, 3))
    formula_edges_embed(fg, fg_to_planar(fg, 2))


# planar


def test_fg_to_planar_example():
    fg = ksat_to_formula_graph(CnfFormula.of(2, [[1, 2]]), 4)
    a = fg_to_planar(fg, 2)
    h = to_nx(a.graph)
    assert all(nx.check_planarity(h.subgraph(c))[0] for c in nx.connected_components(h))
    assert colourable(a.graph, 4)


@pytest.mark.parametrize("phi", CORPUS[:10])
def test_fg_to_planar_round_trip(phi):
    a = fg_to_planar(ksat_to_formula_graph(phi, 4), 2)
    h = to_nx(a.graph)
    assert all(nx.check_planarity(h.subgraph(c))[0] for c in nx.connected_components(h))
    assert colourable(a.graph, 4) == brute_sat(phi)


def test_fg_to_planar_larger_parameters():
    phi = CnfFormula.of(3, [[1, -2, 3], [-1, 2, 3], [-3]])
    a = fg_to_planar(ksat_to_formula_graph(phi, 6), 3)
    h = to_nx(a.graph)
    assert all(nx.check_planarity(h.subgraph(c))[0] for c in nx.connected_components(h))
    assert colourable(a.graph, 6) == brute_sat(phi)


def test_fg_to_planar_errors():
    with pytest.raises(ValueError):
        fg_to_planar(ksat_to_formula_graph(SAMPLE_FORMULA, 5), 3)
    with pytest.raises(ValueError):
        fg_to_planar(ksat_to_formula_graph(SAMPLE_FORMULA, 7), 2)


def test_truth_empires_get_distinct_colours():
    phi = CnfFormula.of(3, [[1, 2, -3], [-1, 3]])
    fg = ksat_to_formula_graph(phi, 4)
    outs = [
        (sat3_to_lforest(phi, 2), 3, ["T", "F", "X"]),
        (sat3_to_tree(phi), 3, ["T", "F", "X"]),
        (fg_to_lforest(fg, 7), 4, ["T", "F", "X1", "X2"]),
        (fg_to_tree(fg, 3), 4, ["T", "F", "X1", "X2"]),
        (fg_to_planar(fg, 2), 4, ["T", "F", "X1", "X2"]),
    ]
    for a, s, tags in outs:
        for symmetry in (True, False):
            res = exact_empire_colour(a.graph, s, symmetry=symmetry)
            colours = [res.colouring[a.empire(t)] for t in tags]
            assert len(set(colours)) == len(colours)


def test_reductions_are_deterministic():
    phi = random_cnf(random.Random(4), 4, 5)
    fg = ksat_to_formula_graph(phi, 4)
    for make in (
        lambda: sat3_to_lforest(phi, 2),
        lambda: sat3_to_tree(phi),
        lambda: fg_to_lforest(fg, 7),
        lambda: fg_to_tree(fg, 3),
        lambda: fg_to_planar(fg, 2),
    ):
        assert make() == make()

