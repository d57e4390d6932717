"""Planar layer decompositions and the planar colour-constraining gadget D_{r,s}.

Both are found by a deterministic backtracking search: edges are taken in
lexicographic order and tried against layers in index order, so the first
solution is the lexicographically least assignment.  Each layer is kept
planar by a planarity test after every insertion.
"""

from __future__ import annotations

import os
from functools import lru_cache
from pathlib import Path

import networkx as nx

from ..core import Edge, EmpireGraph, norm_edge, reduce
from .artifact import GadgetArtifact

DEFAULT_NODE_BUDGET = 2_000_000


class SearchTimeout(RuntimeError):
    """The decomposition search ran out of its node budget."""


def thickness_lower(n: int) -> int:
    """Thickness of K_n: floor((n+7)/6), except 3 for n = 9 and 10."""
    if n in (9, 10):
        return 3
    return max(1, (n + 7) // 6)


def _search(
    edges: list[Edge],
    layers: int,
    banned: dict[Edge, set[int]],
    free_from: int,
    budget: int,
) -> list[int] | None:
    """Assign each edge to a planar layer.

    Layers with index ``>= free_from`` are interchangeable, so an edge may
    open at most the first empty one of them.
    """
    graphs = [nx.Graph() for _ in range(layers)]
    assign: list[int] = []
    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        if i == len(edges):
            return True
        nodes += 1
        if nodes > budget:
            raise SearchTimeout(f"planar search exceeded {budget} nodes")
        u, v = edges[i]
        opened = False
        for k in range(layers):
            if k in banned.get(edges[i], ()):
                continue
            g = graphs[k]
            if k >= free_from and g.number_of_edges() == 0:
                if opened:
                    continue
                opened = True
            g.add_edge(u, v)
            ok, _ = nx.check_planarity(g)
            if ok:
                assign.append(k)
                if rec(i + 1):
                    return True
                assign.pop()
            g.remove_edge(u, v)
            for x in (u, v):
                if g.degree(x) == 0:
                    g.remove_node(x)
        return False

    return assign if rec(0) else None


@lru_cache(maxsize=None)
def _decompose_K(n: int, layers: int, budget: int) -> tuple[tuple[Edge, ...], ...]:
    edges = [(a, b) for a in range(n) for b in range(a + 1, n)]
    assign = _search(edges, layers, {}, 0, budget)
    if assign is None:
        raise ValueError(f"K_{n} has no decomposition into {layers} planar layers")
    return tuple(tuple(e for e, k in zip(edges, assign) if k == i) for i in range(layers))


def planar_decompose_K(n: int, layers: int, budget: int = DEFAULT_NODE_BUDGET) -> list[set[Edge]]:
    """Partition E(K_n) into ``layers`` planar edge sets (some may be empty)."""
    if n < 1 or layers < 1:
        raise ValueError("n and layers must be positive")
    if layers < thickness_lower(n):
        raise ValueError(f"K_{n} has thickness {thickness_lower(n)} > {layers}")
    return [set(p) for p in _decompose_K(n, layers, budget)]


def d_in_range(r: int, s: int) -> bool:
    """Is s < 6r - 3 - 2*[r == 2] with r >= 2?"""
    return r >= 2 and 1 <= s < 6 * r - 3 - (2 if r == 2 else 0)


def _d_layers(r: int, s: int, budget: int) -> tuple[tuple[Edge, ...], ...]:
    """Layers of K_{s+1} minus {0, 1} with empire 1 absent from layer 0."""
    n = s + 1
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) != (0, 1)]
    banned = {e: {0} for e in edges if 1 in e}
    assign = _search(edges, r, banned, 1, budget)
    if assign is None:
        raise ValueError(f"no planar D gadget for r={r}, s={s}")
    return tuple(tuple(e for e, k in zip(edges, assign) if k == i) for i in range(r))


def _cache_dir() -> Path:
    return Path(os.environ.get("EMPIRECOL_CACHE", Path.home() / ".cache" / "empirecol"))


def check_D(a: GadgetArtifact, r: int, s: int) -> list[str]:
    """Structural problems of a D gadget; empty when D0-D3 and planarity hold."""
    g = a.graph
    problems = []
    u, v = a.empire("u"), a.empire("v")
    if g.num_vertices != r * (s + 1) or g.num_empires != s + 1 or g.r != r:
        problems.append("D0: wrong size")
    (iso,) = a.role("isolated")
    if g.empire_of[iso] != v or g.degree(iso) != 0:
        problems.append("D1: v_1 is not isolated")
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.num_vertices))
    nxg.add_edges_from(g.edges)
    for comp in nx.connected_components(nxg):
        emp = [g.empire_of[x] for x in comp]
        if len(emp) != len(set(emp)):
            problems.append("D2: component repeats an empire")
        if not nx.check_planarity(nxg.subgraph(comp))[0]:
            problems.append("component is not planar")
    rg = reduce(g)
    for x in range(s + 1):
        for y in range(x + 1, s + 1):
            if {x, y} != {u, v} and not rg.has_edge(x, y):
                problems.append(f"D3: missing reduced edge {x}-{y}")
    if rg.has_edge(u, v):
        problems.append("D3: u and v adjacent")
    return problems


def _assemble_D(r: int, s: int, u: int, v: int, layers: tuple[tuple[Edge, ...], ...]) -> GadgetArtifact:
    n = s + 1
    rest = [e for e in range(n) if e not in (u, v)]
    relabel = {0: u, 1: v, **{k + 2: e for k, e in enumerate(rest)}}
    empire_of = [x % n for x in range(r * n)]
    edges = [
        norm_edge(i * n + relabel[a], i * n + relabel[b]) for i, layer in enumerate(layers) for a, b in layer
    ]
    g = EmpireGraph.build(r * n, edges, empire_of, r, strict_size=True)
    roles = {"empire:u": (u,), "empire:v": (v,), "isolated": (v,)}
    for i in range(r):
        roles[f"layer{i}"] = tuple(range(i * n, (i + 1) * n))
    return GadgetArtifact(g, roles)


@lru_cache(maxsize=None)
def _build_D_cached(r: int, s: int, u: int, v: int, budget: int) -> GadgetArtifact:
    from ..io import read_artifact, write_artifact

    path = _cache_dir() / f"D_{r}_{s}_{u}_{v}.eg"
    if path.exists():
        try:
            art = read_artifact(path.read_text())
            if not check_D(art, r, s):
                return art
        except (ValueError, KeyError):
            pass
    art = _assemble_D(r, s, u, v, _d_layers(r, s, budget))
    bad = check_D(art, r, s)
    if bad:
        raise AssertionError(f"D gadget search produced an invalid graph: {bad}")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".tmp{os.getpid()}")
        tmp.write_text(write_artifact(art))
        tmp.replace(path)
    except OSError:
        pass
    return art


def build_D(
    r: int, s: int, u_empire: int = 0, v_empire: int = 1, budget: int = DEFAULT_NODE_BUDGET
) -> GadgetArtifact:
    """D_{r,s}(u, v): planar components whose reduced graph is K_{s+1} minus {u, v}.

    Layer ``i`` lives on the ``i``-th vertex of every empire (vertex id
    ``i*(s+1) + empire``); vertex ``v_1`` is isolated.
    """
    if not d_in_range(r, s):
        raise ValueError(f"planar gadget undefined for r={r}, s={s}")
    if u_empire == v_empire or not (0 <= u_empire <= s and 0 <= v_empire <= s):
        raise ValueError("u and v must be distinct empires of the gadget")
    return _build_D_cached(r, s, u_empire, v_empire, budget)


def delete_empire(a: GadgetArtifact, e: int) -> GadgetArtifact:
    """Drop empire ``e`` (not u or v) from a D gadget; the result is D_{r,s-1}."""
    u, v = a.empire("u"), a.empire("v")
    if e in (u, v):
        raise ValueError("cannot delete u or v")
    g = a.graph
    keep = [x for x in range(g.num_vertices) if g.empire_of[x] != e]
    vmap = {x: i for i, x in enumerate(keep)}

    def emap(k: int) -> int:
        return k if k < e else k - 1

    edges = [(vmap[x], vmap[y]) for x, y in g.edges if x in vmap and y in vmap]
    h = EmpireGraph.build(len(keep), edges, [emap(g.empire_of[x]) for x in keep], g.r, strict_size=True)
    roles = {"empire:u": (emap(u),), "empire:v": (emap(v),), "isolated": (vmap[a.role("isolated")[0]],)}
    return GadgetArtifact(h, roles)
