"""Polynomial-time colouring of sparse empire graphs.

With ``s = r * sigma`` colours, every connected component of the reduced
graph of a graph in SPARSE(sigma) either peels away completely under
repeated removal of vertices of degree < s, or leaves an s-regular residue.
Peeled vertices are coloured greedily in reverse order; residues go through
a constructive version of Brooks' theorem.
"""

from __future__ import annotations

import heapq
from collections import deque
from fractions import Fraction
from typing import Sequence, Union

import networkx as nx

from .core import (
    Colouring,
    EmpireGraph,
    InfeasibilityWitness,
    ReducedGraph,
    WitnessKind,
    reduce,
)

ColourResult = Union[Colouring, InfeasibilityWitness]


def degeneracy_order(rg: ReducedGraph) -> tuple[list[int], int]:
    """Repeatedly remove a minimum-degree vertex (smallest id on ties).

    Returns the removal order and the largest degree seen at removal time.
    """
    deg = [rg.degree(v) for v in range(rg.num_empires)]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * rg.num_empires
    order: list[int] = []
    degeneracy = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        degeneracy = max(degeneracy, d)
        for w in rg.neighbours[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return order, degeneracy


def _smallest_free(rg: ReducedGraph, v: int, colour: dict[int, int], s: int) -> int | None:
    taken = {colour[w] for w in rg.neighbours[v] if w in colour}
    for c in range(s):
        if c not in taken:
            return c
    return None


def greedy_colour(rg: ReducedGraph, ordering: Sequence[int], s: int) -> ColourResult:
    """Colour in reverse ``ordering`` with the smallest colour not seen on a neighbour."""
    if sorted(ordering) != list(range(rg.num_empires)):
        raise ValueError("ordering must be a permutation of the empires")
    colour: dict[int, int] = {}
    for v in reversed(ordering):
        c = _smallest_free(rg, v, colour, s)
        if c is None:
            stuck = (v,) + tuple(w for w in rg.neighbours[v] if w in colour)
            return InfeasibilityWitness(WitnessKind.EXHAUSTED_SEARCH, stuck)
        colour[v] = c
    return Colouring(tuple(colour[v] for v in range(rg.num_empires)), s)


def _bfs_order(adj: dict[int, list[int]], root: int) -> list[int]:
    seen = {root}
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def _connected(adj: dict[int, list[int]], skip: set[int]) -> bool:
    rest = [v for v in adj if v not in skip]
    if not rest:
        return True
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in skip and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(rest)


def _greedy_towards(
    adj: dict[int, list[int]], root: int, s: int, colour: dict[int, int]
) -> None:
    """Greedy colouring in reverse BFS order from ``root``.

    Every non-root vertex still has its BFS parent uncoloured when its turn
    comes, so at most deg-1 neighbours constrain it.  Pre-coloured vertices
    are kept.
    """
    for v in reversed(_bfs_order(adj, root)):
        if v in colour:
            continue
        taken = {colour[w] for w in adj[v] if w in colour}
        c = next(c for c in range(s) if c not in taken)
        colour[v] = c


def _odd_cycle_walk(adj: dict[int, list[int]]) -> tuple[int, ...]:
    start = min(adj)
    walk = [start]
    prev, cur = None, start
    while True:
        nxt = min(y for y in adj[cur] if y != prev)
        if nxt == start:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
    return tuple(walk)


def _brooks_component(adj: dict[int, list[int]], s: int) -> dict[int, int] | InfeasibilityWitness:
    verts = sorted(adj)
    n = len(verts)
    if n == s + 1:
        return InfeasibilityWitness(WitnessKind.CLIQUE_FOUND, tuple(verts))
    if s == 2:
        if n % 2:
            return InfeasibilityWitness(WitnessKind.ODD_CYCLE_FOUND, _odd_cycle_walk(adj))
        return {v: i % 2 for i, v in enumerate(_odd_cycle_walk(adj))}

    # s >= 3 and not complete from here on.
    for c in verts:
        if _connected(adj, {c}):
            continue
        # c is a cut vertex: every piece of G - c plus c has c of degree < s.
        colour: dict[int, int] = {}
        sub_verts = [v for v in verts if v != c]
        seen: set[int] = set()
        for v in sub_verts:
            if v in seen:
                continue
            piece = set(_bfs_order({x: [y for y in adj[x] if y != c] for x in sub_verts}, v))
            seen |= piece
            piece.add(c)
            sub = {x: [y for y in adj[x] if y in piece] for x in sorted(piece)}
            part: dict[int, int] = {}
            _greedy_towards(sub, c, s, part)
            # rename colours so that c gets 0 in every piece
            swap = {part[c]: 0, 0: part[c]}
            for x, col in part.items():
                colour[x] = swap.get(col, col)
        return colour

    # 2-connected: find v with non-adjacent neighbours x, y and G - {x, y} connected.
    for v in verts:
        nb = adj[v]
        for i, x in enumerate(nb):
            for y in nb[i + 1:]:
                if y in adj[x]:
                    continue
                if not _connected(adj, {x, y}):
                    continue
                colour = {x: 0, y: 0}
                rest = {a: [b for b in adj[a] if b not in (x, y)] for a in verts if a not in (x, y)}
                order = _bfs_order(rest, v)
                for a in reversed(order):
                    taken = {colour[b] for b in adj[a] if b in colour}
                    colour[a] = next(col for col in range(s) if col not in taken)
                return colour
    raise AssertionError("Brooks configuration not found; input violates preconditions")


def brooks_colour(rg: ReducedGraph, s: int) -> ColourResult:
    """Colour a connected s-regular graph with s colours, or name the obstruction.

    Returns ``CliqueFound`` for K_{s+1} and ``OddCycleFound`` for odd cycles
    when ``s == 2``.
    """
    if rg.num_empires == 0:
        return Colouring((), s)
    if any(rg.degree(v) != s for v in range(rg.num_empires)):
        raise ValueError(f"graph is not {s}-regular")
    adj = {v: list(rg.neighbours[v]) for v in range(rg.num_empires)}
    if not _connected(adj, set()):
        raise ValueError("graph is not connected")
    out = _brooks_component(adj, s)
    if isinstance(out, InfeasibilityWitness):
        return out
    return Colouring(tuple(out[v] for v in range(rg.num_empires)), s)


def colour_budget(r: int, sigma: Fraction | int | str) -> int:
    s = Fraction(sigma) * r
    if s.denominator != 1 or s <= 0:
        raise ValueError(f"r * sigma must be a positive integer, got {s}")
    return int(s)


def sparse_colour(g: EmpireGraph, sigma: Fraction | int | str) -> ColourResult:
    """Decide (r*sigma, r)-colourability of a graph in SPARSE(sigma).

    Outside that class a residue may fail to be regular; this raises
    ``ValueError`` rather than guessing.
    """
    s = colour_budget(g.r, sigma)
    rg = reduce(g)
    colour: dict[int, int] = {}
    for comp in rg.components():
        sub, old = rg.induced(comp)
        deg = [sub.degree(v) for v in range(sub.num_empires)]
        alive = [True] * sub.num_empires
        peeled: list[int] = []
        queue = deque(v for v in range(sub.num_empires) if deg[v] < s)
        queued = set(queue)
        while queue:
            v = queue.popleft()
            alive[v] = False
            peeled.append(v)
            for w in sub.neighbours[v]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] < s and w not in queued:
                        queued.add(w)
                        queue.append(w)
        local: dict[int, int] = {}
        residue = [v for v in range(sub.num_empires) if alive[v]]
        if residue:
            core, core_ids = sub.induced(residue)
            for piece in core.components():
                pg, pids = core.induced(piece)
                if any(pg.degree(v) != s for v in range(pg.num_empires)):
                    raise ValueError("residue is not regular; graph lies outside SPARSE(sigma)")
                res = brooks_colour(pg, s)
                if isinstance(res, InfeasibilityWitness):
                    ids = tuple(old[core_ids[pids[x]]] for x in res.witness_empires)
                    return InfeasibilityWitness(res.kind, ids)
                for x, c in enumerate(res.colour_of):
                    local[core_ids[pids[x]]] = c
        for v in reversed(peeled):
            taken = {local[w] for w in sub.neighbours[v] if w in local}
            local[v] = next(c for c in range(s) if c not in taken)
        for v, c in local.items():
            colour[old[v]] = c
    return Colouring(tuple(colour[v] for v in range(rg.num_empires)), s)


def _denser_than(n: int, edges: Sequence[tuple[int, int]], avg: Fraction) -> bool:
    """Is there a non-empty vertex set S with 2|E(S)|/|S| > avg?

    Max-flow on the edge/vertex bipartite network: source -> edge (cap b),
    edge -> both endpoints (unbounded), vertex -> sink (cap a), where
    avg/2 = a/b.  The best value of b|E(S)| - a|S| equals b|E| - maxflow.
    """
    half = avg / 2
    a, b = half.numerator, half.denominator
    if not edges:
        return False
    net = nx.DiGraph()
    for i, (u, v) in enumerate(edges):
        net.add_edge("src", ("e", i), capacity=b)
        net.add_edge(("e", i), ("v", u))
        net.add_edge(("e", i), ("v", v))
    for v in range(n):
        net.add_edge(("v", v), "snk", capacity=a)
    flow = nx.maximum_flow_value(net, "src", "snk")
    return flow < b * len(edges)


def _graph_of(g: EmpireGraph | ReducedGraph) -> tuple[int, list[tuple[int, int]]]:
    if isinstance(g, ReducedGraph):
        return g.num_empires, sorted(g.adjacency)
    return g.num_vertices, g.sorted_edges()


def is_sparse(g: EmpireGraph | ReducedGraph, sigma: Fraction | int | str) -> bool:
    """True iff no induced subgraph has average degree larger than ``sigma``."""
    n, edges = _graph_of(g)
    return not _denser_than(n, edges, Fraction(sigma))


def max_subgraph_avg_degree(g: EmpireGraph | ReducedGraph) -> Fraction:
    """Exact maximum of 2|E(S)|/|S| over non-empty vertex subsets S."""
    n, edges = _graph_of(g)
    if n == 0:
        raise ValueError("graph has no vertices")
    m = len(edges)
    candidates = sorted(
        {Fraction(2 * e, k) for k in range(1, n + 1) for e in range(min(m, k * (k - 1) // 2) + 1)}
    )
    lo, hi = 0, len(candidates) - 1
    # smallest candidate c with nothing strictly denser than c
    while lo < hi:
        mid = (lo + hi) // 2
        if _denser_than(n, edges, candidates[mid]):
            lo = mid + 1
        else:
            hi = mid
    return candidates[lo]
