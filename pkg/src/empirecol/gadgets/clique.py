"""Clique gadgets B_{r,s} and their connected / colour-constraining variants.

Labels ``1..s+1`` name the empires as in the construction; the empire id of
label ``j`` is ``j - 1`` and the vertex ``j_i`` on path ``i`` (0-based) has id
``i * (s + 1) + j - 1``.
"""

from __future__ import annotations

from collections import Counter

from ..core import EmpireGraph, norm_edge
from .artifact import GadgetArtifact
from .walecki import walecki


def clique_paths(r: int, s: int) -> list[list[int]]:
    """Label sequences of the ``r`` paths of B_{r,s}."""
    if not 1 <= s < 2 * r:
        raise ValueError(f"clique gadget needs 1 <= s < 2r, got r={r}, s={s}")
    paths = []
    for cyc in walecki(r).cycles:
        k = cyc.index(0)
        paths.append([cyc[(k + j) % len(cyc)] for j in range(1, len(cyc))])
    # dropping vertex 0 leaves labels 1..2r; shrink to 1..s+1 by splicing out
    # the largest label, which joins its two path neighbours
    for label in range(2 * r, s + 1, -1):
        for p in paths:
            if label in p:
                p.remove(label)
    return paths


def _from_paths(r: int, s: int, paths: list[list[int]]) -> tuple[list[int], set[tuple[int, int]], dict]:
    n = s + 1
    empire_of = [v % n for v in range(r * n)]
    edges = set()
    roles: dict[str, tuple[int, ...]] = {}
    for i, p in enumerate(paths):
        ids = [i * n + label - 1 for label in p]
        roles[f"path{i}"] = tuple(ids)
        edges.update(norm_edge(a, b) for a, b in zip(ids, ids[1:]))
    return empire_of, edges, roles


def build_B(r: int, s: int) -> GadgetArtifact:
    """B_{r,s}: ``r`` paths on ``s+1`` empires of size ``r`` reducing to K_{s+1}."""
    paths = clique_paths(r, s)
    empire_of, edges, roles = _from_paths(r, s, paths)
    g = EmpireGraph.build(r * (s + 1), edges, empire_of, r, strict_size=True)
    return GadgetArtifact(g, roles)


def build_B_plus(r: int, s: int, root_empire: int = 0) -> GadgetArtifact:
    """B_{r,s} with the root empire's vertices chained into a path: a tree."""
    if r < 2:
        raise ValueError("connected clique gadget needs r > 1")
    base = build_B(r, s)
    if not 0 <= root_empire <= s:
        raise ValueError(f"no empire {root_empire} in B_{{{r},{s}}}")
    root = base.graph.members[root_empire]
    edges = set(base.graph.edges) | {norm_edge(a, b) for a, b in zip(root, root[1:])}
    g = EmpireGraph.build(base.graph.num_vertices, edges, base.graph.empire_of, r, strict_size=True)
    return GadgetArtifact(g, {**base.roles, "empire:root": (root_empire,)})


def minus_pairs(r: int, s: int) -> list[tuple[int, int, int]]:
    """All ``(row, u, v)`` where u ends path ``row`` next to v and {u, v} occurs once."""
    paths = clique_paths(r, s)
    count = Counter(norm_edge(a, b) for p in paths for a, b in zip(p, p[1:]))
    out = []
    for i, p in enumerate(paths):
        if len(p) < 2:
            continue
        for end, nxt in ((p[0], p[1]), (p[-1], p[-2])):
            if count[norm_edge(end, nxt)] == 1:
                out.append((i, end - 1, nxt - 1))
    return out


def build_B_minus(r: int, s: int, u_empire: int | None = None, v_empire: int | None = None) -> GadgetArtifact:
    """B_{r,s} minus the edge from path end ``u_1`` to its neighbour ``v_1``.

    Every (s, r)-colouring gives ``u`` and ``v`` the same colour.  Without
    explicit empires the first admissible pair is used.
    """
    pairs = minus_pairs(r, s)
    if u_empire is None and v_empire is None:
        if not pairs:
            raise ValueError(f"B_{{{r},{s}}} has no admissible end edge")
        row, u_empire, v_empire = pairs[0]
    else:
        hits = [p for p in pairs if p[1] == u_empire and p[2] == v_empire]
        if not hits:
            raise ValueError(
                f"empires {u_empire},{v_empire} are not a once-occurring end edge of B_{{{r},{s}}}"
            )
        row = hits[0][0]
    base = build_B(r, s)
    n = s + 1
    u1, v1 = row * n + u_empire, row * n + v_empire
    edges = set(base.graph.edges) - {norm_edge(u1, v1)}
    g = EmpireGraph.build(base.graph.num_vertices, edges, base.graph.empire_of, r, strict_size=True)
    roles = {
        **base.roles,
        "empire:u": (u_empire,),
        "empire:v": (v_empire,),
        "isolated": (u1,),
    }
    return GadgetArtifact(g, roles)
