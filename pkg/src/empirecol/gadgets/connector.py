"""Connector graphs E_{s,q,t} and the linear-forest connectivity gadget A_{r,s,m}.

Vertex layout of E_{s,q,t}: vertex 0 is the plug u^0; layer ``L`` (1-based)
then holds ``w^1..w^{s-1}`` followed by the sockets ``u^1..u^q``.  The empire
ids of A_{r,s,m} are exactly these vertex ids, with empire ``e`` owning
vertices ``e*r .. e*r + r - 1``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..core import Edge, EmpireGraph, norm_edge
from .artifact import GadgetArtifact

Triple = tuple[int, int, int]


def _cyc(i: int, n: int) -> int:
    """Index ``i`` wrapped into ``1..n``."""
    return (i - 1) % n + 1


class _Layout:
    def __init__(self, s: int, q: int, t: int) -> None:
        self.s, self.q, self.t = s, q, t
        self.width = s - 1 + q
        self.n = self.width * t + 1

    def w(self, layer: int, j: int) -> int:
        return 1 + (layer - 1) * self.width + j - 1

    def u(self, layer: int, i: int) -> int:
        if i == 0:
            return 0
        return 1 + (layer - 1) * self.width + self.s - 1 + i - 1

    def ws(self, layer: int) -> list[int]:
        return [self.w(layer, j) for j in range(1, self.s)]

    def us(self, layer: int) -> list[int]:
        return [self.u(layer, i) for i in range(1, self.q + 1)]


def _junction(s: int, q: int) -> list[tuple[int, int]]:
    """Pairs (socket index of previous layer, w index of next layer)."""
    out = []
    if s % 2:
        for i in range(1, (s - 1) // 2 + 1):
            out += [(_cyc(i, q), 2 * i - 1), (_cyc(i, q), 2 * i)]
        return out
    for i in range(1, min(s - 1, q) + 1):
        out.append((i, i))
    if s - 1 >= q:
        for i in range(1, (s - 1 - q) // 2 + 1):
            out += [(_cyc(i, q), q + 2 * i - 1), (_cyc(i, q), q + 2 * i)]
        if q % 2 == 0 and s - 1 > q:
            out.append((q, s - 1))
    return out


def _e_edges(lay: _Layout) -> list[Edge]:
    s, q, t = lay.s, lay.q, lay.t
    edges: list[Edge] = []
    for layer in range(1, t + 1):
        ws = lay.ws(layer)
        edges += [norm_edge(a, b) for k, a in enumerate(ws) for b in ws[k + 1:]]
        edges += [norm_edge(a, b) for a in ws for b in lay.us(layer)]
        if layer == 1:
            edges += [norm_edge(0, a) for a in ws]
        else:
            edges += [norm_edge(lay.u(layer - 1, i), lay.w(layer, j)) for i, j in _junction(s, q)]
    return sorted(edges)


def _e_roles(lay: _Layout) -> dict[str, tuple[int, ...]]:
    roles: dict[str, tuple[int, ...]] = {"empire:plug": (0,)}
    for layer in range(1, lay.t + 1):
        roles[f"empire:w{layer}"] = tuple(lay.ws(layer))
        roles[f"empire:u{layer}"] = tuple(lay.us(layer))
    return roles


def _check_e(s: int, q: int, t: int) -> None:
    if s < 3:
        raise ValueError(f"connector graph needs s >= 3, got {s}")
    if t < 1:
        raise ValueError(f"connector graph needs t >= 1, got {t}")
    if q < 1 or q * q < s - 1:
        raise ValueError(f"connector graph needs q >= sqrt(s-1), got s={s}, q={q}")


def build_E(s: int, q: int, t: int) -> GadgetArtifact:
    """E_{s,q,t} as a plain graph (every vertex its own empire, r = 1).

    Role ``monochromatic`` lists the plug and all sockets; these share one
    colour in every proper s-colouring.
    """
    _check_e(s, q, t)
    lay = _Layout(s, q, t)
    g = EmpireGraph.plain(lay.n, _e_edges(lay))
    roles = _e_roles(lay)
    roles["monochromatic"] = (0,) + tuple(v for L in range(1, t + 1) for v in lay.us(L))
    return GadgetArtifact(g, roles)


def euler_tour(edges: Sequence[Sequence[int]], start: int | None = None) -> list[Edge]:
    """Closed walk using every edge once (Hierholzer); parallel edges allowed.

    Edges are returned oriented along the walk.  Neighbours are explored in
    increasing order so the result is deterministic.
    """
    if not edges:
        return []
    inc: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for k, (a, b) in enumerate(edges):
        if a == b:
            raise ValueError("self-loops are not supported")
        inc[a].append((b, k))
        inc[b].append((a, k))
    odd = sorted(v for v, lst in inc.items() if len(lst) % 2)
    if odd:
        raise ValueError(f"odd-degree vertices present: {odd}")
    for lst in inc.values():
        lst.sort(reverse=True)
    if start is None:
        start = min(inc)
    if start not in inc:
        raise ValueError(f"start vertex {start} has no edges")
    used = [False] * len(edges)
    stack = [start]
    walk: list[int] = []
    while stack:
        x = stack[-1]
        lst = inc[x]
        while lst and used[lst[-1][1]]:
            lst.pop()
        if lst:
            y, k = lst.pop()
            used[k] = True
            stack.append(y)
        else:
            walk.append(stack.pop())
    walk.reverse()
    if len(walk) != len(edges) + 1:
        raise ValueError("edges are not connected")
    return list(zip(walk, walk[1:]))


def in_range(r: int, s: int) -> bool:
    """Does (r, s) satisfy 3 <= s < 2r - sqrt(2r + 1/4) + 3/2 (exact integer test)?"""
    k = 4 * r + 3 - 2 * s
    return r >= 2 and s >= 3 and k > 0 and k * k > 8 * r + 1


def _require_range(r: int, s: int) -> None:
    if not in_range(r, s):
        raise ValueError(f"connectivity gadget undefined for r={r}, s={s}")


def odd_internal(s: int, q: int) -> int:
    """Odd-degree sockets per internal layer when s is even."""
    return max(q - s + 1, 0) if s % 2 == 0 else 0


def isolated_count(r: int, s: int, t: int) -> int:
    """Isolated monochromatic vertices of the realisation built here."""
    q = 2 * r - s + 1
    if s % 2:
        return r - 1 + t * (q * r - (q + 1) * (s - 1) // 2)
    o = odd_internal(s, q)
    return (q + 1) * (r - s // 2) + (t - 1) * (q * r - ((q + 1) * (s - 1) + o) // 2)


def printed_isolated_count(r: int, s: int, t: int) -> int:
    """The closed form stated with the construction (s even uses max(q-s-1, 0))."""
    q = 2 * r - s + 1
    if s % 2:
        return r - 1 + t * (q * r - (q + 1) * (s - 1) // 2)
    return (q + 1) * (r - s // 2) + (t - 1) * (
        q * r - (q + 1) * (s - 1) // 2 - max(q - s - 1, 0)
    )


def connector(r: int, s: int, t: int) -> GadgetArtifact:
    """The linear-forest realisation of E_{s,q,t} with q = 2r - s + 1.

    ``reduce()`` of the result is E_{s,q,t}.  Role ``Z`` holds the isolated
    vertices of the monochromatic empires.
    """
    _require_range(r, s)
    if t < 1:
        raise ValueError("t must be positive")
    q = 2 * r - s + 1
    lay = _Layout(s, q, t)
    e_edges = _e_edges(lay)
    used: Counter = Counter()
    out: list[Edge] = []

    def fresh(e: int) -> int:
        k = used[e]
        if k >= r:
            raise AssertionError(f"empire {e} needs more than r={r} vertices")
        used[e] += 1
        return e * r + k

    def lay_walk(walk: Sequence[int], first: int | None = None) -> int:
        prev = fresh(walk[0]) if first is None else first
        for e in walk[1:]:
            cur = fresh(e)
            out.append(norm_edge(prev, cur))
            prev = cur
        return prev

    if s % 2:
        tour = euler_tour(e_edges, start=0)
        lay_walk([0] + [b for _, b in tour])
    else:
        h_paths = _h_paths(lay, e_edges)
        h_edges = Counter(norm_edge(a, b) for p in h_paths for a, b in zip(p, p[1:]))
        rest = [e for e in e_edges if e not in h_edges]
        if len(rest) + sum(h_edges.values()) != len(e_edges) or max(h_edges.values()) > 1:
            raise AssertionError("H is not a subgraph of E")
        tour = euler_tour(rest, start=0)
        end = lay_walk([0] + [b for _, b in tour])
        # P0 continues from the end of the tour instead of a fresh plug vertex
        lay_walk(h_paths[0], first=end)
        for p in h_paths[1:]:
            lay_walk(p)

    n_emp = lay.n
    g = EmpireGraph.build(n_emp * r, out, [v // r for v in range(n_emp * r)], r, strict_size=True)
    mono = [0] + [u for L in range(1, t + 1) for u in lay.us(L)]
    deg = [g.degree(v) for v in range(g.num_vertices)]
    z = tuple(v for e in sorted(mono) for v in g.members[e] if deg[v] == 0)
    roles = _e_roles(lay)
    roles["Z"] = z
    return GadgetArtifact(g, roles)


def _h_paths(lay: _Layout, e_edges: list[Edge]) -> list[list[int]]:
    """The subgraph H removed before touring when s is even: P0 first."""
    s, q, t = lay.s, lay.q, lay.t
    junction = _junction(s, q)
    carrier_idx = next(i for i, j in junction if j == s - 1)
    p0 = [0]
    for layer in range(1, t + 1):
        p0.append(lay.w(layer, s - 1))
        p0.append(lay.u(layer, carrier_idx) if layer < t else lay.u(layer, q))
    paths = [p0]
    odd = list(range(s, q + 1))
    for layer in range(1, t):
        for k in range(len(odd) // 2):
            a, b = odd[2 * k], odd[2 * k + 1]
            paths.append([lay.u(layer, a), lay.w(layer, _cyc(k + 1, s - 1)), lay.u(layer, b)])
    for i in range(1, (q - 1) // 2 + 1):
        paths.append([lay.u(t, 2 * i - 1), lay.w(t, _cyc(i, s - 1)), lay.u(t, 2 * i)])
    edge_set = set(e_edges)
    for p in paths:
        for a, b in zip(p, p[1:]):
            if norm_edge(a, b) not in edge_set:
                raise AssertionError(f"H edge {(a, b)} missing from E")
    return paths


def min_layers(r: int, s: int, m: int) -> int:
    """Smallest t whose realisation has at least ``m`` isolated monochromatic vertices."""
    _require_range(r, s)
    t = 1
    while isolated_count(r, s, t) < m:
        if isolated_count(r, s, t + 1) <= isolated_count(r, s, t):
            raise AssertionError(f"isolated count does not grow for r={r}, s={s}")
        t += 1
    return t


def build_A(r: int, s: int, m: int) -> GadgetArtifact:
    """A_{r,s,m}: a linear forest with at least ``m`` isolated forced-monochromatic vertices.

    For ``m <= r`` this is one edgeless empire whose vertices all form Z.
    """
    if m < 1:
        raise ValueError("m must be positive")
    _require_range(r, s)
    if m <= r:
        g = EmpireGraph.build(r, [], [0] * r, r, strict_size=True)
        return GadgetArtifact(g, {"empire:plug": (0,), "Z": tuple(range(r))})
    return connector(r, s, min_layers(r, s, m))


@dataclass(frozen=True)
class DegreeTable:
    """Counts (degree 2, degree 1, degree 0) per empire class of an A gadget."""

    plug: Triple
    colour_constraining: tuple[Triple, ...]
    internal: tuple[Triple, ...]
    sockets: tuple[Triple, ...]


def _layers(a: GadgetArtifact) -> int:
    t = 0
    while f"empire:w{t + 1}" in a.roles:
        t += 1
    return t


def degree_distribution(a: GadgetArtifact) -> DegreeTable:
    """Measure the degree table of a connector gadget.

    Internal socket layers are aggregated per layer; every other class is
    reported per empire.
    """
    t = _layers(a)
    if t == 0 or "Z" not in a.roles:
        raise ValueError("not a layered connectivity gadget")
    g = a.graph

    def count(empires: Iterable[int]) -> Triple:
        c = Counter(min(g.degree(v), 3) for e in empires for v in g.members[e])
        if c[3]:
            raise ValueError("vertex of degree above 2")
        return (c[2], c[1], c[0])

    return DegreeTable(
        plug=count(a.roles["empire:plug"]),
        colour_constraining=tuple(
            count([e]) for L in range(1, t + 1) for e in a.roles[f"empire:w{L}"]
        ),
        internal=tuple(count(a.roles[f"empire:u{L}"]) for L in range(1, t)),
        sockets=tuple(count([e]) for e in a.roles[f"empire:u{t}"]),
    )


def _table(r: int, s: int, t: int, internal: Triple) -> DegreeTable:
    q = 2 * r - s + 1
    if s % 2:
        h = (s - 1) // 2
        plug, sock = (h - 1, 2, r - h - 1), (h, 0, r - h)
    else:
        h = s // 2
        plug, sock = (h - 1, 1, r - h), (h - 1, 1, r - h)
    return DegreeTable(
        plug=plug,
        colour_constraining=((r, 0, 0),) * ((s - 1) * t),
        internal=(internal,) * (t - 1),
        sockets=(sock,) * q,
    )


def printed_degree_table(r: int, s: int, t: int) -> DegreeTable:
    """Degree table exactly as stated alongside the construction."""
    q = 2 * r - s + 1
    half = (q + 1) * (s - 1) // 2
    if s % 2:
        internal = (half, 0, q * r - half)
    else:
        mx = max(q - s - 1, 0)
        internal = (half - mx, mx, q * r - half - mx)
    return _table(r, s, t, internal)


def expected_degree_table(r: int, s: int, t: int) -> DegreeTable:
    """Degree table forced by degree counting in E_{s,q,t}.

    An internal socket layer carries total degree (q+1)(s-1), and each of its
    ``odd_internal`` odd-degree sockets ends a path.
    """
    q = 2 * r - s + 1
    o = odd_internal(s, q)
    d2 = ((q + 1) * (s - 1) - o) // 2
    return _table(r, s, t, (d2, o, q * r - d2 - o))


def linearize(g: EmpireGraph, v: int, r_out: int, s: int) -> EmpireGraph:
    """Replace empire ``v`` of ``g`` by a copy of A_{r_out,s,m}.

    ``m`` is the number of cross-empire edges at ``v``; each is moved to its
    own vertex of the copy's Z.  Other empires keep their relative order and
    the copy's empires are appended at the end.
    """
    if not 0 <= v < g.num_empires:
        raise ValueError(f"no empire {v}")
    if g.r > r_out:
        raise ValueError(f"graph has r={g.r} > r_out={r_out}")
    eo = g.empire_of
    mine = set(g.members[v])
    cross = sorted((a, b) if a in mine else (b, a) for a, b in g.edges if (a in mine) != (b in mine))
    art = build_A(r_out, s, max(len(cross), 1))
    z = art.role("Z")

    keep = [x for x in range(g.num_vertices) if x not in mine]
    vmap = {x: i for i, x in enumerate(keep)}
    emap = {e: (e if e < v else e - 1) for e in range(g.num_empires) if e != v}
    base_v, base_e = len(keep), g.num_empires - 1
    empire_of = [emap[eo[x]] for x in keep] + [base_e + e for e in art.graph.empire_of]
    edges = [(vmap[a], vmap[b]) for a, b in g.edges if a not in mine and b not in mine]
    edges += [(base_v + a, base_v + b) for a, b in art.graph.edges]
    edges += [(base_v + z[k], vmap[b]) for k, (_, b) in enumerate(cross)]
    return EmpireGraph.build(len(empire_of), edges, empire_of, r_out)
