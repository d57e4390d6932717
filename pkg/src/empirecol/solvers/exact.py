"""Complete backtracking decision procedure for (s, r)-colourability."""

from __future__ import annotations

import enum
import sys
import time
from collections import deque
from dataclasses import dataclass
from typing import Optional

from ..core import Colouring, EmpireGraph, ReducedGraph, reduce

DEFAULT_NODES = 10_000_000
DEFAULT_SECONDS = 60.0


class Status(enum.Enum):
    COLOURABLE = "Colourable"
    NOT_COLOURABLE = "NotColourable"
    TIMEOUT = "Timeout"


@dataclass(frozen=True)
class SolverStats:
    nodes: int
    seconds: float


@dataclass(frozen=True)
class SolverResult:
    status: Status
    colouring: Optional[Colouring]
    stats: SolverStats


class _OutOfBudget(Exception):
    pass


class _Search:
    def __init__(self, adj: dict[int, set[int]], s: int, symmetry: bool, nodes: int, deadline: float) -> None:
        self.adj, self.s, self.symmetry = adj, s, symmetry
        self.max_nodes, self.deadline = nodes, deadline
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes or (self.nodes & 1023 == 0 and time.monotonic() > self.deadline):
            raise _OutOfBudget

    def solve(self, verts: list[int]) -> dict[int, int] | None:
        """DSatur-ordered search on one component.

        Assignments propagate: a neighbour left with a single colour is
        assigned at once.  Every assignment carries the set of decision
        levels that explain it (a bitmask), so a failure backjumps straight
        to the deepest level that contributed to it.
        """
        adj, s = self.adj, self.s
        full = (1 << s) - 1
        dom = {v: full for v in verts}
        colour: dict[int, int] = {}
        why: dict[int, int] = {}
        pruned_by: dict[int, list[int]] = {v: [-1] * s for v in verts}
        nbrs = {v: sorted(adj[v]) for v in verts}

        def pick() -> int:
            best, key = -1, None
            for v in verts:
                if v in colour:
                    continue
                k = (bin(dom[v]).count("1"), -len(nbrs[v]), v)
                if key is None or k < key:
                    best, key = v, k
            return best

        def explain(w: int, skip: int = -1) -> int:
            mask = 0
            for c, x in enumerate(pruned_by[w]):
                if c != skip and x >= 0:
                    mask |= why[x]
            return mask

        def assign(v: int, c: int, level: int, trail: list[tuple[int, int]], placed: list[int]) -> tuple[int, int]:
            """Colour ``v`` and all it forces; returns (colours in use, 0) or (-1, conflict levels)."""
            top = c + 1
            queue = [(v, c, 1 << level)]
            while queue:
                x, cx, reason = queue.pop()
                if x in colour:
                    if colour[x] != cx:
                        return -1, why[x] | reason
                    continue
                colour[x] = cx
                why[x] = reason
                placed.append(x)
                top = max(top, cx + 1)
                bit = 1 << cx
                for w in nbrs[x]:
                    if w in colour:
                        if colour[w] == cx:
                            return -1, why[w] | reason
                        continue
                    if dom[w] & bit:
                        dom[w] &= ~bit
                        pruned_by[w][cx] = x
                        trail.append((w, cx))
                        if not dom[w]:
                            return -1, explain(w)
                        if dom[w] & (dom[w] - 1) == 0:
                            forced = dom[w].bit_length() - 1
                            queue.append((w, forced, explain(w, forced)))
            return top, 0

        def undo(trail: list[tuple[int, int]], placed: list[int]) -> None:
            for x in placed:
                del colour[x]
                del why[x]
            for w, c in reversed(trail):
                dom[w] |= 1 << c
                pruned_by[w][c] = -1

        def rec(level: int, used: int) -> int | None:
            """None on success, else the bitmask of levels responsible for failure."""
            if len(colour) == len(verts):
                return None
            self.tick()
            v = pick()
            me = 1 << level
            conflict = explain(v)
            top = min(s, used + 1) if self.symmetry else s
            for c in range(top):
                if not dom[v] & (1 << c):
                    continue
                trail: list[tuple[int, int]] = []
                placed: list[int] = []
                reached, bad = assign(v, c, level, trail, placed)
                if reached >= 0:
                    sub = rec(level + 1, max(used, reached))
                    if sub is None:
                        return None
                    bad = sub
                undo(trail, placed)
                if not bad & me:
                    return bad
                conflict |= bad & ~me
            return conflict

        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 2 * len(verts) + 200))
        try:
            return dict(colour) if rec(0, 0) is None else None
        finally:
            sys.setrecursionlimit(limit)


class _Simplifier:
    """Colourability-preserving shrinking of a graph before search.

    Three rules run to a fixpoint, each logged so a colouring of the small
    graph extends back to the original one:

    * a vertex of degree < s can always be coloured last;
    * vertices adjacent to every member of an (s-1)-clique must all take
      the one remaining colour, so they are merged (or, if two of them are
      adjacent, the graph is not s-colourable);
    * a vertex whose neighbourhood lies inside that of a non-adjacent vertex
      can copy that vertex's colour.
    """

    def __init__(self, rg: ReducedGraph, s: int) -> None:
        self.s = s
        self.adj: dict[int, set[int]] = {v: set(rg.neighbours[v]) for v in range(rg.num_empires)}
        # (kind, vertex, data): "peel" keeps the neighbours at removal time,
        # "copy" names the vertex whose colour to reuse
        self.log: list[tuple[str, int, object]] = []
        self.infeasible = False

    def _remove(self, v: int) -> set[int]:
        nb = self.adj.pop(v)
        for w in nb:
            self.adj[w].discard(v)
        return nb

    def peel(self) -> bool:
        queue = deque(v for v, nb in self.adj.items() if len(nb) < self.s)
        changed = False
        while queue:
            v = queue.popleft()
            if v not in self.adj or len(self.adj[v]) >= self.s:
                continue
            nb = self._remove(v)
            self.log.append(("peel", v, tuple(nb)))
            changed = True
            queue.extend(w for w in nb if len(self.adj[w]) < self.s)
        return changed

    def _cliques(self, size: int) -> list[tuple[int, ...]]:
        adj, out = self.adj, []

        def grow(clique: list[int], cand: set[int]) -> None:
            if len(clique) == size:
                out.append(tuple(clique))
                return
            for w in sorted(cand):
                if w > clique[-1]:
                    grow(clique + [w], cand & adj[w])

        for v in sorted(adj):
            if size == 1:
                out.append((v,))
            else:
                grow([v], {w for w in adj[v] if w > v})
        return out

    def merge(self) -> bool:
        """Merge the common neighbours of each (s-1)-clique."""
        if self.s < 2:
            return False
        changed = False
        for clique in self._cliques(self.s - 1):
            if any(v not in self.adj for v in clique):
                continue
            common = set.intersection(*(self.adj[v] for v in clique))
            if len(common) < 2:
                continue
            rep, *rest = sorted(common)
            for x in rest:
                if x in self.adj[rep]:
                    self.infeasible = True
                    return False
            for x in rest:
                nb = self._remove(x)
                for w in nb:
                    self.adj[w].add(rep)
                    self.adj[rep].add(w)
                self.log.append(("copy", x, rep))
                if rep in self.adj[rep]:
                    self.infeasible = True
                    return False
            changed = True
        return changed

    def dominate(self) -> bool:
        changed = False
        for u in sorted(self.adj):
            nu = self.adj.get(u)
            if not nu:
                continue
            pivot = min(nu, key=lambda w: (len(self.adj[w]), w))
            for v in sorted(self.adj[pivot]):
                if v != u and v not in nu and nu <= self.adj[v]:
                    self._remove(u)
                    self.log.append(("copy", u, v))
                    changed = True
                    break
        return changed

    def run(self) -> None:
        while not self.infeasible:
            progress = self.peel()
            progress = self.merge() or progress
            if self.infeasible:
                return
            progress = self.dominate() or progress
            if not progress:
                return

    def extend(self, colour: dict[int, int]) -> None:
        for kind, v, data in reversed(self.log):
            if kind == "copy":
                colour[v] = colour[data]  # type: ignore[index]
            else:
                taken = {colour[w] for w in data}  # type: ignore[union-attr]
                colour[v] = next(c for c in range(self.s) if c not in taken)


def _components(adj: dict[int, set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for v in sorted(adj):
        if v in seen:
            continue
        seen.add(v)
        comp, stack = [], [v]
        while stack:
            x = stack.pop()
            comp.append(x)
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def exact_empire_colour(
    g: EmpireGraph | ReducedGraph,
    s: int,
    node_budget: int = DEFAULT_NODES,
    time_budget: float = DEFAULT_SECONDS,
    symmetry: bool = True,
    simplify: bool = True,
) -> SolverResult:
    """Decide (s, r)-colourability exactly.

    The reduced graph is first shrunk by colourability-preserving rules
    (see ``_Simplifier``); each component of what remains is searched
    separately and the colouring is then extended back.
    """
    if s < 1:
        raise ValueError("s must be positive")
    start = time.monotonic()
    rg = g if isinstance(g, ReducedGraph) else reduce(g)
    simp = _Simplifier(rg, s)
    if simplify:
        simp.run()
    else:
        simp.peel()
    search = _Search(simp.adj, s, symmetry, node_budget, start + time_budget)

    def stats() -> SolverStats:
        return SolverStats(search.nodes, time.monotonic() - start)

    if simp.infeasible:
        return SolverResult(Status.NOT_COLOURABLE, None, stats())
    colour: dict[int, int] = {}
    try:
        for comp in _components(simp.adj):
            part = search.solve(comp)
            if part is None:
                return SolverResult(Status.NOT_COLOURABLE, None, stats())
            colour.update(part)
    except _OutOfBudget:
        return SolverResult(Status.TIMEOUT, None, stats())
    simp.extend(colour)
    result = Colouring(tuple(colour[v] for v in range(rg.num_empires)), s)
    for v in range(rg.num_empires):
        if any(colour[v] == colour[w] for w in rg.neighbours[v]):
            raise AssertionError("solver produced an improper colouring")
    return SolverResult(Status.COLOURABLE, result, stats())
