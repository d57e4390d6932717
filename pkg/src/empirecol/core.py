"""Empire graphs, their reduced graphs, and colourings.

An r-empire graph is an ordinary graph whose vertices are partitioned into
blocks ("empires").  A colouring assigns one colour per empire and must be
proper only across empires: edges inside an empire are ignored.  Everything
downstream works on the reduced graph obtained by contracting each empire to
a single pseudo-vertex.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EmpireGraph:
    """A graph on vertices ``0..num_vertices-1`` with an empire partition.

    ``empire_of[v]`` is the empire id of vertex ``v``; empire ids are dense,
    i.e. every id in ``0..num_empires-1`` owns at least one vertex.  With
    ``strict_size`` every empire must have exactly ``r`` vertices, otherwise
    sizes only have to be at most ``r``.
    """

    num_vertices: int
    edges: frozenset[Edge]
    empire_of: tuple[int, ...]
    r: int
    strict_size: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"empire capacity must be positive, got r={self.r}")
        if len(self.empire_of) != self.num_vertices:
            raise ValueError("every vertex needs exactly one empire id")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.num_vertices):
                raise ValueError(f"edge {(u, v)} is not a normalised vertex pair")
        sizes = Counter(self.empire_of)
        if sizes and set(sizes) != set(range(len(sizes))):
            raise ValueError("empire ids must be dense from 0")
        for e, size in sizes.items():
            if size > self.r or (self.strict_size and size != self.r):
                raise ValueError(f"empire {e} has {size} vertices, r={self.r}")

    @classmethod
    def build(
        cls,
        num_vertices: int,
        edges: Iterable[Sequence[int]],
        empire_of: Sequence[int],
        r: int,
        strict_size: bool = False,
    ) -> EmpireGraph:
        """Normalise edge orientation and drop duplicates before validating."""
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            es.add(norm_edge(u, v))
        return cls(num_vertices, frozenset(es), tuple(empire_of), r, strict_size)

    @classmethod
    def plain(cls, num_vertices: int, edges: Iterable[Sequence[int]]) -> EmpireGraph:
        """An ordinary graph viewed as a 1-empire graph."""
        return cls.build(num_vertices, edges, range(num_vertices), 1, strict_size=True)

    @property
    def num_empires(self) -> int:
        return max(self.empire_of, default=-1) + 1

    @cached_property
    def members(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.num_empires)]
        for v, e in enumerate(self.empire_of):
            out[e].append(v)
        return tuple(tuple(m) for m in out)

    @cached_property
    def neighbours(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.neighbours[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class ReducedGraph:
    """Simple graph on empire ids; ``multiplicity`` counts the source edges."""

    num_empires: int
    adjacency: frozenset[Edge]
    multiplicity: dict[Edge, int] = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> ReducedGraph:
        mult: Counter[Edge] = Counter()
        for u, v in edges:
            if u != v:
                mult[norm_edge(u, v)] += 1
        return cls(n, frozenset(mult), dict(mult))

    @cached_property
    def neighbours(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.num_empires)]
        for u, v in self.adjacency:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.neighbours[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.adjacency

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest member."""
        seen = [False] * self.num_empires
        comps = []
        for start in range(self.num_empires):
            if seen[start]:
                continue
            seen[start] = True
            stack, comp = [start], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.neighbours[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices: Sequence[int]) -> tuple[ReducedGraph, list[int]]:
        """Subgraph on ``vertices`` relabelled to ``0..k-1``; returns the old ids too."""
        old = sorted(vertices)
        new = {x: i for i, x in enumerate(old)}
        edges = [(new[u], new[v]) for u, v in self.adjacency if u in new and v in new]
        return ReducedGraph.from_edges(len(old), edges), old


def reduce(g: EmpireGraph) -> ReducedGraph:
    """Contract every empire of ``g`` to a pseudo-vertex.

    Intra-empire edges vanish and parallel edges collapse; how many source
    edges each pair came from is kept in ``multiplicity``.
    """
    eo = g.empire_of
    return ReducedGraph.from_edges(g.num_empires, ((eo[u], eo[v]) for u, v in g.edges))


class WitnessKind(enum.Enum):
    CLIQUE_FOUND = "CliqueFound"
    ODD_CYCLE_FOUND = "OddCycleFound"
    EXHAUSTED_SEARCH = "ExhaustedSearch"


@dataclass(frozen=True)
class Colouring:
    """``colour_of[e]`` is the colour of empire ``e``, drawn from ``0..s-1``."""

    colour_of: tuple[int, ...]
    s: int

    def __post_init__(self) -> None:
        for e, c in enumerate(self.colour_of):
            if not 0 <= c < self.s:
                raise ValueError(f"empire {e} has colour {c} outside 0..{self.s - 1}")

    def __getitem__(self, empire: int) -> int:
        return self.colour_of[empire]

    def __len__(self) -> int:
        return len(self.colour_of)

    @property
    def colours_used(self) -> int:
        return len(set(self.colour_of))


@dataclass(frozen=True)
class InfeasibilityWitness:
    kind: WitnessKind
    witness_empires: tuple[int, ...]

    def check(self, rg: ReducedGraph, s: int) -> bool:
        """Re-verify the witness against ``rg`` independently of how it was found."""
        w = self.witness_empires
        if self.kind is WitnessKind.CLIQUE_FOUND:
            return len(set(w)) == s + 1 and all(
                rg.has_edge(a, b) for i, a in enumerate(w) for b in w[i + 1:]
            )
        if self.kind is WitnessKind.ODD_CYCLE_FOUND:
            return (
                s == 2
                and len(w) % 2 == 1
                and len(set(w)) == len(w) >= 3
                and all(rg.has_edge(w[i], w[(i + 1) % len(w)]) for i in range(len(w)))
            )
        return True


def verify_colouring(g: EmpireGraph, c: Colouring) -> tuple[bool, list[Edge]]:
    """Check ``c`` against every cross-empire edge of ``g``.

    Returns the verdict and the monochromatic cross-empire vertex edges.
    """
    if len(c.colour_of) < g.num_empires:
        raise ValueError(
            f"colouring covers {len(c.colour_of)} empires, graph has {g.num_empires}"
        )
    eo = g.empire_of
    bad = [
        (u, v)
        for u, v in g.sorted_edges()
        if eo[u] != eo[v] and c.colour_of[eo[u]] == c.colour_of[eo[v]]
    ]
    return not bad, bad
