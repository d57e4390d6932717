"""Incremental construction of empire graphs out of gadget copies."""

from __future__ import annotations

from typing import Mapping

from ..core import EmpireGraph, norm_edge
from ..gadgets.artifact import GadgetArtifact


class Pool:
    """Forced-monochromatic vertices handed out one at a time."""

    def __init__(self, name: str, vertices: list[int]) -> None:
        self.name = name
        self._free = list(vertices)
        self.used: list[int] = []

    def take(self) -> int:
        if not self._free:
            raise AssertionError(f"monochromatic pool {self.name} exhausted")
        v = self._free.pop(0)
        self.used.append(v)
        return v


class Assembly:
    """Growable empire graph; every empire holds at most ``r`` vertices."""

    def __init__(self, r: int) -> None:
        self.r = r
        self.empire_of: list[int] = []
        self.members: list[list[int]] = []
        self.edges: set[tuple[int, int]] = set()
        self.roles: dict[str, tuple[int, ...]] = {}

    def new_empire(self, tag: str | None = None) -> int:
        self.members.append([])
        e = len(self.members) - 1
        if tag is not None:
            self.tag_empire(tag, e)
        return e

    def tag_empire(self, tag: str, e: int) -> None:
        self.roles[f"empire:{tag}"] = (e,)

    def vertex(self, e: int, k: int) -> int:
        """The ``k``-th vertex of empire ``e``, created on demand."""
        while len(self.members[e]) <= k:
            if len(self.members[e]) >= self.r:
                raise AssertionError(f"empire {e} would exceed r={self.r}")
            v = len(self.empire_of)
            self.empire_of.append(e)
            self.members[e].append(v)
        return self.members[e][k]

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise AssertionError("self-loop in assembly")
        self.edges.add(norm_edge(u, v))

    def embed(self, art: GadgetArtifact, share: Mapping[int, int] | None = None) -> tuple[list[int], list[int]]:
        """Copy ``art`` in; gadget empires listed in ``share`` reuse existing empires.

        The ``k``-th vertex of a shared gadget empire becomes the ``k``-th
        vertex of its target.  Returns the vertex and empire maps.
        """
        share = dict(share or {})
        g = art.graph
        emap = [share[e] if e in share else self.new_empire() for e in range(g.num_empires)]
        vmap = [0] * g.num_vertices
        for e, mem in enumerate(g.members):
            for k, x in enumerate(mem):
                vmap[x] = self.vertex(emap[e], k)
        for a, b in g.edges:
            self.add_edge(vmap[a], vmap[b])
        return vmap, emap

    def fill(self) -> None:
        """Top every empire up to exactly ``r`` vertices with isolated ones."""
        for e in range(len(self.members)):
            self.vertex(e, self.r - 1)

    def build(self) -> GadgetArtifact:
        self.fill()
        g = EmpireGraph.build(len(self.empire_of), self.edges, self.empire_of, self.r, strict_size=True)
        return GadgetArtifact(g, dict(self.roles))
