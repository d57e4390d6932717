"""(s, k)-formula graphs and the reduction from k-SAT to their s-colouring.

Vertex order: T = 0, F = 1, X^j = 1 + j for j = 1..s-2, then the literal
pairs (a_i, ~a_i) at ``s + 2(i-1)`` and ``s + 2(i-1) + 1``, then clause
groups of ``s - 1`` vertices each.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..cnf import CnfFormula
from ..core import EmpireGraph, norm_edge
from ..gadgets.artifact import GadgetArtifact


@dataclass(frozen=True)
class FormulaGraph:
    graph: EmpireGraph
    s: int
    k: int
    num_vars: int
    num_clauses: int

    def __post_init__(self) -> None:
        expected = self.s + 2 * self.num_vars + self.num_clauses * (self.s - 1)
        if self.graph.num_vertices != expected:
            raise ValueError(f"formula graph should have {expected} vertices")

    T = 0
    F = 1

    def X(self, j: int) -> int:
        return 1 + j

    def literal(self, lit: int) -> int:
        """Vertex of a signed literal."""
        return self.s + 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)

    def clause(self, i: int) -> list[int]:
        """The ``s - 1`` vertices c^{i,1..s-1} of clause ``i`` (0-based)."""
        base = self.s + 2 * self.num_vars + i * (self.s - 1)
        return list(range(base, base + self.s - 1))

    @cached_property
    def truth(self) -> list[int]:
        return list(range(self.s))

    def outside(self, c: int, i: int) -> int:
        """The neighbour of clause vertex ``c`` that is neither T nor in its group."""
        group = set(self.clause(i)) | {self.T}
        (y,) = [w for w in self.graph.neighbours[c] if w not in group]
        return y

    def check(self) -> list[str]:
        """Deviations from the FG(s, k) template; empty when the graph fits."""
        g, s = self.graph, self.s
        bad = []

        def has(a: int, b: int) -> bool:
            return norm_edge(a, b) in g.edges

        t = self.truth
        if not all(has(a, b) for i, a in enumerate(t) for b in t[i + 1:]):
            bad.append("truth vertices do not span a clique")
        for v in range(1, self.num_vars + 1):
            a, na = self.literal(v), self.literal(-v)
            if not has(a, na) or not all(has(x, self.X(j)) for x in (a, na) for j in range(1, s - 1)):
                bad.append(f"variable {v} is not wired to its X vertices")
        lits = set(range(s, s + 2 * self.num_vars))
        for i in range(self.num_clauses):
            grp = [self.T] + self.clause(i)
            if not all(has(a, b) for x, a in enumerate(grp) for b in grp[x + 1:]):
                bad.append(f"clause {i} is not a clique with T")
            for j, c in enumerate(self.clause(i), start=1):
                out = [w for w in g.neighbours[c] if w not in grp]
                if j <= self.k and (len(out) != 1 or out[0] not in lits):
                    bad.append(f"clause vertex {c} lacks a single literal edge")
                if j > self.k and out != [self.F]:
                    bad.append(f"clause vertex {c} is not tied to F")
        return bad

    def to_artifact(self) -> GadgetArtifact:
        roles = {"T": (self.T,), "F": (self.F,)}
        for j in range(1, self.s - 1):
            roles[f"X{j}"] = (self.X(j),)
        for v in range(1, self.num_vars + 1):
            roles[f"a{v}"] = (self.literal(v), self.literal(-v))
        for i in range(self.num_clauses):
            roles[f"c{i + 1}"] = tuple(self.clause(i))
        return GadgetArtifact(self.graph, roles)

    @classmethod
    def from_artifact(cls, a: GadgetArtifact) -> FormulaGraph:
        s = 2 + sum(1 for tag in a.roles if tag.startswith("X") and tag[1:].isdigit())
        n = sum(1 for tag in a.roles if tag.startswith("a") and tag[1:].isdigit())
        m = sum(1 for tag in a.roles if tag.startswith("c") and tag[1:].isdigit())
        k = s - 1
        if m:
            k = sum(1 for c in a.roles["c1"] if cls.F not in a.graph.neighbours[c])
        fg = cls(a.graph, s, k, n, m)
        bad = fg.check()
        if bad:
            raise ValueError(f"not a formula graph: {bad[0]}")
        return fg


def ksat_to_formula_graph(phi: CnfFormula, s: int, k: int | None = None) -> FormulaGraph:
    """The (s, k)-formula graph of ``phi``; s-colourable iff ``phi`` is satisfiable.

    Clauses narrower than ``k`` (default ``s - 1``) are padded by repeating
    their last literal.
    """
    k = s - 1 if k is None else k
    if s < 3:
        raise ValueError("s must be at least 3")
    if k < 1 or k >= s:
        raise ValueError(f"clause width k={k} must satisfy 1 <= k < s={s}")
    if phi.k > k:
        raise ValueError(f"clause wider than k={k}")
    phi = phi.padded(k)
    n, m = phi.num_vars, phi.num_clauses
    size = s + 2 * n + m * (s - 1)
    edges = [(a, b) for a in range(s) for b in range(a + 1, s)]
    for v in range(n):
        a, na = s + 2 * v, s + 2 * v + 1
        edges.append((a, na))
        edges += [(x, 2 + j) for x in (a, na) for j in range(s - 2)]
    for i, clause in enumerate(phi.clauses):
        grp = [0] + [s + 2 * n + i * (s - 1) + j for j in range(s - 1)]
        edges += [(a, b) for x, a in enumerate(grp) for b in grp[x + 1:]]
        for j, c in enumerate(grp[1:]):
            if j < k:
                lit = clause[j]
                edges.append((c, s + 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)))
            else:
                edges.append((c, 1))
    g = EmpireGraph.plain(size, edges)
    return FormulaGraph(g, s, k, n, m)
