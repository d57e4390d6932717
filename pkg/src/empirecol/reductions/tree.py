"""Reductions whose outputs are trees, and the shared formula-graph expansion."""

from __future__ import annotations

from typing import Callable

from ..cnf import CnfFormula
from ..core import EmpireGraph
from ..gadgets.artifact import GadgetArtifact
from ..gadgets.clique import build_B, build_B_minus, build_B_plus
from .assembly import Assembly
from .formula import FormulaGraph
from .lforest import clause_widget

# realise a clique on the given empires; ``shared`` empires already exist
CliqueFn = Callable[[Assembly, list[int | None]], list[int]]
# force a fresh empire to copy a shared one; returns the fresh empire's free vertex
ConstrainFn = Callable[[Assembly, int, int], int]


def sat3_to_tree(phi: CnfFormula) -> GadgetArtifact:
    """3-SAT instance to a 2-empire tree that is (3, 2)-colourable iff ``phi`` is satisfiable."""
    if phi.k > 3:
        raise ValueError("clauses must have at most 3 literals")
    phi = phi.padded(3)
    asm = Assembly(2)
    _, emap = asm.embed(build_B_plus(2, 2, 0))
    t, f, x = emap
    for tag, e in (("T", t), ("F", f), ("X", x)):
        asm.tag_empire(tag, e)
    lit_empire: dict[int, int] = {}
    for v in range(1, phi.num_vars + 1):
        _, em = asm.embed(build_B(2, 2), share={2: x})
        lit_empire[v], lit_empire[-v] = em[0], em[1]
        asm.tag_empire(f"a{v}", em[0])
        asm.tag_empire(f"na{v}", em[1])

    for i, clause in enumerate(phi.clauses, start=1):
        ends = [asm.vertex(lit_empire[lit], 0) for lit in clause]
        clause_widget(asm, i, asm.vertex(t, 0), asm.vertex(t, 1), ends)
    return asm.build()


def pad_empires(g: EmpireGraph | GadgetArtifact, r_from: int, r_to: int) -> EmpireGraph | GadgetArtifact:
    """Grow every empire to ``r_to`` vertices by hanging leaves on its first vertex.

    Leaves join their own empire, so the reduced graph and every tree or
    forest shape are unchanged.
    """
    art = g if isinstance(g, GadgetArtifact) else None
    graph = art.graph if art else g
    if r_to <= r_from:
        raise ValueError("r_to must exceed r_from")
    if graph.r != r_from:
        raise ValueError(f"graph has r={graph.r}, expected {r_from}")
    empire_of = list(graph.empire_of)
    edges = set(graph.edges)
    for e, mem in enumerate(graph.members):
        for _ in range(r_to - len(mem)):
            edges.add((mem[0], len(empire_of)))
            empire_of.append(e)
    out = EmpireGraph.build(len(empire_of), edges, empire_of, r_to, strict_size=graph.strict_size)
    return GadgetArtifact(out, dict(art.roles)) if art else out


def expand_formula_graph(fg: FormulaGraph, r: int, clique: CliqueFn, constrain: ConstrainFn) -> GadgetArtifact:
    """Replace the cliques and literal edges of ``fg`` by gadgets.

    ``clique`` realises a complete reduced graph on a list of empires (``None``
    entries are created by it); ``constrain`` forces a fresh empire to take
    the colour of a shared one and hands back that empire's free vertex.
    """
    s = fg.s
    asm = Assembly(r)
    truth = clique(asm, [None] * s)
    t = truth[0]
    empire_of_fg: dict[int, int] = {}
    for x, e in zip(fg.truth, truth):
        empire_of_fg[x] = e
    asm.tag_empire("T", truth[0])
    asm.tag_empire("F", truth[1])
    for j in range(1, s - 1):
        asm.tag_empire(f"X{j}", truth[1 + j])

    for v in range(1, fg.num_vars + 1):
        a, na = asm.new_empire(f"a{v}"), asm.new_empire(f"na{v}")
        empire_of_fg[fg.literal(v)], empire_of_fg[fg.literal(-v)] = a, na
        for e in (a, na):
            centre = asm.vertex(e, 0)
            for k in range(1, r):
                asm.add_edge(centre, asm.vertex(e, k))
        asm.add_edge(asm.vertex(a, 0), asm.vertex(na, 0))
        asm.add_edge(asm.vertex(a, 0), asm.vertex(truth[2], 0))
        for name, e, first in ((f"a{v}", a, 2), (f"na{v}", na, 1)):
            for i in range(first, s - 1):
                w = asm.new_empire(f"W{i}_{name}")
                free = constrain(asm, w, truth[1 + i])
                asm.add_edge(asm.vertex(e, 0), free)

    for i in range(fg.num_clauses):
        cs = clique(asm, [t] + [None] * (s - 1))[1:]
        for j, (c, x) in enumerate(zip(cs, fg.clause(i)), start=1):
            asm.tag_empire(f"c{i + 1}_{j}", c)
            b = asm.new_empire(f"b{i + 1}_{j}")
            free = constrain(asm, b, c)
            asm.add_edge(free, asm.vertex(empire_of_fg[fg.outside(x, i)], 0))
    return asm.build()


def fg_to_tree(fg: FormulaGraph, r: int, s: int | None = None) -> GadgetArtifact:
    """A single tree that is (s, r)-colourable iff ``fg`` is s-colourable."""
    s = fg.s if s is None else s
    if s != fg.s:
        raise ValueError(f"formula graph has palette {fg.s}, not {s}")
    if r < 3 or not 3 < s < 2 * r:
        raise ValueError(f"need r >= 3 and 3 < s < 2r, got r={r}, s={s}")
    if fg.k != s - 1:
        raise ValueError("formula graph must have clause width s - 1")
    minus = build_B_minus(r, s)
    u_lab, v_lab = minus.empire("u"), minus.empire("v")
    (iso,) = minus.role("isolated")

    def clique(asm: Assembly, empires: list[int | None]) -> list[int]:
        if all(e is None for e in empires):
            _, emap = asm.embed(build_B_plus(r, s - 1, 0))
            return emap
        share = {k: e for k, e in enumerate(empires) if e is not None}
        _, emap = asm.embed(build_B(r, s - 1), share=share)
        return emap

    def constrain(asm: Assembly, fresh: int, shared: int) -> int:
        vmap, _ = asm.embed(minus, share={u_lab: fresh, v_lab: shared})
        return vmap[iso]

    return expand_formula_graph(fg, r, clique, constrain)
