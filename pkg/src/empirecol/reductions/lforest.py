"""Reductions whose outputs are linear forests (disjoint unions of paths)."""

from __future__ import annotations

from ..cnf import CnfFormula
from ..gadgets.artifact import GadgetArtifact
from ..gadgets.clique import build_B
from ..gadgets.connector import build_A, in_range
from .assembly import Assembly, Pool
from .formula import FormulaGraph


def _connector_pool(asm: Assembly, r: int, s: int, m: int, name: str) -> Pool:
    """Embed A_{r,s,m} and return its monochromatic vertices as a pool."""
    art = build_A(r, s, m)
    vmap, emap = asm.embed(art)
    asm.roles[f"empire:{name}"] = (emap[art.empire("plug")],)
    return Pool(name, [vmap[z] for z in art.role("Z")])


# Reduced-level clause widget: T-c1, T-c2, c1-c2, c1-c3, c3-c4, c3-c5, c4-c5
# and c4, c5, c2 facing the three literals.  Two paths and three pendant edges.
def clause_widget(asm: Assembly, idx: int, t1: int, t2: int, lit_ends: list[int]) -> None:
    c = [asm.new_empire(f"c{idx}_{j}") for j in range(1, 6)]

    def v(j: int, k: int) -> int:
        return asm.vertex(c[j - 1], k)

    path1 = [t1, v(1, 0), v(3, 0), v(4, 0), v(5, 0), v(3, 1)]
    path2 = [t2, v(2, 0), v(1, 1)]
    for p in (path1, path2):
        for a, b in zip(p, p[1:]):
            asm.add_edge(a, b)
    for end, lit in zip((v(4, 1), v(5, 1), v(2, 1)), lit_ends):
        asm.add_edge(end, lit)


def sat3_to_lforest(phi: CnfFormula, r: int) -> GadgetArtifact:
    """3-SAT instance to a linear forest that is (3, r)-colourable iff ``phi`` is satisfiable."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if phi.k > 3:
        raise ValueError("clauses must have at most 3 literals")
    phi = phi.padded(3)
    n, m = phi.num_vars, phi.num_clauses
    occ = phi.occurrences()
    asm = Assembly(r)

    # truth part: B_{2,2} on T, F, X with T and X linearised
    b = build_B(2, 2).graph
    incident = [sum(1 for x, y in b.edges if e in (b.empire_of[x], b.empire_of[y])) for e in range(3)]
    t_pool = _connector_pool(asm, r, 3, incident[0] + 2 * m, "T")
    f = asm.new_empire("F")
    x_pool = _connector_pool(asm, r, 3, incident[2] + n, "X")
    seen: dict[int, int] = {}

    def end(x: int) -> int:
        e = b.empire_of[x]
        if e == 0:
            return t_pool.take()
        if e == 2:
            return x_pool.take()
        seen.setdefault(x, len(seen))
        return asm.vertex(f, seen[x])

    for x, y in b.sorted_edges():
        asm.add_edge(end(x), end(y))

    lit_pool: dict[int, Pool] = {}
    for v in range(1, n + 1):
        lit_pool[v] = _connector_pool(asm, r, 3, occ[v] + 2, f"a{v}")
        lit_pool[-v] = _connector_pool(asm, r, 3, occ[-v] + 2, f"na{v}")
        z = x_pool.take()
        asm.add_edge(z, lit_pool[v].take())
        asm.add_edge(z, lit_pool[-v].take())
        asm.add_edge(lit_pool[v].take(), lit_pool[-v].take())

    for i, clause in enumerate(phi.clauses, start=1):
        t1, t2 = t_pool.take(), t_pool.take()
        clause_widget(asm, i, t1, t2, [lit_pool[lit].take() for lit in clause])
    return asm.build()


def fg_to_lforest(fg: FormulaGraph, r: int) -> GadgetArtifact:
    """Linearise every vertex of ``fg``; each fg edge joins two monochromatic vertices."""
    s = fg.s
    if r < 3 or s <= 3 or not in_range(r, s):
        raise ValueError(f"need r >= 3 and 3 < s < 2r - sqrt(2r + 1/4) + 3/2, got r={r}, s={s}")
    g = fg.graph
    asm = Assembly(r)
    names = _fg_names(fg)
    pools = [_connector_pool(asm, r, s, max(g.degree(x), 1), names[x]) for x in range(g.num_vertices)]
    for x, y in g.sorted_edges():
        asm.add_edge(pools[x].take(), pools[y].take())
    return asm.build()


def _fg_names(fg: FormulaGraph) -> list[str]:
    names = ["T", "F"] + [f"X{j}" for j in range(1, fg.s - 1)]
    for v in range(1, fg.num_vars + 1):
        names += [f"a{v}", f"na{v}"]
    for i in range(1, fg.num_clauses + 1):
        names += [f"c{i}_{j}" for j in range(1, fg.s)]
    return names
