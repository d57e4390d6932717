from __future__ import annotations

from ..core import EmpireGraph
from ..gadgets.artifact import GadgetArtifact
from ..gadgets.planar import build_D, d_in_range, planar_decompose_K
from .assembly import Assembly
from .formula import FormulaGraph
from .tree import expand_formula_graph


def layered_clique(n: int, r: int) -> GadgetArtifact:
    """K_n split into ``r`` planar layers; layer ``i`` uses vertex ``i`` of every empire."""
    layers = planar_decompose_K(n, r)
    edges = [(i * n + a, i * n + b) for i, layer in enumerate(layers) for a, b in sorted(layer)]
    g = EmpireGraph.build(r * n, edges, [x % n for x in range(r * n)], r, strict_size=True)
    return GadgetArtifact(g, {f"layer{i}": tuple(range(i * n, (i + 1) * n)) for i in range(r)})


def fg_to_planar(fg: FormulaGraph, r: int, s: int | None = None) -> GadgetArtifact:
    """An empire graph with planar components, (s, r)-colourable iff ``fg`` is s-colourable."""
    s = fg.s if s is None else s
    if s != fg.s:
        raise ValueError(f"formula graph has palette {fg.s}, not {s}")
    if not (r >= 2 and 2 * r <= s and d_in_range(r, s)):
        raise ValueError(f"need r >= 2 and 2r <= s < 6r - 3 - 2[r == 2], got r={r}, s={s}")
    if fg.k != s - 1:
        raise ValueError("formula graph must have clause width s - 1")
    k_s = layered_clique(s, r)
    # the shared empire plays u, the fresh one v, so the isolated vertex is fresh
    d = build_D(r, s, 0, 1)
    (iso,) = d.role("isolated")

    def clique(asm: Assembly, empires: list[int | None]) -> list[int]:
        share = {k: e for k, e in enumerate(empires) if e is not None}
        _, emap = asm.embed(k_s, share=share)
        return emap

    def constrain(asm: Assembly, fresh: int, shared: int) -> int:
        vmap, _ = asm.embed(d, share={0: shared, 1: fresh})
        return vmap[iso]

    return expand_formula_graph(fg, r, clique, constrain)
