from __future__ import annotations

from typing import Sequence

from ..cnf import CnfFormula
from ..core import Colouring, EmpireGraph, ReducedGraph, reduce


def colour_var(e: int, c: int, s: int) -> int:
    """DIMACS variable meaning "empire ``e`` has colour ``c``"."""
    return e * s + c + 1


def empire_to_cnf(g: EmpireGraph | ReducedGraph, s: int) -> CnfFormula:
    """Direct encoding: one colour per empire, different colours across reduced edges."""
    if s < 1:
        raise ValueError("s must be positive")
    rg = g if isinstance(g, ReducedGraph) else reduce(g)
    clauses: list[tuple[int, ...]] = []
    for e in range(rg.num_empires):
        clauses.append(tuple(colour_var(e, c, s) for c in range(s)))
        for a in range(s):
            for b in range(a + 1, s):
                clauses.append((-colour_var(e, a, s), -colour_var(e, b, s)))
    for u, v in sorted(rg.adjacency):
        for c in range(s):
            clauses.append((-colour_var(u, c, s), -colour_var(v, c, s)))
    return CnfFormula(rg.num_empires * s, tuple(clauses))


def decode_colouring(assignment: Sequence[bool], num_empires: int, s: int) -> Colouring:
    out = []
    for e in range(num_empires):
        on = [c for c in range(s) if assignment[colour_var(e, c, s) - 1]]
        if len(on) != 1:
            raise ValueError(f"empire {e} has {len(on)} colours in the model")
        out.append(on[0])
    return Colouring(tuple(out), s)
