"""A small complete DPLL solver with unit propagation and pure-literal elimination."""

from __future__ import annotations

import enum
import sys
import time
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from ..cnf import CnfFormula

Clauses = list[list[int]]


class SatStatus(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    TIMEOUT = "Timeout"


@dataclass(frozen=True)
class DpllResult:
    status: SatStatus
    assignment: Optional[tuple[bool, ...]]
    nodes: int
    seconds: float


class _OutOfBudget(Exception):
    pass


def _assign(clauses: Clauses, lit: int) -> Clauses | None:
    """Make ``lit`` true; ``None`` on an empty clause."""
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            c = [x for x in c if x != -lit]
            if not c:
                return None
        out.append(c)
    return out


def dpll_solve(phi: CnfFormula, node_budget: int = 10_000_000, time_budget: float = 60.0) -> DpllResult:
    """Decide ``phi``; a returned assignment is checked against every clause.

    Branches on the variable with most occurrences (smallest id on ties),
    trying false first.
    """
    start = time.monotonic()
    nodes = 0
    value: dict[int, bool] = {}

    def rec(clauses: Clauses) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget or (nodes & 255 == 0 and time.monotonic() - start > time_budget):
            raise _OutOfBudget
        trail: list[int] = []
        while True:
            unit = next((c[0] for c in clauses if len(c) == 1), None)
            if unit is None:
                lits = {x for c in clauses for x in c}
                pure = sorted((x for x in lits if -x not in lits), key=abs)
                if not pure:
                    break
                unit = pure[0]
            value[abs(unit)] = unit > 0
            trail.append(abs(unit))
            clauses = _assign(clauses, unit)
            if clauses is None:
                break
        if clauses is not None:
            if not clauses:
                return True
            occ = Counter(abs(x) for c in clauses for x in c)
            var = min(occ, key=lambda v: (-occ[v], v))
            for lit in (-var, var):
                value[var] = lit > 0
                nxt = _assign(clauses, lit)
                if nxt is not None and rec(nxt):
                    return True
            del value[var]
        for v in trail:
            del value[v]
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * phi.num_vars + 200))
    try:
        sat = rec([list(c) for c in phi.clauses])
    except _OutOfBudget:
        return DpllResult(SatStatus.TIMEOUT, None, nodes, time.monotonic() - start)
    finally:
        sys.setrecursionlimit(limit)
    elapsed = time.monotonic() - start
    if not sat:
        return DpllResult(SatStatus.UNSAT, None, nodes, elapsed)
    assignment = tuple(value.get(v, False) for v in range(1, phi.num_vars + 1))
    if not phi.satisfied_by(assignment):
        raise AssertionError("DPLL produced an assignment that violates the formula")
    return DpllResult(SatStatus.SAT, assignment, nodes, elapsed)


def brute_force_sat(phi: CnfFormula) -> bool:
    """Try all 2^n assignments; only for cross-checking tiny formulas."""
    if phi.num_vars > 20:
        raise ValueError("too many variables for exhaustive search")
    for mask in range(1 << phi.num_vars):
        if phi.satisfied_by([(mask >> i) & 1 == 1 for i in range(phi.num_vars)]):
            return True
    return False
