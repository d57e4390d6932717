"""Independent oracles and generators shared by the test modules."""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Sequence

import networkx as nx

from empirecol.cnf import CnfFormula
from empirecol.core import EmpireGraph, ReducedGraph


def to_nx(g: EmpireGraph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.num_vertices))
    out.add_edges_from(g.edges)
    return out


def reduced_nx(g: EmpireGraph) -> nx.Graph:
    """Contract empires with networkx, independently of ``reduce``."""
    out = nx.Graph()
    out.add_nodes_from(range(g.num_empires))
    out.add_edges_from((g.empire_of[u], g.empire_of[v]) for u, v in g.edges if g.empire_of[u] != g.empire_of[v])
    return out


def brute_colourable(n: int, edges: Iterable[Sequence[int]], s: int) -> bool:
    edges = list(edges)
    return any(all(c[u] != c[v] for u, v in edges) for c in itertools.product(range(s), repeat=n))


def brute_colourings(n: int, edges: Iterable[Sequence[int]], s: int) -> list[tuple[int, ...]]:
    edges = list(edges)
    return [c for c in itertools.product(range(s), repeat=n) if all(c[u] != c[v] for u, v in edges)]


def brute_sat(phi: CnfFormula) -> bool:
    for bits in itertools.product((False, True), repeat=phi.num_vars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in phi.clauses):
            return True
    return False


def random_graph(rng: random.Random, n: int, p: float) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def random_rg(rng: random.Random, n: int, p: float) -> ReducedGraph:
    return ReducedGraph.from_edges(n, random_graph(rng, n, p))


def random_empire_graph(rng: random.Random, k: int, r: int, p: float) -> EmpireGraph:
    n = k * r
    return EmpireGraph.build(n, random_graph(rng, n, p), [v // r for v in range(n)], r, strict_size=True)


def random_cnf(rng: random.Random, n: int, m: int, max_width: int = 3) -> CnfFormula:
    clauses = []
    for _ in range(m):
        width = rng.randint(1, min(max_width, n))
        vs = rng.sample(range(1, n + 1), width)
        clauses.append([v if rng.random() < 0.5 else -v for v in vs])
    return CnfFormula.of(n, clauses)


def all_clauses(n: int) -> CnfFormula:
    """Every full-width clause over ``n`` variables: unsatisfiable."""
    return CnfFormula.of(n, [[v if (mask >> (v - 1)) & 1 else -v for v in range(1, n + 1)] for mask in range(1 << n)])


def cnf_corpus(seed: int, size: int) -> list[CnfFormula]:
    """Mixed corpus of small CNFs (n <= 5, m <= 6, widths 1..3); about a third unsatisfiable."""
    rng = random.Random(seed)
    out: list[CnfFormula] = []
    unsat_goal = size // 3
    unsat = 0
    while len(out) < size:
        n, m = rng.randint(1, 5), rng.randint(1, 6)
        phi = random_cnf(rng, n, m)
        is_sat = brute_sat(phi)
        if not is_sat:
            unsat += 1
            out.append(phi)
        elif len(out) - unsat < size - unsat_goal:
            out.append(phi)
    return out
