"""Empire colouring: gadgets, hardness reductions, and exact solvers."""

from .cnf import CnfFormula
from .core import (
    Colouring,
    EmpireGraph,
    InfeasibilityWitness,
    ReducedGraph,
    WitnessKind,
    reduce,
    verify_colouring,
)
from .sparse import is_sparse, max_subgraph_avg_degree, sparse_colour

__all__ = [
    "CnfFormula",
    "Colouring",
    "EmpireGraph",
    "InfeasibilityWitness",
    "ReducedGraph",
    "WitnessKind",
    "is_sparse",
    "max_subgraph_avg_degree",
    "reduce",
    "sparse_colour",
    "verify_colouring",
]
