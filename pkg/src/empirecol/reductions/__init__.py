from .assembly import Assembly, Pool
from .formula import FormulaGraph, ksat_to_formula_graph
from .lforest import fg_to_lforest, sat3_to_lforest
from .planar import fg_to_planar, layered_clique
from .tree import expand_formula_graph, fg_to_tree, pad_empires, sat3_to_tree

__all__ = [
    "Assembly",
    "FormulaGraph",
    "Pool",
    "expand_formula_graph",
    "fg_to_lforest",
    "fg_to_planar",
    "fg_to_tree",
    "ksat_to_formula_graph",
    "layered_clique",
    "pad_empires",
    "sat3_to_lforest",
    "sat3_to_tree",
]
