from .dpll import DpllResult, SatStatus, brute_force_sat, dpll_solve
from .encode import colour_var, decode_colouring, empire_to_cnf
from .enumerate import enumerate_colourings, iter_colourings
from .exact import SolverResult, SolverStats, Status, exact_empire_colour

__all__ = [
    "DpllResult",
    "SatStatus",
    "SolverResult",
    "SolverStats",
    "Status",
    "brute_force_sat",
    "colour_var",
    "decode_colouring",
    "dpll_solve",
    "empire_to_cnf",
    "enumerate_colourings",
    "exact_empire_colour",
    "iter_colourings",
]
