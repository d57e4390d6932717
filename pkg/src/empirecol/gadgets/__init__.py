from .artifact import GadgetArtifact
from .clique import build_B, build_B_minus, build_B_plus, clique_paths, minus_pairs
from .connector import (
    DegreeTable,
    build_A,
    build_E,
    connector,
    degree_distribution,
    euler_tour,
    expected_degree_table,
    in_range,
    isolated_count,
    linearize,
    printed_degree_table,
    printed_isolated_count,
)
from .planar import SearchTimeout, build_D, check_D, delete_empire, planar_decompose_K, thickness_lower
from .walecki import HamiltonianDecomposition, walecki

__all__ = [
    "DegreeTable",
    "GadgetArtifact",
    "HamiltonianDecomposition",
    "SearchTimeout",
    "build_A",
    "build_B",
    "build_B_minus",
    "build_B_plus",
    "build_D",
    "build_E",
    "check_D",
    "clique_paths",
    "connector",
    "degree_distribution",
    "delete_empire",
    "euler_tour",
    "expected_degree_table",
    "in_range",
    "isolated_count",
    "linearize",
    "minus_pairs",
    "planar_decompose_K",
    "printed_degree_table",
    "printed_isolated_count",
    "thickness_lower",
    "walecki",
]
