"""Certified Hamiltonian-cycle solving on split graphs.

Polynomial constructive solvers for split graphs without induced 3- or
4-leaf stars (with short-cycle certificates of infeasibility), the
reduction producing 5-star-free split instances from bipartite
max-degree-3 sources, and an exact oracle plus seeded generators forming
the verification harness.
"""

from .graph import (
    Graph,
    HamCycle,
    OrientedPath,
    graph_from_edges,
    induced_subgraph,
    validate_ham_cycle,
    find_induced_star,
)
from .split import (
    SplitPartition,
    NotSplit,
    NoCycleCertificate,
    recognize_split,
    upgrade_to_maximum_clique,
    is_two_connected,
    star_free_level,
)
from .paths import (
    DegreeTwoSubgraph,
    ShortCycleWitness,
    PathSystem,
    build_degree_two_subgraph,
    find_short_cycle,
    assemble_paths,
    hc_delta2,
)
from .solver import SolveOutcome, solve, hc_delta1, hc_claw_free
from .delta3 import Delta3Context, prepare_context, construct_cycle, extend_to_hamiltonian
from .oracle import OracleBudget, OracleResult, oracle_solve, oracle_count
from .reduction import (
    BipartiteInstance,
    ReductionOutput,
    bipartite_from_graph,
    reduce_to_split,
    verify_k15_free,
    map_solution_back,
)
from .generators import GenSpec, GeneratedInstance, generate, enumerate_small_split

__version__ = "0.1.0"

__all__ = [
    "Graph", "HamCycle", "OrientedPath", "graph_from_edges", "induced_subgraph",
    "validate_ham_cycle", "find_induced_star",
    "SplitPartition", "NotSplit", "NoCycleCertificate", "recognize_split",
    "upgrade_to_maximum_clique", "is_two_connected", "star_free_level",
    "DegreeTwoSubgraph", "ShortCycleWitness", "PathSystem",
    "build_degree_two_subgraph", "find_short_cycle", "assemble_paths", "hc_delta2",
    "SolveOutcome", "solve", "hc_delta1", "hc_claw_free",
    "Delta3Context", "prepare_context", "construct_cycle", "extend_to_hamiltonian",
    "OracleBudget", "OracleResult", "oracle_solve", "oracle_count",
    "BipartiteInstance", "ReductionOutput", "bipartite_from_graph",
    "reduce_to_split", "verify_k15_free", "map_solution_back",
    "GenSpec", "GeneratedInstance", "generate", "enumerate_small_split",
]
