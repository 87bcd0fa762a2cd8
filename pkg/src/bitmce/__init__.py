"""Bit-parallel maximal clique enumeration with greedy static-order pivoting."""
from .bitset import BitSet
from .enumeration import (
    STRATEGY_NAMES,
    CliqueCollector,
    RunStats,
    TimeLimitExceeded,
    enumerate_cliques,
    maximal_cliques,
    run_bk_ordering,
)
from .graph import (
    BitGraph,
    GraphParseError,
    graph_apply_permutation,
    graph_from_dimacs,
    graph_from_edge_list,
    graph_moon_moser,
    graph_random,
)
from .oracle import oracle_enumerate
from .ordering import VertexOrdering, ordering_degeneracy, ordering_max_degree_first, prepare

__all__ = [
    "BitGraph", "BitSet", "CliqueCollector", "GraphParseError", "RunStats",
    "STRATEGY_NAMES", "TimeLimitExceeded", "VertexOrdering", "enumerate_cliques",
    "graph_apply_permutation", "graph_from_dimacs", "graph_from_edge_list",
    "graph_moon_moser", "graph_random", "maximal_cliques", "oracle_enumerate",
    "ordering_degeneracy", "ordering_max_degree_first", "prepare", "run_bk_ordering",
]
