"""Clique partitions of simple graphs and their set-family representations."""

from .decompose import (
    Clique,
    CliquePartition,
    GreedyDecomposition,
    GreedyStrategy,
    LEXICOGRAPHIC,
    Violation,
    erdos_partition,
    greedy_decomposition,
    quarter_square,
    seeded_strategy,
    validate_greedy,
    validate_partition,
)
from .graphs import (
    Edge,
    Graph,
    GraphParseError,
    canonical_form,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    degree,
    edge_bitmask,
    empty_graph,
    enumerate_labeled_graphs,
    graph,
    graph_from_bitmask,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    remove_edges,
    to_edge_list,
    to_graph6,
)
from .oracle import (
    BoundReport,
    BoundViolation,
    all_clique_partitions,
    check_lemma6,
    check_rs_bound,
    exhaustive_bound_check,
    min_clique_partition,
    min_distinct_representation,
)
from .represent import (
    DistinctnessReport,
    SetRepresentation,
    augment_to_distinct,
    distinctness,
    partition_from_representation,
    representation_from_partition,
    representations_equivalent,
    validate_representation,
)

__all__ = [
    "BoundReport",
    "BoundViolation",
    "Clique",
    "CliquePartition",
    "DistinctnessReport",
    "Edge",
    "Graph",
    "GraphParseError",
    "GreedyDecomposition",
    "GreedyStrategy",
    "LEXICOGRAPHIC",
    "SetRepresentation",
    "Violation",
    "all_clique_partitions",
    "augment_to_distinct",
    "canonical_form",
    "check_lemma6",
    "check_rs_bound",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "degree",
    "distinctness",
    "edge_bitmask",
    "empty_graph",
    "enumerate_labeled_graphs",
    "erdos_partition",
    "exhaustive_bound_check",
    "graph",
    "graph_from_bitmask",
    "greedy_decomposition",
    "induced_subgraph",
    "min_clique_partition",
    "min_distinct_representation",
    "parse_edge_list",
    "parse_graph6",
    "partition_from_representation",
    "path_graph",
    "quarter_square",
    "remove_edges",
    "representation_from_partition",
    "representations_equivalent",
    "seeded_strategy",
    "to_edge_list",
    "to_graph6",
    "validate_greedy",
    "validate_partition",
    "validate_representation",
]
