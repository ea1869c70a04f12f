"""Exact pendant tree-connectivity and product-network tree constructions."""

from .graph import (
    CopySubgraph,
    Graph,
    GraphError,
    cartesian_product,
    copy_subgraph,
    label,
    min_degree,
)
from .families import family, parse_family
from .flow import disjoint_paths, fan, local_connectivity, vertex_connectivity
from .steiner import (
    Packing,
    PendantTree,
    TerminalSet,
    Verdict,
    fan_tree,
    prune_to_core,
    verify_packing,
    verify_pendant_tree,
)
from .search import (
    Budget,
    LocalResult,
    GlobalResult,
    local_pendant_connectivity,
    pendant_tree_connectivity,
)

__all__ = [
    "Budget",
    "CopySubgraph",
    "GlobalResult",
    "Graph",
    "GraphError",
    "LocalResult",
    "Packing",
    "PendantTree",
    "TerminalSet",
    "Verdict",
    "cartesian_product",
    "copy_subgraph",
    "disjoint_paths",
    "fan",
    "fan_tree",
    "family",
    "label",
    "local_connectivity",
    "local_pendant_connectivity",
    "min_degree",
    "parse_family",
    "pendant_tree_connectivity",
    "prune_to_core",
    "vertex_connectivity",
    "verify_packing",
    "verify_pendant_tree",
]
