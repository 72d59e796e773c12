"""Local graph clustering toolkit.

In-memory and disk-backed graphs behind one neighborhood-query interface,
approximate personalized PageRank push with sweep cuts for local clustering,
spectral clustering, block-model generators, and text graph formats.
"""

from .cluster import (
    DEFAULT_ALPHA,
    PagerankPair,
    SweepResult,
    acl_cluster_result,
    approximate_pagerank,
    local_cluster,
    local_cluster_acl,
    spectral_cluster,
    sweep_set,
)
from .diskgraph import DiskGraph, open_disk_graph
from .errors import (
    DuplicateEdgeError,
    EigensolverError,
    GraphError,
    ParseError,
    UnknownVertexError,
    UnsortedNodeIdsError,
)
from .generators import SbmSpec, erdos_renyi, sbm
from .graph import (
    Graph,
    LocalGraph,
    conductance,
    cut_weight,
    graph_from_edges,
    local_conductance,
    normalized_laplacian,
    volume,
)
from .graphio import (
    adjacencylist_to_edgelist,
    edgelist_to_adjacencylist,
    load_adjacencylist,
    load_edgelist,
    save_adjacencylist,
    save_edgelist,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ALPHA",
    "DiskGraph",
    "DuplicateEdgeError",
    "EigensolverError",
    "Graph",
    "GraphError",
    "LocalGraph",
    "PagerankPair",
    "ParseError",
    "SbmSpec",
    "SweepResult",
    "UnknownVertexError",
    "UnsortedNodeIdsError",
    "acl_cluster_result",
    "adjacencylist_to_edgelist",
    "approximate_pagerank",
    "conductance",
    "cut_weight",
    "edgelist_to_adjacencylist",
    "erdos_renyi",
    "graph_from_edges",
    "load_adjacencylist",
    "load_edgelist",
    "local_cluster",
    "local_cluster_acl",
    "local_conductance",
    "normalized_laplacian",
    "open_disk_graph",
    "save_adjacencylist",
    "save_edgelist",
    "sbm",
    "spectral_cluster",
    "sweep_set",
    "volume",
]
