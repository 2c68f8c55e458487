"""Graph representation, I/O, structural primitives, families and enumeration."""

from .bits import VertexSet, iter_bits, mask_of, to_list
from .enumerate import FILTERS, enumerate_labeled_graphs, enumerate_unicyclic
from .families import family
from .formats import emit_graph, parse_graph
from .graph import MAX_VERTICES, Graph, c_minor, induced_subgraph, neighborhoods
from .structure import (
    INF,
    BlockDecomposition,
    DistanceLayers,
    blocks,
    distance_layers,
    girth,
    girth_and_cycles,
    has_cycle_of_length,
    is_bipartite,
)

__all__ = [
    "FILTERS",
    "INF",
    "MAX_VERTICES",
    "BlockDecomposition",
    "DistanceLayers",
    "Graph",
    "VertexSet",
    "blocks",
    "c_minor",
    "distance_layers",
    "emit_graph",
    "enumerate_labeled_graphs",
    "enumerate_unicyclic",
    "family",
    "girth",
    "girth_and_cycles",
    "has_cycle_of_length",
    "induced_subgraph",
    "is_bipartite",
    "iter_bits",
    "mask_of",
    "neighborhoods",
    "parse_graph",
    "to_list",
]
