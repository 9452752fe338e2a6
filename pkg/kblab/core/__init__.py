"""
Graph Core Module

Immutable graph value type, standard constructors, induced-subgraph
operations and external formats (graph6, edge list, DOT).

Public API:
- Graph, from_edge_list, induced_subgraph, remove_vertex
- cycle, complete, complete_bipartite, star, circulant, path
- parse_graph6, to_graph6, parse_edge_list, to_dot

Example usage:
    from kblab.core import cycle, to_graph6
    print(to_graph6(cycle(7)))
"""

from .formats import parse_edge_list, parse_graph6, to_dot, to_edge_list, to_graph6
from .graph import (
    Graph,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    from_edge_list,
    induced_subgraph,
    is_connected,
    is_independent_set,
    path,
    remove_vertex,
    star,
)

__all__ = [
    "Graph",
    "from_edge_list",
    "induced_subgraph",
    "remove_vertex",
    "is_connected",
    "is_independent_set",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "circulant",
    "path",
    "parse_graph6",
    "to_graph6",
    "parse_edge_list",
    "to_edge_list",
    "to_dot",
]
