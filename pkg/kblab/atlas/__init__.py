"""
Atlas Module

Canonical forms, isomorphism testing and exhaustive generation of connected
graphs up to isomorphism, with an optional SQLite cache of generated levels.

Public API:
- canonical_form, are_isomorphic, find_isomorphism, isomorphism_classes
- generate_connected_graphs, generate_twin_free_connected, labeled_connected_oracle

Example usage:
    from kblab.atlas import generate_twin_free_connected
    print(sum(1 for _ in generate_twin_free_connected(6)))  # 61
"""

from .canonical import (
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    find_isomorphism,
    graph_invariant,
    isomorphism_classes,
)
from .generate import (
    connected_graphs,
    generate_connected_graphs,
    generate_connected_up_to,
    generate_twin_free_connected,
    labeled_connected_oracle,
)

__all__ = [
    "CanonicalForm",
    "canonical_form",
    "are_isomorphic",
    "find_isomorphism",
    "graph_invariant",
    "isomorphism_classes",
    "connected_graphs",
    "generate_connected_graphs",
    "generate_twin_free_connected",
    "generate_connected_up_to",
    "labeled_connected_oracle",
]
