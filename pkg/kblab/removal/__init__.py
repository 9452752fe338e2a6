"""
Removal Module

Classification of degree-two KB-vertices, construction of the host H' whose
biclique graph is KB(H) - q, and the iterative degree-two strip analysis.

Public API:
- classify_degree2, construct_h_prime, remove_degree2
- analyze_not_biclique

Example usage:
    from kblab.core import from_edge_list
    from kblab.removal import remove_degree2
    h = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)])
    print(remove_degree2(h, 0).verified)  # True
"""

from .analyze import AnalysisResult, ChainStep, analyze_not_biclique, remove_all_degree2_chain
from .degree2 import (
    Family1Plan,
    Family2Plan,
    FallbackPlan,
    RemovalResult,
    classify_degree2,
    construct_h_prime,
    remove_degree2,
    validate_plan,
)

__all__ = [
    "Family1Plan",
    "Family2Plan",
    "FallbackPlan",
    "RemovalResult",
    "classify_degree2",
    "construct_h_prime",
    "remove_degree2",
    "validate_plan",
    "ChainStep",
    "AnalysisResult",
    "analyze_not_biclique",
    "remove_all_degree2_chain",
]
