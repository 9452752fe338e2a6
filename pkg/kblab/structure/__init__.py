"""
Structure Module

False-twin reduction, biclique enumeration, biclique graphs and the induced
P3 containment condition.

Public API:
- false_twin_classes, twin_reduce, is_twin_free
- Biclique, enumerate_bicliques, brute_force_bicliques, is_biclique
- LabeledKB, biclique_graph, kb_degree
- check_theorem1, induced_p3s, p3_contained

Example usage:
    from kblab.core import cycle
    from kblab.structure import biclique_graph
    kb = biclique_graph(cycle(7))
    print(kb.graph.n)  # 7
"""

from .bicliques import Biclique, brute_force_bicliques, enumerate_bicliques, is_biclique
from .conditions import P3Report, check_theorem1, induced_p3s, p3_contained
from .kb import LabeledKB, biclique_graph, kb_degree
from .twins import TwinPartition, false_twin_classes, is_twin_free, twin_reduce

__all__ = [
    "TwinPartition",
    "false_twin_classes",
    "twin_reduce",
    "is_twin_free",
    "Biclique",
    "enumerate_bicliques",
    "brute_force_bicliques",
    "is_biclique",
    "LabeledKB",
    "biclique_graph",
    "kb_degree",
    "P3Report",
    "check_theorem1",
    "induced_p3s",
    "p3_contained",
]
