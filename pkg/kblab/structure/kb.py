"""
Biclique Graphs

KB(H) is the intersection graph of the bicliques of H: one vertex per
biclique, two vertices adjacent when the bicliques share a host vertex. The
labeled form keeps the biclique behind every KB-vertex so that removal can
locate the biclique a KB-vertex stands for.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from kblab.core.errors import NotABicliqueError
from kblab.core.graph import Graph, degree_sequence
from kblab.structure.bicliques import Biclique, enumerate_bicliques, is_biclique


@dataclass(frozen=True)
class LabeledKB:
    """
    Biclique graph together with its vertex -> biclique correspondence.

    Attributes:
        graph: KB(H)
        bicliques: Biclique of H behind each KB-vertex, indexed by KB-vertex
        host_n: Vertex count of H
    """

    graph: Graph
    bicliques: Tuple[Biclique, ...]
    host_n: int

    def vertex_of(self, b: Biclique) -> int:
        """KB-vertex standing for biclique b."""
        try:
            return self.bicliques.index(b)
        except ValueError:
            raise NotABicliqueError(f"{b} is not a biclique of the host graph") from None

    def biclique_of_vertex(self, q: int) -> Biclique:
        return self.bicliques[q]


def kb_of_bicliques(family: Sequence[Biclique]) -> Graph:
    """Intersection graph of an arbitrary biclique family, in family order."""
    masks = [b.vertices for b in family]
    adj = []
    for i, mine in enumerate(masks):
        row = 0
        for j, other in enumerate(masks):
            if i != j and mine & other:
                row |= 1 << j
        adj.append(row)
    return Graph(len(masks), tuple(adj))


def biclique_graph(h: Graph, bicliques: Optional[Sequence[Biclique]] = None) -> LabeledKB:
    """
    Build KB(H).

    Args:
        h: Connected host graph with n >= 2
        bicliques: Precomputed enumeration of h, if available

    Returns:
        LabeledKB whose KB-vertex i is the i-th biclique in sorted order
    """
    family = tuple(bicliques) if bicliques is not None else tuple(enumerate_bicliques(h))
    return LabeledKB(graph=kb_of_bicliques(family), bicliques=family, host_n=h.n)


def kb_degree(h: Graph, b: Biclique, kb: Optional[LabeledKB] = None) -> int:
    """
    Number of other bicliques of h that intersect b.

    Raises:
        NotABicliqueError: if b is not a biclique of h
    """
    if not is_biclique(h, b):
        raise NotABicliqueError(f"{b} is not a biclique of the host graph")
    family = kb.bicliques if kb is not None else enumerate_bicliques(h)
    return sum(1 for other in family if other != b and other.vertices & b.vertices)


def kb_degree_sequence(h: Graph) -> Tuple[int, ...]:
    return degree_sequence(biclique_graph(h).graph)


def iterate_kb(h: Graph, k: int) -> Graph:
    """KB applied k times; KB^0(H) = H."""
    g = h
    for _ in range(k):
        g = biclique_graph(g).graph
    return g
