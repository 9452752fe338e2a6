"""
False Twins and the Tw(G) Reduction

Two vertices are false twins when their open neighborhoods coincide, which
forces them to be nonadjacent. Classes are found by grouping the adjacency
bit masks, and Tw(G) keeps the smallest vertex of every class.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from kblab.core.errors import ResidualTwinsError
from kblab.core.graph import Graph, VertexSet, induced_subgraph, members


@dataclass(frozen=True)
class TwinPartition:
    """
    Partition of V(G) into maximal false-twin classes.

    Attributes:
        classes: Class masks, ordered by their smallest vertex
        representatives: Smallest vertex of each class, aligned with classes
    """

    classes: Tuple[VertexSet, ...]
    representatives: Tuple[int, ...]

    def class_of(self, v: int) -> VertexSet:
        for mask in self.classes:
            if mask >> v & 1:
                return mask
        raise KeyError(v)

    @property
    def is_trivial(self) -> bool:
        """True when every class is a singleton."""
        return all(mask & (mask - 1) == 0 for mask in self.classes)


@dataclass(frozen=True)
class TwinReduction:
    """
    Result of one twin-reduction pass.

    Attributes:
        graph: Tw(G)
        vertex_map: Every vertex of G -> its representative's label in Tw(G)
        kept: Vertices of G that survive, ascending
    """

    graph: Graph
    vertex_map: Dict[int, int]
    kept: Tuple[int, ...]


def false_twin_classes(g: Graph) -> TwinPartition:
    """Group vertices by open neighborhood; the representative is the smallest index."""
    groups: Dict[int, VertexSet] = {}
    for v in range(g.n):
        groups[g.adj[v]] = groups.get(g.adj[v], 0) | (1 << v)
    classes = sorted(groups.values(), key=lambda mask: mask & -mask)
    return TwinPartition(
        classes=tuple(classes),
        representatives=tuple((mask & -mask).bit_length() - 1 for mask in classes),
    )


def is_twin_free(g: Graph) -> bool:
    return len(set(g.adj)) == g.n


def twin_pairs(g: Graph) -> List[Tuple[int, int]]:
    """Every false-twin pair (u, v) with u < v."""
    pairs = []
    for mask in false_twin_classes(g).classes:
        group = members(mask)
        pairs.extend((u, v) for i, u in enumerate(group) for v in group[i + 1:])
    return sorted(pairs)


def twin_reduce(g: Graph, partition: Optional[TwinPartition] = None) -> TwinReduction:
    """
    Compute Tw(G) with one deletion pass over the maximal classes.

    Returns:
        TwinReduction with the reduced graph and the old -> new vertex map

    Raises:
        ResidualTwinsError: if the reduced graph still has false twins
    """
    partition = partition or false_twin_classes(g)
    kept = tuple(sorted(partition.representatives))
    reduced, mapping = induced_subgraph(g, kept)

    vertex_map = {}
    for mask, rep in zip(partition.classes, partition.representatives):
        for v in members(mask):
            vertex_map[v] = mapping[rep]

    if not is_twin_free(reduced):
        raise ResidualTwinsError(
            f"Twin reduction of a {g.n}-vertex graph left false twins: {twin_pairs(reduced)}"
        )
    return TwinReduction(graph=reduced, vertex_map=vertex_map, kept=kept)
