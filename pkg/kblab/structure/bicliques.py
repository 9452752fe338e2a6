"""
Biclique Enumeration

A biclique is a maximal induced complete bipartite subgraph with both parts
nonempty. The enumerator seeds every edge (u, v), u < v, as K_{1,1}; every
other vertex adjacent to exactly one endpoint is a candidate whose side is
forced (a neighbor of v that misses u joins u's side, and vice versa). Two
candidates can coexist iff they are nonadjacent on the same side or adjacent
on opposite sides, so the bicliques through the seed are the maximal cliques
of that compatibility graph, found by networkx find_cliques.

Each biclique is reported from its minimal edge only: cliques holding a
candidate that would form a smaller edge with the seed are dropped. A final
maximality check guards the result.

The subset-scan oracle tests every vertex subset directly and serves as the
independent reference.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

from kblab.core.constants import BRUTE_FORCE_CAP
from kblab.core.errors import CapExceededError, GraphValidationError, PreconditionError
from kblab.core.graph import (
    Graph,
    VertexSet,
    check_vertex_set,
    is_independent_mask,
    iter_members,
    lowest,
    mask_of,
    members,
)


@dataclass(frozen=True, order=True)
class Biclique:
    """
    Two disjoint vertex sets of a host graph, normalized so that the side
    containing the smallest vertex is left.
    """

    left: VertexSet
    right: VertexSet

    @classmethod
    def of(cls, side_a: VertexSet, side_b: VertexSet) -> "Biclique":
        if side_a and (not side_b or lowest(side_a) < lowest(side_b)):
            return cls(side_a, side_b)
        return cls(side_b, side_a)

    @classmethod
    def from_lists(cls, side_a: Iterable[int], side_b: Iterable[int]) -> "Biclique":
        a = b = 0
        for v in side_a:
            a |= 1 << v
        for v in side_b:
            b |= 1 << v
        return cls.of(a, b)

    @property
    def vertices(self) -> VertexSet:
        return self.left | self.right

    @property
    def size(self) -> int:
        return self.vertices.bit_count()

    def left_list(self) -> Tuple[int, ...]:
        return members(self.left)

    def right_list(self) -> Tuple[int, ...]:
        return members(self.right)

    def __str__(self) -> str:
        left = " ".join(map(str, self.left_list()))
        right = " ".join(map(str, self.right_list()))
        return f"{left} | {right}"


# =============================================================================
# PREDICATES
# =============================================================================

def is_complete_bipartite_pair(g: Graph, left: VertexSet, right: VertexSet) -> bool:
    """Nonempty, disjoint, independent sides that are complete to each other."""
    if not left or not right or left & right:
        return False
    if not is_independent_mask(g, left) or not is_independent_mask(g, right):
        return False
    return all(g.adj[v] & right == right for v in iter_members(left))


def can_extend(g: Graph, left: VertexSet, right: VertexSet) -> bool:
    """True if some outside vertex fits on one side of the pair."""
    outside = g.all_vertices & ~(left | right)
    for c in iter_members(outside):
        row = g.adj[c]
        if row & right == right and not row & left:
            return True
        if row & left == left and not row & right:
            return True
    return False


def is_biclique(g: Graph, cand: Biclique) -> bool:
    """
    True iff cand is a biclique of g, maximality included.

    Raises:
        GraphValidationError: if a side holds a vertex outside g
    """
    check_vertex_set(g, members(cand.left) + members(cand.right))
    return is_complete_bipartite_pair(g, cand.left, cand.right) and not can_extend(g, cand.left, cand.right)


def is_c4(cand: Biclique) -> bool:
    return cand.left.bit_count() == 2 and cand.right.bit_count() == 2


def contains_k13(cand: Biclique) -> bool:
    """True iff a K_{1,3} fits inside: one side nonempty, the other of size >= 3."""
    return max(cand.left.bit_count(), cand.right.bit_count()) >= 3


def biclique_shape(cand: Biclique) -> Tuple[int, int]:
    """Part sizes as (smaller, larger)."""
    a, b = cand.left.bit_count(), cand.right.bit_count()
    return (a, b) if a <= b else (b, a)


# =============================================================================
# BRANCH-AND-EXTEND ENUMERATION
# =============================================================================

def _compatibility_graph(g: Graph, x_side: VertexSet, y_side: VertexSet) -> nx.Graph:
    """Candidates as nodes; an edge wherever two candidates fit in one biclique with the seed."""
    compat = nx.Graph()
    cands = x_side | y_side
    compat.add_nodes_from(iter_members(cands))
    for c in iter_members(cands):
        if x_side >> c & 1:
            same, other = x_side, y_side
        else:
            same, other = y_side, x_side
        fits = ((same & ~g.adj[c]) | (other & g.adj[c])) & cands
        compat.add_edges_from((c, d) for d in iter_members(fits) if d > c)
    return compat


def _seed_bicliques(g: Graph, u: int, v: int) -> List[Biclique]:
    x_side = 0
    y_side = 0
    for c in range(g.n):
        if c == u or c == v:
            continue
        on_v = g.adj[c] >> v & 1
        on_u = g.adj[c] >> u & 1
        if on_v and not on_u:
            x_side |= 1 << c
        elif on_u and not on_v:
            y_side |= 1 << c
    if not x_side | y_side:
        return [Biclique.of(1 << u, 1 << v)]

    # A candidate that forms a smaller edge with the opposite seed vertex
    # would report the same biclique from that edge.
    excluded = 0
    for c in iter_members(x_side):
        if c < u:
            excluded |= 1 << c
    for c in iter_members(y_side):
        if c < v:
            excluded |= 1 << c

    results: List[Biclique] = []
    for clique in nx.find_cliques(_compatibility_graph(g, x_side, y_side)):
        chosen = mask_of(clique)
        if chosen & excluded:
            continue
        results.append(Biclique.of((1 << u) | (chosen & x_side), (1 << v) | (chosen & y_side)))
    return results


def enumerate_bicliques(g: Graph) -> List[Biclique]:
    """
    All bicliques of g, each once, sorted by (left, right) mask.

    Args:
        g: Host graph with n >= 2

    Raises:
        PreconditionError: if n < 2
    """
    if g.n < 2:
        raise PreconditionError(f"Biclique enumeration needs n >= 2, got {g.n}")
    found: Set[Biclique] = set()
    for u, v in g.edges():
        for b in _seed_bicliques(g, u, v):
            if is_biclique(g, b):
                found.add(b)
    return sorted(found)


# =============================================================================
# SUBSET-SCAN ORACLE
# =============================================================================

def _split_subset(g: Graph, subset: VertexSet) -> Optional[Tuple[VertexSet, VertexSet]]:
    s = lowest(subset)
    right = g.adj[s] & subset
    left = subset & ~right
    if is_complete_bipartite_pair(g, left, right):
        return left, right
    return None


def brute_force_bicliques(g: Graph) -> List[Biclique]:
    """
    Reference enumeration by scanning every vertex subset.

    A subset induces a complete bipartite graph exactly when the neighbors of
    its lowest vertex inside it form one side and the rest the other side.

    Raises:
        CapExceededError: if n exceeds BRUTE_FORCE_CAP
        PreconditionError: if n < 2
    """
    if g.n > BRUTE_FORCE_CAP:
        raise CapExceededError(f"Subset-scan oracle supports n <= {BRUTE_FORCE_CAP}, got {g.n}")
    if g.n < 2:
        raise PreconditionError(f"Biclique enumeration needs n >= 2, got {g.n}")

    induced: List[Tuple[VertexSet, VertexSet]] = []
    for subset in range(1, 1 << g.n):
        if subset & (subset - 1) == 0:
            continue
        split = _split_subset(g, subset)
        if split is not None:
            induced.append(split)

    # A contained set always sits inside a qualifying set one vertex larger,
    # so containment is tested against single-vertex supersets.
    vertex_sets = {left | right for left, right in induced}
    maximal = []
    for left, right in induced:
        verts = left | right
        if any(verts | (1 << w) in vertex_sets for w in iter_members(g.all_vertices & ~verts)):
            continue
        maximal.append(Biclique.of(left, right))
    return sorted(maximal)


# =============================================================================
# TRANSFER UNDER TWIN REDUCTION
# =============================================================================

def transfer_biclique(b: Biclique, vertex_map: Dict[int, int], kept: Iterable[int]) -> Biclique:
    """
    Map a biclique of H to the corresponding biclique of Tw(H).

    False twins always lie on the same side of a biclique, so restricting to
    kept representatives and relabeling is a bijection between the families.

    Args:
        b: Biclique of H
        vertex_map: H vertex -> Tw(H) vertex (from twin_reduce)
        kept: Vertices of H that survive in Tw(H)
    """
    keep = 0
    for v in kept:
        keep |= 1 << v
    left = right = 0
    for v in iter_members(b.left):
        left |= 1 << vertex_map[v]
    for v in iter_members(b.right):
        right |= 1 << vertex_map[v]
    if not (b.left & keep) or not (b.right & keep):
        raise GraphValidationError("Biclique side vanished under twin reduction")
    return Biclique.of(left, right)
