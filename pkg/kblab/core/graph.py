"""
Graph Value Type and Constructors

A Graph is an immutable simple undirected graph over the dense vertex labels
0..n-1. Adjacency is stored as one bit mask per vertex, so a VertexSet is a
plain Python int whose bit v is set when vertex v is a member.

Every mutation-style operation (induced_subgraph, remove_vertex, add_vertex,
relabel) returns a new Graph, together with an explicit old->new vertex map
whenever labels move.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Tuple

from kblab.core.constants import MAX_VERTICES
from kblab.core.errors import CapExceededError, GraphValidationError

VertexSet = int
Edge = Tuple[int, int]


# =============================================================================
# VERTEX SET HELPERS
# =============================================================================

def mask_of(vertices: Iterable[int]) -> VertexSet:
    """Build a VertexSet bit mask from an iterable of vertex indices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> Tuple[int, ...]:
    """Return the vertices of a VertexSet in ascending order."""
    result = []
    while mask:
        low = mask & -mask
        result.append(low.bit_length() - 1)
        mask ^= low
    return tuple(result)


def iter_members(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: VertexSet) -> int:
    """Smallest vertex of a nonempty VertexSet."""
    return (mask & -mask).bit_length() - 1


# =============================================================================
# GRAPH VALUE TYPE
# =============================================================================

@dataclass(frozen=True)
class Graph:
    """
    Finite simple undirected graph.

    Attributes:
        n: Vertex count
        adj: Neighbor bit mask of every vertex, indexed by vertex
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        validate_graph(self)

    # -- neighborhoods -------------------------------------------------------

    def neighbors(self, v: int) -> frozenset:
        """Open neighborhood N(v) as a frozenset."""
        return frozenset(iter_members(self.adj[v]))

    def closed_mask(self, v: int) -> VertexSet:
        """Closed neighborhood N[v] as a bit mask."""
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    # -- global views --------------------------------------------------------

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> List[Edge]:
        """All edges (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1))]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def validate_graph(g: Graph) -> None:
    """
    Check the Graph invariants: symmetry, no self-loops, in-range neighbors.

    Raises:
        CapExceededError: if n exceeds MAX_VERTICES
        GraphValidationError: on any structural violation
    """
    if g.n < 0:
        raise GraphValidationError(f"Negative vertex count: {g.n}")
    if g.n > MAX_VERTICES:
        raise CapExceededError(f"Graph order {g.n} exceeds the supported cap of {MAX_VERTICES}")
    if len(g.adj) != g.n:
        raise GraphValidationError(f"Adjacency has {len(g.adj)} rows for {g.n} vertices")

    full = (1 << g.n) - 1
    for v, row in enumerate(g.adj):
        if row & ~full:
            raise GraphValidationError(f"Vertex {v} has a neighbor outside 0..{g.n - 1}")
        if row >> v & 1:
            raise GraphValidationError(f"Self-loop at vertex {v}")
        for u in iter_members(row):
            if not g.adj[u] >> v & 1:
                raise GraphValidationError(f"Asymmetric adjacency between {v} and {u}")


def check_vertex_set(g: Graph, vertices: Iterable[int]) -> VertexSet:
    """Convert vertices to a mask, rejecting out-of-range members."""
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphValidationError(f"Vertex {v} outside 0..{g.n - 1}")
        mask |= 1 << v
    return mask


# =============================================================================
# CONSTRUCTION
# =============================================================================

def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    """
    Build a graph with exactly the given edges, deduplicated.

    Args:
        n: Vertex count
        edges: Vertex pairs (u, v), u != v, both below n

    Returns:
        The Graph

    Raises:
        GraphValidationError: on an out-of-range index or a self-loop
    """
    if n > MAX_VERTICES:
        raise CapExceededError(f"Graph order {n} exceeds the supported cap of {MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphValidationError(f"Self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """
    Induced subgraph on a vertex set, relabeled in ascending original order.

    Args:
        g: Host graph
        vertices: Vertex set S of the host

    Returns:
        Tuple of (subgraph, old->new vertex map)

    Raises:
        GraphValidationError: on an out-of-range member, or an empty S for a
            nonempty host
    """
    keep = members(check_vertex_set(g, vertices))
    if not keep and g.n > 0:
        raise GraphValidationError("Induced subgraph on an empty vertex set")

    mapping = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        row = 0
        for u in iter_members(g.adj[old]):
            new = mapping.get(u)
            if new is not None:
                row |= 1 << new
        adj.append(row)
    return Graph(len(keep), tuple(adj)), mapping


def remove_vertex(g: Graph, v: int) -> Tuple[Graph, Dict[int, int]]:
    """G - {v}: the induced subgraph on every vertex except v."""
    check_vertex_set(g, [v])
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def remove_vertices(g: Graph, removed: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    drop = check_vertex_set(g, removed)
    return induced_subgraph(g, members(g.all_vertices & ~drop))


def add_vertex(g: Graph, neighbors: Iterable[int]) -> Graph:
    """Append vertex n adjacent to the given existing vertices."""
    row = check_vertex_set(g, neighbors)
    new = g.n
    adj = [a | (1 << new) if row >> u & 1 else a for u, a in enumerate(g.adj)]
    adj.append(row)
    return Graph(g.n + 1, tuple(adj))


def relabel(g: Graph, perm: List[int]) -> Graph:
    """Apply a permutation; vertex v of g becomes perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphValidationError("Relabeling is not a permutation of the vertex set")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in iter_members(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(g.n, tuple(adj))


# =============================================================================
# STANDARD CONSTRUCTORS
# =============================================================================

def complete(n: int) -> Graph:
    """K_n."""
    if n < 1:
        raise GraphValidationError(f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path(k: int) -> Graph:
    """P_k on vertices 0-1-...-(k-1)."""
    if k < 1:
        raise GraphValidationError(f"path needs k >= 1, got {k}")
    return from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    """C_k on vertices 0..k-1 in cyclic order."""
    if k < 3:
        raise GraphValidationError(f"cycle needs k >= 3, got {k}")
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: parts 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise GraphValidationError(f"complete bipartite needs a, b >= 1, got ({a}, {b})")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(s: int) -> Graph:
    """K_{1,s} with center 0."""
    return complete_bipartite(1, s)


def circulant(k: int, distances: Iterable[int]) -> Graph:
    """
    Circulant graph on 0..k-1: i ~ j iff their circular distance lies in D.

    Args:
        k: Vertex count
        distances: Set D of circular distances, each in 1..k//2

    Returns:
        The circulant Graph
    """
    if k < 1:
        raise GraphValidationError(f"circulant needs k >= 1, got {k}")
    dist = set(distances)
    for d in dist:
        if not 1 <= d <= k // 2:
            raise GraphValidationError(f"circular distance {d} outside 1..{k // 2}")
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            if min(j - i, k - (j - i)) in dist:
                edges.append((i, j))
    return from_edge_list(k, edges)


def diamond() -> Graph:
    """K_4 minus the edge 1-3; vertices 0 and 2 have degree three."""
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def paw() -> Graph:
    """Triangle 0-1-2 with pendant 3 on vertex 2."""
    return from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def gem() -> Graph:
    """Induced P_4 0-1-2-3 plus universal vertex 4."""
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3)] + [(i, 4) for i in range(4)])


def crown() -> Graph:
    """
    Two universal vertices (0, 1) and three vertices of degree two (2, 3, 4).

    This is the join of K_2 with an independent triple, the five-vertex graph
    that is not a biclique graph although deleting any degree-two vertex
    leaves a diamond.
    """
    return from_edge_list(5, [(0, 1)] + [(u, w) for u in (0, 1) for w in (2, 3, 4)])


# =============================================================================
# PREDICATES AND ACCESSORS
# =============================================================================

def open_neighborhood(g: Graph, v: int) -> frozenset:
    check_vertex_set(g, [v])
    return g.neighbors(v)


def closed_neighborhood(g: Graph, v: int) -> frozenset:
    check_vertex_set(g, [v])
    return g.neighbors(v) | {v}


def is_independent_mask(g: Graph, mask: VertexSet) -> bool:
    return all(not g.adj[v] & mask for v in iter_members(mask))


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff no edge joins two members of the set (vacuous for the empty set)."""
    return is_independent_mask(g, check_vertex_set(g, vertices))


def component_mask(g: Graph, start: int, within: VertexSet = -1) -> VertexSet:
    """Vertices reachable from start inside the given vertex set."""
    if within == -1:
        within = g.all_vertices
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in iter_members(frontier):
            reach |= g.adj[v]
        frontier = reach & within & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    """Connectivity check; the empty graph counts as connected."""
    if g.n == 0:
        return True
    return component_mask(g, 0) == g.all_vertices


def degree_sequence(g: Graph) -> Tuple[int, ...]:
    """Degrees in non-increasing order."""
    return tuple(sorted((g.degree(v) for v in range(g.n)), reverse=True))
