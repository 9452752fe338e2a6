"""
Canonical Forms and Isomorphism

Canonical labeling by individualization and refinement: vertices are colored
by degree, the coloring is refined until equitable, and while some color
class has more than one vertex the search branches on the vertices of the
smallest such class. Every leaf is a discrete coloring, i.e. a labeling; the
canonical labeling is the leaf whose upper-triangle bit string (graph6 order)
is lexicographically smallest. Vertices of a class that are twins of an
already tried vertex are skipped, since swapping twins is an automorphism
that fixes the coloring.

The key of a CanonicalForm is the graph6 record of the canonically labeled
graph, i.e. the canonical upper-triangle bit string prefixed by n.

Isomorphism testing uses the networkx VF2++ matcher; its witness is checked
edge by edge before it is returned.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional, Sequence

import networkx as nx

from kblab.atlas.atlas_constants import (
    CANONICAL_CAP,
    EXHAUSTIVE_FALLBACK_CAP,
    METHOD_EXHAUSTIVE,
    METHOD_REFINE,
)
from kblab.core.errors import CapExceededError, VerificationError
from kblab.core.formats import to_graph6, to_networkx
from kblab.core.graph import Graph, degree_sequence, iter_members, relabel


@dataclass(frozen=True)
class CanonicalForm:
    """Relabeling-invariant identifier of an isomorphism class."""

    key: bytes

    @property
    def graph6(self) -> str:
        return self.key.decode("ascii")


# =============================================================================
# COLOR REFINEMENT
# =============================================================================

def refine_colors(g: Graph, colors: Sequence[int]) -> List[int]:
    """
    Refine a vertex coloring until it is equitable.

    Colors are returned as dense ranks ordered by (old color, sorted neighbor
    colors), so the result depends only on the graph and the input coloring,
    never on vertex labels.
    """
    current = list(colors)
    count = -1
    while True:
        signatures = [
            (current[v], tuple(sorted(current[u] for u in iter_members(g.adj[v]))))
            for v in range(g.n)
        ]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == count:
            return refined
        current, count = refined, len(ranking)


def _are_twins(g: Graph, u: int, v: int) -> bool:
    return g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)


def _key_for(g: Graph, position: Sequence[int]) -> int:
    """Upper-triangle bit string of g under vertex -> position, as an int."""
    inverse = [0] * g.n
    for v, p in enumerate(position):
        inverse[p] = v
    key = 0
    for j in range(1, g.n):
        row = g.adj[inverse[j]]
        for i in range(j):
            key = (key << 1) | (row >> inverse[i] & 1)
    return key


def _search(g: Graph, colors: List[int], best: list) -> None:
    colors = refine_colors(g, colors)
    sizes = Counter(colors)
    if len(sizes) == g.n:
        key = _key_for(g, colors)
        if best[0] is None or key < best[0]:
            best[0], best[1] = key, colors
        return

    target = min((size, color) for color, size in sizes.items() if size > 1)[1]
    tried: List[int] = []
    for v in range(g.n):
        if colors[v] != target:
            continue
        if any(_are_twins(g, v, t) for t in tried):
            continue
        tried.append(v)
        child = [2 * c + 1 for c in colors]
        child[v] -= 1
        _search(g, child, best)


# =============================================================================
# CANONICAL FORM
# =============================================================================

def canonical_labeling(g: Graph) -> List[int]:
    """
    Canonical labeling: vertex v of g goes to position labeling[v].

    Raises:
        CapExceededError: if n exceeds CANONICAL_CAP
    """
    if g.n > CANONICAL_CAP:
        raise CapExceededError(f"Canonical form supports n <= {CANONICAL_CAP}, got {g.n}")
    if g.n == 0:
        return []
    best: list = [None, None]
    _search(g, [g.degree(v) for v in range(g.n)], best)
    return best[1]


def _exhaustive_labeling(g: Graph) -> List[int]:
    if g.n > EXHAUSTIVE_FALLBACK_CAP:
        raise CapExceededError(
            f"Exhaustive canonical form supports n <= {EXHAUSTIVE_FALLBACK_CAP}, got {g.n}"
        )
    best_key, best_perm = None, list(range(g.n))
    for perm in permutations(range(g.n)):
        key = _key_for(g, perm)
        if best_key is None or key < best_key:
            best_key, best_perm = key, list(perm)
    return best_perm


def canonical_graph(g: Graph, method: str = METHOD_REFINE) -> Graph:
    """The canonically labeled copy of g."""
    if method == METHOD_REFINE:
        return relabel(g, canonical_labeling(g))
    if method == METHOD_EXHAUSTIVE:
        return relabel(g, _exhaustive_labeling(g))
    raise ValueError(f"Unknown canonical form method: {method}")


def canonical_form(g: Graph, method: str = METHOD_REFINE) -> CanonicalForm:
    """
    Relabeling-invariant key of g's isomorphism class.

    Args:
        g: Graph with n <= CANONICAL_CAP (n <= EXHAUSTIVE_FALLBACK_CAP for the
            exhaustive method)
        method: "refine" (default) or "exhaustive"; keys of different methods
            must never be compared with each other

    Returns:
        CanonicalForm whose key is the graph6 record of the canonical copy
    """
    return CanonicalForm(to_graph6(canonical_graph(g, method)).encode("ascii"))


# =============================================================================
# ISOMORPHISM
# =============================================================================

def _verify_isomorphism(g1: Graph, g2: Graph, mapping: Dict[int, int]) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(mapping.values()) != list(range(g2.n)):
        return False
    return all(g2.has_edge(mapping[u], mapping[v]) for u, v in g1.edges())


def find_isomorphism(g1: Graph, g2: Graph) -> Optional[Dict[int, int]]:
    """
    Find an edge-preserving bijection V(g1) -> V(g2).

    Returns:
        The witness mapping, verified edge by edge, or None when the graphs
        are not isomorphic
    """
    if g1.n != g2.n or g1.m != g2.m or degree_sequence(g1) != degree_sequence(g2):
        return None
    if g1.n == 0:
        return {}
    mapping = nx.vf2pp_isomorphism(to_networkx(g1), to_networkx(g2))
    if mapping is None:
        return None
    if not _verify_isomorphism(g1, g2, mapping):
        raise VerificationError("Isomorphism witness failed edge-by-edge verification")
    return dict(mapping)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """True iff an edge-preserving bijection exists."""
    return find_isomorphism(g1, g2) is not None


# =============================================================================
# INVARIANTS AND CLASSES
# =============================================================================

def graph_invariant(g: Graph) -> tuple:
    """
    Cheap isomorphism invariant for bucketing graphs too large to canonicalize.

    Equal graphs always share the invariant; unequal invariants prove the
    graphs non-isomorphic.
    """
    local = sorted(
        (g.degree(v), tuple(sorted(g.degree(u) for u in iter_members(g.adj[v]))))
        for v in range(g.n)
    )
    return (g.n, g.m, tuple(local))


def isomorphism_classes(graphs: Sequence[Graph]) -> List[List[int]]:
    """
    Group graphs into isomorphism classes.

    Returns:
        Lists of input indices, one list per class, ordered by first member
    """
    buckets: Dict[tuple, List[List[int]]] = {}
    classes: List[List[int]] = []
    for index, g in enumerate(graphs):
        bucket = buckets.setdefault(graph_invariant(g), [])
        for members_ in bucket:
            if are_isomorphic(graphs[members_[0]], g):
                members_.append(index)
                break
        else:
            new_class = [index]
            bucket.append(new_class)
            classes.append(new_class)
    return classes

