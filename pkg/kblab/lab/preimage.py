"""
Preimage Search

A preimage of G is a graph H with KB(H) isomorphic to G; finding one proves
that G is a biclique graph, while failing to find one proves nothing.

Hosts are the connected twin-free graphs of the atlas (twin reduction does
not change the biclique graph), tried by increasing order and then in
generation order, so the first hit is a smallest-order witness. Each atlas
level is indexed by (biclique count, KB degree sequence), both isomorphism
invariants, and only hosts whose key matches G reach the isomorphism test.
"""

from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from kblab.atlas.atlas_constants import GENERATION_CAP
from kblab.atlas.canonical import are_isomorphic
from kblab.atlas.generate import generate_twin_free_connected
from kblab.core.errors import CapExceededError, PreconditionError
from kblab.core.graph import Graph, degree_sequence, is_connected
from kblab.lab.lab_constants import DEFAULT_PREIMAGE_MAX_N
from kblab.structure.kb import biclique_graph

IndexKey = Tuple[int, Tuple[int, ...]]


def _key(g: Graph) -> IndexKey:
    return g.n, degree_sequence(g)


class PreimageIndex:
    """Per-level index of twin-free hosts keyed by the shape of their KB."""

    def __init__(self, store_path: Optional[Union[str, Path]] = None):
        self.store_path = store_path
        self._levels: Dict[int, Dict[IndexKey, List[Tuple[Graph, Graph]]]] = {}

    def level(self, n: int) -> Dict[IndexKey, List[Tuple[Graph, Graph]]]:
        """Hosts of order n with their KB graphs, grouped by key in generation order."""
        if n not in self._levels:
            buckets: Dict[IndexKey, List[Tuple[Graph, Graph]]] = {}
            for host in generate_twin_free_connected(n, store_path=self.store_path):
                kb = biclique_graph(host).graph
                buckets.setdefault(_key(kb), []).append((host, kb))
            self._levels[n] = buckets
        return self._levels[n]

    def candidates(self, g: Graph, n: int) -> List[Tuple[Graph, Graph]]:
        return self.level(n).get(_key(g), [])

    def clear(self) -> None:
        self._levels.clear()


# one shared index per atlas cache path, None for in-memory generation
_SHARED_INDEXES: Dict[Optional[str], PreimageIndex] = {}


def shared_index(store_path: Optional[Union[str, Path]] = None) -> PreimageIndex:
    """The process-wide index backed by store_path."""
    key = None if store_path is None else str(store_path)
    if key not in _SHARED_INDEXES:
        _SHARED_INDEXES[key] = PreimageIndex(store_path)
    return _SHARED_INDEXES[key]


def find_preimage(g: Graph, max_n: int = DEFAULT_PREIMAGE_MAX_N,
                  index: Optional[PreimageIndex] = None,
                  store_path: Optional[Union[str, Path]] = None) -> Optional[Graph]:
    """
    Search the atlas for a host whose biclique graph is isomorphic to g.

    Args:
        g: Connected graph
        max_n: Largest host order tried, at most GENERATION_CAP
        index: Host index to search; the shared process-wide index by default
        store_path: SQLite atlas cache behind the shared index

    Returns:
        The first matching host, or None when no host up to max_n matches

    Raises:
        CapExceededError: if max_n exceeds GENERATION_CAP
        PreconditionError: if g is empty or disconnected
    """
    if max_n > GENERATION_CAP:
        raise CapExceededError(f"Preimage search supports max_n <= {GENERATION_CAP}, got {max_n}")
    if g.n == 0 or not is_connected(g):
        raise PreconditionError("Preimage search needs a nonempty connected graph")
    index = index or shared_index(store_path)
    for n in range(2, max_n + 1):
        for host, kb in index.candidates(g, n):
            if are_isomorphic(kb, g):
                return host
    return None


def verify_preimage(g: Graph, host: Graph) -> bool:
    """Independent re-check that KB(host) is isomorphic to g."""
    if host.n < 2 or not is_connected(host):
        return False
    return are_isomorphic(biclique_graph(host).graph, g)
