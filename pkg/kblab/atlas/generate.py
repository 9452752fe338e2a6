"""
Exhaustive Generation of Connected Graphs

Canonical augmentation: every connected graph on n vertices has a vertex
whose deletion leaves a connected graph, so extending each connected
(n-1)-vertex class by one new vertex with every nonempty neighborhood, and
deduplicating by canonical form, yields every connected n-vertex class
exactly once. Levels are emitted in canonical labeling, sorted by their
graph6 record, which makes the order independent of worker scheduling.

Levels are memoised per process and can be persisted in the SQLite atlas
cache, or replaced altogether by an external graph6 file.
"""

from itertools import combinations
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

from kblab.atlas.atlas_constants import GENERATION_CAP, LABELED_ORACLE_CAP
from kblab.atlas.atlas_store import load_level, store_level
from kblab.atlas.canonical import canonical_form, canonical_graph
from kblab.core.console import ok, say
from kblab.core.errors import CapExceededError, PreconditionError
from kblab.core.formats import parse_graph6, read_graph6_file, to_graph6
from kblab.core.graph import Graph, add_vertex, empty_graph, from_edge_list, is_connected, members
from kblab.core.parallel import parallel_map
from kblab.structure.twins import is_twin_free

_LEVELS: Dict[int, Tuple[Graph, ...]] = {}


def _check_order(n: int, cap: int = GENERATION_CAP) -> None:
    if n < 1:
        raise PreconditionError(f"Generation needs n >= 1, got {n}")
    if n > cap:
        raise CapExceededError(f"Generation supports n <= {cap}, got {n}")


def _extensions(record: str) -> List[str]:
    """Canonical graph6 records of every one-vertex extension of a parent."""
    parent = parse_graph6(record)
    children = set()
    for neighborhood in range(1, 1 << parent.n):
        child = add_vertex(parent, members(neighborhood))
        children.add(to_graph6(canonical_graph(child)))
    return sorted(children)


def connected_graphs(n: int, jobs: int = 1, store_path: Optional[Union[str, Path]] = None,
                     verbose: bool = False) -> Tuple[Graph, ...]:
    """
    All connected graphs on n vertices, one per isomorphism class.

    Args:
        n: Order, 1 <= n <= GENERATION_CAP
        jobs: Worker processes used to canonicalize extensions
        store_path: Optional SQLite atlas cache consulted first and filled on a miss
        verbose: Print progress to stderr

    Returns:
        Tuple of graphs in canonical labeling, sorted by graph6 record

    Raises:
        CapExceededError: if n exceeds GENERATION_CAP
    """
    _check_order(n)
    if n in _LEVELS:
        return _LEVELS[n]

    if store_path is not None:
        cached = load_level(store_path, n)
        if cached is not None:
            ok(f"Loaded {len(cached):,} graphs of order {n} from {store_path}", verbose)
            _LEVELS[n] = cached
            return cached

    if n == 1:
        level: Tuple[Graph, ...] = (empty_graph(1),)
    else:
        parents = connected_graphs(n - 1, jobs, store_path, verbose)
        say(f"Extending {len(parents):,} graphs of order {n - 1}...", verbose)
        batches = parallel_map(_extensions, [to_graph6(p) for p in parents], jobs)
        records = set()
        for batch in batches:
            records.update(batch)
        level = tuple(g for g in (parse_graph6(r) for r in sorted(records)) if is_connected(g))

    ok(f"Generated {len(level):,} connected graphs of order {n}", verbose)
    _LEVELS[n] = level
    if store_path is not None:
        store_level(store_path, n, level, verbose)
    return level


def generate_connected_graphs(n: int, jobs: int = 1, store_path: Optional[Union[str, Path]] = None,
                              verbose: bool = False) -> Iterator[Graph]:
    """Stream the connected graphs on n vertices, one per isomorphism class."""
    yield from connected_graphs(n, jobs, store_path, verbose)


def generate_twin_free_connected(n: int, jobs: int = 1, store_path: Optional[Union[str, Path]] = None,
                                 verbose: bool = False) -> Iterator[Graph]:
    """Stream the connected graphs on n vertices that contain no false-twin pair."""
    for g in connected_graphs(n, jobs, store_path, verbose):
        if is_twin_free(g):
            yield g


def generate_connected_up_to(max_n: int, twin_free: bool = False, min_n: int = 1, jobs: int = 1,
                             store_path: Optional[Union[str, Path]] = None) -> Iterator[Graph]:
    """Stream levels min_n..max_n in increasing order."""
    for n in range(min_n, max_n + 1):
        if twin_free:
            yield from generate_twin_free_connected(n, jobs, store_path)
        else:
            yield from generate_connected_graphs(n, jobs, store_path)


def ingest_graph6(path: Union[str, Path], n: Optional[int] = None) -> Tuple[Graph, ...]:
    """
    Replace a generation step with an external graph6 file.

    Every record is brought to canonical labeling and deduplicated; when n is
    given the file is installed as the memoised level n, so later sweeps use
    it instead of the built-in generator.
    """
    records = sorted({to_graph6(canonical_graph(g)) for g in read_graph6_file(path)})
    graphs = tuple(parse_graph6(r) for r in records)
    if n is not None:
        _check_order(n)
        wrong = [g for g in graphs if g.n != n or not is_connected(g)]
        if wrong:
            raise PreconditionError(f"{len(wrong)} records in {path} are not connected graphs of order {n}")
        _LEVELS[n] = graphs
    return graphs


def clear_generation_cache() -> None:
    _LEVELS.clear()


# =============================================================================
# LABELED ENUMERATION ORACLE
# =============================================================================

def labeled_connected_oracle(n: int) -> List[bytes]:
    """
    Independent oracle: canonical keys of all connected graphs on n vertices
    obtained by scanning every labeled graph, sorted.

    Raises:
        CapExceededError: if n exceeds LABELED_ORACLE_CAP
    """
    _check_order(n, LABELED_ORACLE_CAP)
    pairs = list(combinations(range(n), 2))
    keys = set()
    for code in range(1 << len(pairs)):
        edges = [pair for bit, pair in enumerate(pairs) if code >> bit & 1]
        if len(edges) < n - 1:
            continue
        g = from_edge_list(n, edges)
        if is_connected(g):
            keys.add(canonical_form(g).key)
    return sorted(keys)
