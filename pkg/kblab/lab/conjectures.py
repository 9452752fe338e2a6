"""
Conjecture Harnesses

Evidence gathering over the biclique graphs of small hosts. The preimage
search is incomplete, so every item is three-valued:

- proved-yes: a host whose KB is isomorphic to the subject is attached
- proved-no: an induced P3 of the subject outside every diamond and gem is
  attached (for the vertex-deletion conjecture: one per deletion)
- unknown: neither certificate was found

The harnesses only see KB(H) for hosts up to max_n vertices, not every
biclique graph; each report says so in its notes. Per-graph work is spread
over worker processes with parallel_map; item order does not depend on jobs.
"""

from functools import partial
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from kblab.atlas.canonical import are_isomorphic
from kblab.atlas.generate import generate_connected_up_to
from kblab.core.console import banner, fail, ok, say
from kblab.core.errors import KBLabError, PreconditionError
from kblab.core.formats import to_graph6
from kblab.core.graph import (
    Graph,
    add_vertex,
    circulant,
    cycle,
    induced_subgraph,
    is_connected,
    iter_members,
    remove_vertex,
)
from kblab.core.parallel import parallel_map
from kblab.lab.lab_constants import (
    CLAIM_CONJECTURE1,
    CLAIM_CONJECTURE2,
    CLAIM_CONJECTURE3,
    DEFAULT_CONJECTURE2_K_MAX,
    DEFAULT_CONJECTURE_MAX_N,
    ITEM_CERTIFICATE,
    ITEM_DETAIL,
    ITEM_GRAPH6,
    ITEM_STATUS,
    ITEM_SUBJECT,
    ITEM_WITNESS,
    OBSERVATION1_K_MIN,
    REPORT_COUNTS,
    REPORT_ITEMS,
    REPORT_NOTES,
    STATUS_PROVED_NO,
    STATUS_PROVED_YES,
    STATUS_UNKNOWN,
)
from kblab.lab.lab_utils import distinct_graphs, finish_report, kb_cycle_length, new_report, witness_text
from kblab.lab.preimage import find_preimage
from kblab.removal.degree2 import remove_degree2
from kblab.structure.conditions import check_theorem1
from kblab.structure.kb import biclique_graph
from kblab.structure.twins import false_twin_classes, twin_reduce

COVERAGE_NOTE = "Only biclique graphs KB(H) of connected twin-free hosts H with n <= max_n are covered."

StorePath = Optional[Union[str, Path]]


def _item(subject: Graph, status: str, certificate: Optional[Graph] = None,
          witness: Optional[Tuple[int, int, int]] = None, **extra) -> Dict:
    item = {
        ITEM_SUBJECT: to_graph6(subject),
        ITEM_STATUS: status,
        ITEM_CERTIFICATE: to_graph6(certificate) if certificate is not None else None,
        ITEM_WITNESS: witness_text(witness),
    }
    item.update(extra)
    return item


def _status_of(g: Graph, max_n: int, store_path: StorePath = None) -> Dict:
    """Three-valued membership of a connected graph: preimage, P3 violation or unknown."""
    p3 = check_theorem1(g)
    if not p3.passed:
        return _item(g, STATUS_PROVED_NO, witness=p3.witness)
    host = find_preimage(g, max_n, store_path=store_path)
    if host is not None:
        return _item(g, STATUS_PROVED_YES, certificate=host)
    return _item(g, STATUS_UNKNOWN)


def biclique_graph_family(max_n: int, jobs: int = 1, store_path: StorePath = None) -> List[Tuple[Graph, Graph]]:
    """Distinct KB(H) over connected twin-free hosts, 2 <= n <= max_n, with the first host of each."""
    hosts = list(generate_connected_up_to(max_n, twin_free=True, min_n=2, jobs=jobs, store_path=store_path))
    kbs = [biclique_graph(h).graph for h in hosts]
    return [(kb, hosts[index]) for index, kb in distinct_graphs(kbs)]


# =============================================================================
# VERTEX DELETION CONJECTURE
# =============================================================================

def test_conjecture1(max_n: int = DEFAULT_CONJECTURE_MAX_N, verbose: bool = False, jobs: int = 1,
                     store_path: StorePath = None) -> Dict:
    """
    For each biclique graph G other than KB(C_k), k >= 7, look for a vertex q
    with G - q certified to be a biclique graph.

    A degree-two vertex settles it through remove_degree2, whose H' is the
    certificate; otherwise, or when that removal fails, every deletion is run
    through the preimage search. proved-no is reported only when every G - q
    violates P3 containment.
    """
    banner(f"Vertex deletion conjecture, hosts n <= {max_n}", verbose)
    report = new_report(CLAIM_CONJECTURE1, {"max_n": max_n})
    report[REPORT_NOTES].append(COVERAGE_NOTE)

    family = biclique_graph_family(max_n, jobs, store_path)
    subjects = []
    excluded = 0
    for g, host in family:
        if g.n < 2:
            continue
        k = kb_cycle_length(g)
        if k is not None and k >= OBSERVATION1_K_MIN:
            excluded += 1
            continue
        subjects.append((g, host))
    say(f"Checking {len(subjects):,} biclique graphs...", verbose)
    report[REPORT_ITEMS].extend(
        parallel_map(partial(_conjecture1_item, max_n=max_n, store_path=store_path), subjects, jobs)
    )

    counterexamples = [item for item in report[REPORT_ITEMS] if item[ITEM_STATUS] == STATUS_PROVED_NO]
    for item in counterexamples:
        fail(f"COUNTEREXAMPLE CANDIDATE: every deletion from {item[ITEM_GRAPH6]} violates P3 containment", verbose)
    report[REPORT_COUNTS] = {"biclique_graphs": len(family), "excluded_kb_cycles": excluded}
    finish_report(report)
    ok(f"{report[REPORT_COUNTS].get(STATUS_PROVED_YES, 0)} proved-yes of {len(report[REPORT_ITEMS])}", verbose)
    return report


def _with_note(detail: str, failures: List[str]) -> str:
    return "; ".join(failures + [detail])


def _conjecture1_item(subject: Tuple[Graph, Graph], max_n: int, store_path: StorePath = None) -> Dict:
    g, host = subject
    record = to_graph6(g)
    failures = []
    for q in range(g.n):
        if g.degree(q) == 2:
            try:
                result = remove_degree2(host, q, store_path=store_path)
            except KBLabError as e:
                failures.append(f"degree-2 removal of {q} failed: {type(e).__name__}: {e}")
                continue
            rest, _ = remove_vertex(g, q)
            detail = _with_note(f"degree-2 removal ({result.construction})", failures)
            return _item(rest, STATUS_PROVED_YES, certificate=result.h_prime,
                         **{ITEM_GRAPH6: record, "q": q, ITEM_DETAIL: detail})

    all_fail = True
    first_witness = None
    for q in range(g.n):
        rest, _ = remove_vertex(g, q)
        if not is_connected(rest):
            all_fail = False
            continue
        status = _status_of(rest, max_n, store_path)
        if status[ITEM_STATUS] == STATUS_PROVED_YES:
            status.update({ITEM_GRAPH6: record, "q": q, ITEM_DETAIL: _with_note("preimage search", failures)})
            return status
        if status[ITEM_STATUS] == STATUS_PROVED_NO:
            if first_witness is None:
                first_witness = status
        else:
            all_fail = False

    if all_fail and first_witness is not None:
        first_witness.update({
            ITEM_GRAPH6: record, "q": None,
            ITEM_DETAIL: _with_note("every deletion violates P3 containment", failures),
        })
        return first_witness
    return _item(g, STATUS_UNKNOWN, **{ITEM_GRAPH6: record, "q": None,
                                       ITEM_DETAIL: _with_note("no deletion certified", failures)})


# =============================================================================
# KB(C_k) PREIMAGE SHAPE CONJECTURE
# =============================================================================

def cycle_pendant_length(t: Graph) -> Optional[int]:
    """
    k when t is an induced C_k with pendants, each cycle vertex carrying at
    most one degree-1 neighbor outside the cycle; None otherwise.
    """
    if t.n < 3 or not is_connected(t):
        return None
    core = 0
    pendants = []
    for v in range(t.n):
        if t.degree(v) >= 2:
            core |= 1 << v
        else:
            pendants.append(v)
    k = core.bit_count()
    if k < 3:
        return None
    cyc, _ = induced_subgraph(t, iter_members(core))
    if not is_connected(cyc) or any(cyc.degree(v) != 2 for v in range(cyc.n)):
        return None
    carriers = [t.adj[p] for p in pendants]
    if any(not c & core for c in carriers) or len(set(carriers)) != len(carriers):
        return None
    return k


def cycle_with_pendants(k: int, pendant_on: List[int], twin_of: Optional[int] = None) -> Graph:
    """C_k plus a pendant on each listed cycle vertex, plus an optional false twin of a cycle vertex."""
    g = cycle(k)
    for v in pendant_on:
        g = add_vertex(g, [v])
    if twin_of is not None:
        g = add_vertex(g, list(iter_members(g.adj[twin_of])))
    return g


def positive_family(k_max: int) -> List[Tuple[str, int, Graph]]:
    """Hosts built as C_k plus pendants or twins for 7 <= k <= k_max, labeled by construction."""
    family = []
    for k in range(OBSERVATION1_K_MIN, k_max + 1):
        family.append(("cycle", k, cycle(k)))
        family.append(("one pendant", k, cycle_with_pendants(k, [0])))
        family.append(("alternate pendants", k, cycle_with_pendants(k, list(range(0, k, 2)))))
        family.append(("all pendants", k, cycle_with_pendants(k, list(range(k)))))
        family.append(("doubled pendant", k, cycle_with_pendants(k, [0, 0])))
        family.append(("cycle twin", k, cycle_with_pendants(k, [], twin_of=0)))
    return family


def test_conjecture2(k_max: int = DEFAULT_CONJECTURE2_K_MAX, max_n: int = DEFAULT_CONJECTURE_MAX_N,
                     verbose: bool = False, jobs: int = 1, store_path: StorePath = None) -> Dict:
    """
    Relate KB(H) = KB(C_k), k >= 7, to the shape of Tw(H).

    Items come from three sources: atlas hosts whose KB is some KB(C_k)
    (shape must match), atlas hosts whose Tw(H) has the shape (KB must be
    KB(C_k)), and the constructed positive family.
    """
    if k_max < OBSERVATION1_K_MIN:
        raise PreconditionError(f"k_max must be at least {OBSERVATION1_K_MIN}, got {k_max}")
    banner(f"KB(C_k) preimage shape, k <= {k_max}, hosts n <= {max_n}", verbose)
    report = new_report(CLAIM_CONJECTURE2, {"k_max": k_max, "max_n": max_n})
    report[REPORT_NOTES].append("Atlas hosts cover connected graphs with n <= max_n only.")

    hosts = list(generate_connected_up_to(max_n, min_n=2, jobs=jobs, store_path=store_path))
    for item in parallel_map(partial(_conjecture2_atlas_item, k_max=k_max), hosts, jobs):
        if item is not None:
            report[REPORT_ITEMS].append(item)

    for label, k, h in positive_family(k_max):
        report[REPORT_ITEMS].append(_conjecture2_item(h, biclique_graph(h).graph, f"family: {label}", k))

    bad = [item for item in report[REPORT_ITEMS] if not item["consistent"]]
    for item in bad:
        fail(f"COUNTEREXAMPLE: {item[ITEM_GRAPH6]} ({item['source']})", verbose)
    report[REPORT_COUNTS] = {"hosts": len(report[REPORT_ITEMS]), "inconsistent": len(bad)}
    ok(f"{len(report[REPORT_ITEMS]) - len(bad)}/{len(report[REPORT_ITEMS])} hosts consistent", verbose)
    return finish_report(report)


def _conjecture2_atlas_item(h: Graph, k_max: int) -> Optional[Dict]:
    """Item for an atlas host whose KB is KB(C_k) or whose Tw(H) has the cycle shape, else None."""
    kb = biclique_graph(h).graph
    k_kb = kb_cycle_length(kb)
    k_kb = k_kb if k_kb is not None and OBSERVATION1_K_MIN <= k_kb <= k_max else None
    k_shape = cycle_pendant_length(twin_reduce(h).graph)
    k_shape = k_shape if k_shape is not None and OBSERVATION1_K_MIN <= k_shape <= k_max else None
    if k_kb is None and k_shape is None:
        return None
    source = "atlas" if k_kb is not None else "atlas converse"
    return _conjecture2_item(h, kb, source, k_kb or k_shape)


def _conjecture2_item(h: Graph, kb: Graph, source: str, k: int) -> Dict:
    kb_matches = kb.n == k and are_isomorphic(kb, circulant(k, (1, 2)))
    shape_matches = cycle_pendant_length(twin_reduce(h).graph) == k
    return {
        ITEM_GRAPH6: to_graph6(h),
        "source": source,
        "k": k,
        "kb_is_kb_cycle": kb_matches,
        "tw_shape": shape_matches,
        "consistent": kb_matches == shape_matches,
    }


# =============================================================================
# FALSE-TWIN DELETION CONJECTURE
# =============================================================================

def test_conjecture3(max_n: int = DEFAULT_CONJECTURE_MAX_N, verbose: bool = False, jobs: int = 1,
                     store_path: StorePath = None) -> Dict:
    """
    For each biclique graph G with false twins: the status of G - q for every
    vertex q with a false twin, and the status of Tw(G).
    """
    banner(f"False-twin deletion conjecture, hosts n <= {max_n}", verbose)
    report = new_report(CLAIM_CONJECTURE3, {"max_n": max_n})
    report[REPORT_NOTES].append(COVERAGE_NOTE)

    family = biclique_graph_family(max_n, jobs, store_path)
    graphs = [g for g, _ in family]
    with_twins = 0
    for items in parallel_map(partial(_conjecture3_items, max_n=max_n, store_path=store_path), graphs, jobs):
        if items:
            with_twins += 1
            report[REPORT_ITEMS].extend(items)

    for item in report[REPORT_ITEMS]:
        if item[ITEM_STATUS] == STATUS_PROVED_NO:
            fail(f"COUNTEREXAMPLE: {item[ITEM_DETAIL]} of {item[ITEM_GRAPH6]} violates P3 containment", verbose)
    report[REPORT_COUNTS] = {"biclique_graphs": len(family), "with_false_twins": with_twins}
    return finish_report(report)


def _conjecture3_items(g: Graph, max_n: int, store_path: StorePath = None) -> List[Dict]:
    """Items for one biclique graph; empty when it has no false twins."""
    twinned = [mask for mask in false_twin_classes(g).classes if mask & (mask - 1)]
    if not twinned:
        return []
    record = to_graph6(g)
    items = []
    for mask in twinned:
        for q in iter_members(mask):
            rest, _ = remove_vertex(g, q)
            if not is_connected(rest):
                items.append(_item(rest, STATUS_UNKNOWN, **{ITEM_GRAPH6: record, "q": q, ITEM_DETAIL: "disconnected"}))
                continue
            status = _status_of(rest, max_n, store_path)
            status.update({ITEM_GRAPH6: record, "q": q, ITEM_DETAIL: "G - q"})
            items.append(status)
    status = _status_of(twin_reduce(g).graph, max_n, store_path)
    status.update({ITEM_GRAPH6: record, "q": None, ITEM_DETAIL: "Tw(G)"})
    items.append(status)
    return items


# harness entry points, not pytest tests
test_conjecture1.__test__ = False
test_conjecture2.__test__ = False
test_conjecture3.__test__ = False
