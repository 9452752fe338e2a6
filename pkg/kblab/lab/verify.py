"""
Computer-Checked Claims

Sweeps that reproduce the exhaustive checks behind the degree-two removal
result:

1. Base case: in every connected twin-free graph on 7 (or 8) vertices, each
   biclique containing a K_{1,3} or equal to C_4 meets at least three other
   bicliques; on 6 vertices exactly three graphs fall short with degree two.
2. KB(C_k), k >= 7: deleting any vertex leaves an induced P3 outside every
   diamond and gem, so the result is not a biclique graph.
3. Roundtrip: every degree-two KB-vertex of every connected twin-free host
   in a range of orders is removed by remove_degree2 with a verified H'.

Each sweep returns a report dict (see lab_utils) and prints progress to
stderr when verbose.
"""

from functools import partial
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Union

from kblab.atlas.canonical import are_isomorphic
from kblab.atlas.generate import generate_twin_free_connected
from kblab.core.console import banner, fail, ok, say
from kblab.core.constants import PROGRESS_EVERY
from kblab.core.errors import CapExceededError, KBLabError, PreconditionError
from kblab.core.formats import parse_graph6, to_graph6
from kblab.core.graph import circulant, cycle, remove_vertex
from kblab.core.parallel import parallel_map
from kblab.lab.lab_constants import (
    CLAIM_LEMMA1,
    CLAIM_OBSERVATION1,
    CLAIM_THEOREM2,
    CONSTRUCTION_LINKED_COPY,
    CONSTRUCTION_PREIMAGE,
    FAMILY_GUARANTEE_N,
    ITEM_DETAIL,
    ITEM_GRAPH6,
    ITEM_STATUS,
    ITEM_SUBJECT,
    ITEM_WITNESS,
    LEMMA1_ORDERS,
    OBSERVATION1_K_MAX,
    OBSERVATION1_K_MIN,
    REPORT_COUNTS,
    REPORT_EXCEPTIONAL,
    REPORT_ITEMS,
    REPORT_NOTES,
    ROUNDTRIP_MAX_N,
    ROUNDTRIP_MIN_N,
    STATUS_PROVED_NO,
)
from kblab.lab.lab_utils import finish_report, new_report, witness_text
from kblab.removal.degree2 import remove_degree2
from kblab.structure.bicliques import biclique_shape, contains_k13, is_c4
from kblab.structure.conditions import check_theorem1
from kblab.structure.kb import biclique_graph


# =============================================================================
# K_{1,3} / C_4 BICLIQUE DEGREE BASE CASE
# =============================================================================

def _lemma1_rows(record: str) -> List[Dict]:
    host = parse_graph6(record)
    kb = biclique_graph(host)
    rows = []
    for q, b in enumerate(kb.bicliques):
        if contains_k13(b) or is_c4(b):
            left, right = biclique_shape(b)
            rows.append({
                ITEM_GRAPH6: record,
                "biclique": str(b),
                "shape": f"K{left},{right}",
                "kb_degree": kb.graph.degree(q),
            })
    return rows


def verify_lemma1_base(n: int, jobs: int = 1, verbose: bool = False,
                       store_path: Optional[Union[str, Path]] = None) -> Dict:
    """
    Scan every connected twin-free graph on n vertices for K_{1,3}/C_4
    bicliques of KB-degree below three.

    Returns:
        Report with counts (graphs, bicliques, violations), the graph6 records
        of graphs carrying a violation as exceptional, and one item per
        violating biclique

    Raises:
        PreconditionError: if n is not a supported order
    """
    if n not in LEMMA1_ORDERS:
        raise PreconditionError(f"Base-case scan supports n in {LEMMA1_ORDERS}, got {n}")
    banner(f"K1,3 / C4 biclique degree scan, n = {n}", verbose)
    report = new_report(CLAIM_LEMMA1, {"n": n})

    records = [to_graph6(g) for g in generate_twin_free_connected(n, jobs, store_path, verbose)]
    say(f"Scanning {len(records):,} twin-free graphs...", verbose)
    scanned_bicliques = 0
    exceptional = []
    for rows in parallel_map(_lemma1_rows, records, jobs):
        scanned_bicliques += len(rows)
        low = [row for row in rows if row["kb_degree"] < 3]
        if low:
            exceptional.append(low[0][ITEM_GRAPH6])
            report[REPORT_ITEMS].extend(low)

    report[REPORT_COUNTS] = {
        "graphs": len(records),
        "bicliques": scanned_bicliques,
        "violations": len(report[REPORT_ITEMS]),
        "exceptional_graphs": len(exceptional),
    }
    report[REPORT_EXCEPTIONAL] = exceptional
    if exceptional:
        fail(f"{len(exceptional)} graphs with a K1,3/C4 biclique of KB-degree < 3", verbose)
    else:
        ok(f"All {scanned_bicliques:,} K1,3/C4 bicliques have KB-degree >= 3", verbose)
    return finish_report(report)


# =============================================================================
# KB(C_k) VERTEX REMOVAL
# =============================================================================

def verify_observation1(k_range: Iterable[int], verbose: bool = False) -> Dict:
    """
    Check that deleting any vertex of KB(C_k) violates P3 containment.

    Returns:
        Report with one item per (k, q); status proved-no with the witness
        when the deletion fails the check, "violation" otherwise

    Raises:
        PreconditionError: if some k < 7
        CapExceededError: if some k > 12
    """
    ks = sorted(set(k_range))
    for k in ks:
        if k < OBSERVATION1_K_MIN:
            raise PreconditionError(f"KB(C_k) removal check needs k >= {OBSERVATION1_K_MIN}, got {k}")
        if k > OBSERVATION1_K_MAX:
            raise CapExceededError(f"KB(C_k) removal check supports k <= {OBSERVATION1_K_MAX}, got {k}")

    banner(f"KB(C_k) vertex removal, k = {ks}", verbose)
    report = new_report(CLAIM_OBSERVATION1, {"k": ks})
    violations = 0
    for k in ks:
        kb = biclique_graph(cycle(k)).graph
        if not are_isomorphic(kb, circulant(k, (1, 2))):
            report[REPORT_NOTES].append(f"KB(C_{k}) is not circulant({k}, {{1, 2}})")
        failed = 0
        for q in range(kb.n):
            rest, _ = remove_vertex(kb, q)
            p3 = check_theorem1(rest)
            report[REPORT_ITEMS].append({
                "k": k,
                "q": q,
                ITEM_SUBJECT: to_graph6(rest),
                ITEM_STATUS: STATUS_PROVED_NO if not p3.passed else "violation",
                ITEM_WITNESS: witness_text(p3.witness),
            })
            if p3.passed:
                violations += 1
            else:
                failed += 1
        ok(f"k = {k}: {failed}/{kb.n} removals fail P3 containment", verbose)

    report[REPORT_COUNTS] = {"removals": len(report[REPORT_ITEMS]), "violations": violations}
    return finish_report(report)


# =============================================================================
# DEGREE-TWO REMOVAL ROUNDTRIP
# =============================================================================

def _roundtrip_rows(record: str, store_path: Optional[Union[str, Path]] = None) -> List[Dict]:
    host = parse_graph6(record)
    kb = biclique_graph(host)
    rows = []
    for q in range(kb.graph.n):
        if kb.graph.degree(q) != 2:
            continue
        row = {
            ITEM_GRAPH6: record, "n": host.n, "q": q, "family": None, "verified": False,
            "construction": None, "diagnostic": None, ITEM_DETAIL: None,
        }
        try:
            result = remove_degree2(host, q, kb, store_path)
            row["family"] = result.plan.family
            row["construction"] = result.construction
            row["diagnostic"] = result.diagnostic
            row["verified"] = result.verified
            row["h_prime"] = to_graph6(result.h_prime)
        except KBLabError as e:
            row[ITEM_DETAIL] = f"{type(e).__name__}: {e}"
        row.setdefault("h_prime", None)
        rows.append(row)
    return rows


def verify_theorem2_roundtrip(min_n: int = ROUNDTRIP_MIN_N, max_n: int = ROUNDTRIP_MAX_N,
                              jobs: int = 1, verbose: bool = False,
                              store_path: Optional[Union[str, Path]] = None) -> Dict:
    """
    Run remove_degree2 on every degree-two KB-vertex of every connected
    twin-free host with min_n <= n <= max_n.

    Returns:
        Report with one item per (host, q) and counts of verified cases,
        failures, the construction used, and hosts on 7+ vertices that matched
        no family
    """
    banner(f"Degree-2 removal roundtrip, n = {min_n}..{max_n}", verbose)
    report = new_report(CLAIM_THEOREM2, {"min_n": min_n, "max_n": max_n})
    for n in range(min_n, max_n + 1):
        records = [to_graph6(g) for g in generate_twin_free_connected(n, jobs, store_path, verbose)]
        before = len(report[REPORT_ITEMS])
        for index, rows in enumerate(parallel_map(partial(_roundtrip_rows, store_path=store_path), records, jobs), 1):
            report[REPORT_ITEMS].extend(rows)
            if index % PROGRESS_EVERY == 0:
                say(f"   [{index:,}/{len(records):,}] hosts of order {n}", verbose)
        ok(f"n = {n}: {len(report[REPORT_ITEMS]) - before:,} degree-2 cases on {len(records):,} hosts", verbose)

    items = report[REPORT_ITEMS]
    report[REPORT_COUNTS] = {
        "cases": len(items),
        "verified": sum(1 for row in items if row["verified"]),
        "failures": sum(1 for row in items if not row["verified"]),
        "family1": sum(1 for row in items if row["family"] == 1),
        "family2": sum(1 for row in items if row["family"] == 2),
        "linked_copy": sum(1 for row in items if row["construction"] == CONSTRUCTION_LINKED_COPY),
        "fallback": sum(1 for row in items if row["construction"] == CONSTRUCTION_PREIMAGE),
        "unmatched_at_7_plus": sum(
            1 for row in items if row["n"] >= FAMILY_GUARANTEE_N and row["family"] is None
        ),
    }
    if report[REPORT_COUNTS]["failures"]:
        fail(f"{report[REPORT_COUNTS]['failures']} roundtrip failures", verbose)
    return finish_report(report)
