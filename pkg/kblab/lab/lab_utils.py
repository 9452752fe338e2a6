"""
Lab Report Utilities and Validation Functions

This module provides helper functions for lab reports: report assembly,
JSON plus parquet export with row-count validation, the markdown index of
written reports, and independent re-verification of every certificate a
report carries.
"""

import json
import os
import time
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import polars as pl
import pyarrow.parquet as pq

from kblab.atlas.atlas_constants import CANONICAL_CAP
from kblab.atlas.canonical import are_isomorphic, canonical_form, graph_invariant
from kblab.core.console import fail, ok
from kblab.core.errors import VerificationError
from kblab.core.formats import parse_graph6
from kblab.core.graph import Graph, circulant
from kblab.lab.lab_constants import (
    ITEM_CERTIFICATE,
    ITEM_STATUS,
    ITEM_SUBJECT,
    ITEM_WITNESS,
    METADATA_CLAIM,
    METADATA_FILE_SIZE_MB,
    METADATA_ITEMS,
    METADATA_SUMMARY,
    REPORT_CLAIM,
    REPORT_COUNTS,
    REPORT_EXCEPTIONAL,
    REPORT_INDEX_NAME,
    REPORT_ITEMS,
    REPORT_JSON_EXTENSION,
    REPORT_NOTES,
    REPORT_PARAMETERS,
    REPORT_PARQUET_EXTENSION,
    REPORT_SCHEMA_VERSION,
    REPORT_WALL_TIME,
    SCHEMA_VERSION,
    STATUS_PROVED_NO,
    STATUS_PROVED_YES,
    STATUS_UNKNOWN,
)
from kblab.lab.preimage import verify_preimage
from kblab.structure.conditions import is_induced_p3, p3_contained


# =============================================================================
# REPORT ASSEMBLY
# =============================================================================

def new_report(claim: str, parameters: Dict) -> Dict:
    """Empty report for a claim; the clock starts here."""
    return {
        REPORT_SCHEMA_VERSION: SCHEMA_VERSION,
        REPORT_CLAIM: claim,
        REPORT_PARAMETERS: dict(parameters),
        REPORT_COUNTS: {},
        REPORT_EXCEPTIONAL: [],
        REPORT_ITEMS: [],
        REPORT_NOTES: [],
        REPORT_WALL_TIME: time.perf_counter(),
    }


def finish_report(report: Dict) -> Dict:
    """Stop the clock and add per-status counts of the items."""
    report[REPORT_WALL_TIME] = round(time.perf_counter() - report[REPORT_WALL_TIME], 3)
    statuses = [item[ITEM_STATUS] for item in report[REPORT_ITEMS] if ITEM_STATUS in item]
    if statuses:
        for status in (STATUS_PROVED_YES, STATUS_PROVED_NO, STATUS_UNKNOWN):
            report[REPORT_COUNTS][status] = statuses.count(status)
    return report


def witness_text(triple: Optional[Sequence[int]]) -> Optional[str]:
    return " ".join(str(v) for v in triple) if triple else None


def parse_witness(text: str) -> Tuple[int, int, int]:
    x, y, z = (int(part) for part in text.split())
    return x, y, z


def report_json(report: Dict) -> str:
    """Deterministic JSON text: sorted keys, fixed indentation."""
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


# =============================================================================
# EXPORT
# =============================================================================

def get_parquet_row_count(parquet_path: Union[str, Path]) -> int:
    return pq.read_metadata(parquet_path).num_rows


def get_file_size_mb(file_path: Union[str, Path]) -> float:
    return os.path.getsize(file_path) / (1024 * 1024)


def items_frame(report: Dict) -> pl.DataFrame:
    """Per-item table of a report; an empty report gives an empty frame."""
    items = report[REPORT_ITEMS]
    if not items:
        return pl.DataFrame({REPORT_CLAIM: []}, schema={REPORT_CLAIM: pl.Utf8})
    frame = pl.DataFrame(items, infer_schema_length=None)
    return frame.with_columns(pl.lit(report[REPORT_CLAIM]).alias(REPORT_CLAIM))


def write_report(report: Dict, out_dir: Union[str, Path], verbose: bool = False) -> Dict:
    """
    Write <claim>.json and <claim>.parquet into out_dir atomically.

    Both files are written to .tmp siblings first; the parquet row count is
    validated against the item count before either file is renamed into place.

    Returns:
        Index metadata for the written report

    Raises:
        VerificationError: if the parquet row count does not match
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    claim = report[REPORT_CLAIM]
    json_path = out / f"{claim}{REPORT_JSON_EXTENSION}"
    parquet_path = out / f"{claim}{REPORT_PARQUET_EXTENSION}"
    json_tmp = json_path.with_name(json_path.name + ".tmp")
    parquet_tmp = parquet_path.with_name(parquet_path.name + ".tmp")

    try:
        json_tmp.write_text(report_json(report))
        items_frame(report).write_parquet(parquet_tmp)

        rows = get_parquet_row_count(parquet_tmp)
        expected = len(report[REPORT_ITEMS])
        if rows != expected:
            fail(f"Row count mismatch for {claim}: items ({expected}) != parquet ({rows})", verbose)
            raise VerificationError(f"{parquet_path.name}: {rows} rows written, expected {expected}")

        os.replace(json_tmp, json_path)
        os.replace(parquet_tmp, parquet_path)
    except Exception:
        for tmp in (json_tmp, parquet_tmp):
            if tmp.exists():
                tmp.unlink()
        raise

    ok(f"{claim}: {expected:,} items -> {json_path}", verbose)
    return {
        METADATA_CLAIM: claim,
        METADATA_ITEMS: expected,
        METADATA_FILE_SIZE_MB: get_file_size_mb(parquet_path),
        METADATA_SUMMARY: ", ".join(f"{k}={v}" for k, v in sorted(report[REPORT_COUNTS].items())),
    }


def load_report(path: Union[str, Path]) -> Dict:
    with open(path, "r") as f:
        return json.load(f)


def generate_report_index(out_dir: Union[str, Path]) -> str:
    """
    Markdown table of every report JSON in out_dir, written to its README.md.

    Returns:
        The markdown content
    """
    out = Path(out_dir)
    lines = [
        "# kblab Reports",
        "",
        "One JSON file and one parquet item table per claim.",
        "",
        "| Claim | Items | Counts | Parquet (MB) |",
        "| :--- | :--- | :--- | :--- |",
    ]
    for json_path in sorted(out.glob(f"*{REPORT_JSON_EXTENSION}")):
        report = load_report(json_path)
        parquet_path = json_path.with_suffix(REPORT_PARQUET_EXTENSION)
        size = f"{get_file_size_mb(parquet_path):.4f}" if parquet_path.exists() else "-"
        counts = ", ".join(f"{k}={v}" for k, v in sorted(report.get(REPORT_COUNTS, {}).items()))
        lines.append(f"| {report[REPORT_CLAIM]} | {len(report.get(REPORT_ITEMS, [])):,} | {counts} | {size} |")
    content = "\n".join(lines) + "\n"
    (out / REPORT_INDEX_NAME).write_text(content)
    return content


# =============================================================================
# RE-VERIFICATION
# =============================================================================

def reverify_report(report: Dict) -> int:
    """
    Independently re-check every certificate in a report.

    proved-yes items must carry a preimage whose KB is isomorphic to the
    subject; proved-no items must carry an uncontained induced P3 of the
    subject.

    Returns:
        Number of certificates checked

    Raises:
        VerificationError: on the first certificate that does not hold
    """
    checked = 0
    for item in report[REPORT_ITEMS]:
        status = item.get(ITEM_STATUS)
        if status == STATUS_PROVED_YES:
            subject = parse_graph6(item[ITEM_SUBJECT])
            host = parse_graph6(item[ITEM_CERTIFICATE])
            if not verify_preimage(subject, host):
                raise VerificationError(f"Preimage {item[ITEM_CERTIFICATE]} of {item[ITEM_SUBJECT]} fails")
            checked += 1
        elif status == STATUS_PROVED_NO:
            subject = parse_graph6(item[ITEM_SUBJECT])
            triple = parse_witness(item[ITEM_WITNESS])
            if not is_induced_p3(subject, triple) or p3_contained(subject, triple) is not None:
                raise VerificationError(f"P3 witness {item[ITEM_WITNESS]} of {item[ITEM_SUBJECT]} fails")
            checked += 1
    return checked


# =============================================================================
# GRAPH FAMILIES
# =============================================================================

def distinct_graphs(graphs: Iterable[Graph]) -> List[Tuple[int, Graph]]:
    """
    One representative per isomorphism class, with its first input index.

    Graphs up to CANONICAL_CAP vertices are keyed by canonical form; larger
    ones are bucketed by invariant and compared by isomorphism.
    """
    seen_keys = set()
    buckets: Dict[tuple, List[Graph]] = {}
    result = []
    for index, g in enumerate(graphs):
        if g.n <= CANONICAL_CAP:
            key = canonical_form(g).key
            if key in seen_keys:
                continue
            seen_keys.add(key)
        else:
            bucket = buckets.setdefault(graph_invariant(g), [])
            if any(are_isomorphic(other, g) for other in bucket):
                continue
            bucket.append(g)
        result.append((index, g))
    return result


def kb_cycle_length(g: Graph) -> Optional[int]:
    """k >= 5 when g is isomorphic to KB(C_k) = circulant(k, {1, 2}), else None."""
    if g.n < 5 or any(g.degree(v) != 4 for v in range(g.n)):
        return None
    return g.n if are_isomorphic(g, circulant(g.n, (1, 2))) else None
