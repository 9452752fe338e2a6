"""
External Graph Formats

Readers and writers for the text formats kblab exchanges with other tools:

1. graph6 - decoded and encoded by networkx, with the size header, character
   range, body length and padding bits validated here first
2. edge list - first line "n", then one "u v" pair per line
3. DOT - undirected graph text for rendering figures
4. networkx - conversion to and from nx.Graph for the library algorithms

graph6 files hold one record per line and may start with the optional
'>>graph6<<' header.
"""

import os
from pathlib import Path
from typing import Iterable, List, Optional, Union

import networkx as nx

from kblab.core.constants import (
    EDGE_LIST_COMMENT,
    GRAPH6_BITS_PER_CHAR,
    GRAPH6_HEADER,
    GRAPH6_LONG_MARKER,
    GRAPH6_LONG_N,
    GRAPH6_MAX_CHAR,
    GRAPH6_OFFSET,
    GRAPH6_SHORT_N,
)
from kblab.core.errors import EdgeListFormatError, Graph6FormatError
from kblab.core.graph import Graph, VertexSet, from_edge_list, iter_members


# =============================================================================
# NETWORKX BRIDGE
# =============================================================================

def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nxg


def from_networkx(nxg: nx.Graph) -> Graph:
    """Convert a networkx graph on nodes 0..n-1."""
    return from_edge_list(nxg.number_of_nodes(), nxg.edges())


# =============================================================================
# GRAPH6
# =============================================================================

def _decode_size(data: bytes) -> tuple:
    """Return (n, header_length)."""
    if not data:
        raise Graph6FormatError("Empty graph6 record")
    if data[0] != ord(GRAPH6_LONG_MARKER):
        return data[0] - GRAPH6_OFFSET, 1
    if len(data) >= 2 and data[1] == ord(GRAPH6_LONG_MARKER):
        raise Graph6FormatError("36-bit graph6 size headers are not supported")
    if len(data) < 4:
        raise Graph6FormatError("Truncated 18-bit graph6 size header")
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - GRAPH6_OFFSET)
    if n <= GRAPH6_SHORT_N:
        raise Graph6FormatError(f"Non-minimal graph6 size header for n={n}")
    return n, 4


def _strip_record(text: str) -> str:
    record = text.strip()
    if record.startswith(GRAPH6_HEADER):
        record = record[len(GRAPH6_HEADER):].strip()
    return record


def _validate_graph6(data: bytes) -> None:
    """Checks networkx leaves out: character range, size header form, body length, padding."""
    for position, byte in enumerate(data):
        if not GRAPH6_OFFSET <= byte <= GRAPH6_MAX_CHAR:
            raise Graph6FormatError(f"Character {chr(byte)!r} at position {position} outside 63..126")

    n, header = _decode_size(data)
    bit_count = n * (n - 1) // 2
    body_len = -(-bit_count // GRAPH6_BITS_PER_CHAR)
    body = data[header:]
    if len(body) != body_len:
        raise Graph6FormatError(f"graph6 body has {len(body)} characters, expected {body_len} for n={n}")
    padding = body_len * GRAPH6_BITS_PER_CHAR - bit_count
    if body and (body[-1] - GRAPH6_OFFSET) & ((1 << padding) - 1):
        raise Graph6FormatError("Nonzero padding bits at the end of the graph6 record")


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 record.

    Args:
        text: The record, optionally prefixed with '>>graph6<<'

    Returns:
        The decoded Graph

    Raises:
        Graph6FormatError: on a malformed header, a character outside 63..126,
            a wrong body length or nonzero padding bits
    """
    record = _strip_record(text)
    try:
        data = record.encode("ascii")
    except UnicodeEncodeError as e:
        raise Graph6FormatError(f"Non-ASCII character in graph6 record: {e}") from e

    _validate_graph6(data)
    try:
        nxg = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError) as e:
        raise Graph6FormatError(f"Could not decode graph6 record {record!r}: {e}") from e
    return from_networkx(nxg)


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 record (no header, no newline)."""
    if g.n > GRAPH6_LONG_N:
        raise Graph6FormatError(f"graph6 size header cannot encode n={g.n}")
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def read_graph6_file(path: Union[str, Path]) -> List[Graph]:
    """Read every graph6 record of a file, one per line; blank lines are skipped."""
    graphs = []
    with open(path, "r") as f:
        for line_no, line in enumerate(f, 1):
            record = _strip_record(line)
            if not record:
                continue
            try:
                graphs.append(parse_graph6(record))
            except Graph6FormatError as e:
                raise Graph6FormatError(f"{path}:{line_no}: {e}") from e
    return graphs


def write_graph6_file(path: Union[str, Path], graphs: Iterable[Graph]) -> int:
    """
    Write graphs to a graph6 file atomically.

    Args:
        path: Destination file
        graphs: Graphs to write, one record per line

    Returns:
        Number of records written
    """
    final_path = Path(path)
    final_path.parent.mkdir(parents=True, exist_ok=True)
    temp_path = final_path.with_name(final_path.name + ".tmp")
    count = 0
    try:
        with open(temp_path, "w") as f:
            for g in graphs:
                f.write(to_graph6(g) + "\n")
                count += 1
        os.replace(temp_path, final_path)
    except Exception:
        if temp_path.exists():
            temp_path.unlink()
        raise
    return count


# =============================================================================
# EDGE LIST
# =============================================================================

def parse_edge_list(text: str) -> Graph:
    """
    Decode the plain edge-list format: "n" on the first line, then "u v" lines.

    Blank lines and lines starting with '#' are ignored.
    """
    lines = [
        line.split(EDGE_LIST_COMMENT, 1)[0].strip()
        for line in text.splitlines()
    ]
    lines = [line for line in lines if line]
    if not lines:
        raise EdgeListFormatError("Empty edge list")
    try:
        n = int(lines[0])
    except ValueError as e:
        raise EdgeListFormatError(f"First line must be the vertex count, got {lines[0]!r}") from e

    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"Expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as e:
            raise EdgeListFormatError(f"Non-integer vertex in {line!r}") from e
    return from_edge_list(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def looks_like_edge_list(text: str) -> bool:
    """graph6 never uses digits, so a digit-only first line marks an edge list."""
    for line in text.splitlines():
        stripped = line.split(EDGE_LIST_COMMENT, 1)[0].strip()
        if stripped:
            return stripped.isdigit()
    return False


def parse_graph_text(text: str) -> Graph:
    """Decode either format, detected from the first meaningful line."""
    if looks_like_edge_list(text):
        return parse_edge_list(text)
    records = [_strip_record(line) for line in text.splitlines()]
    records = [r for r in records if r]
    if not records:
        raise Graph6FormatError("No graph6 record found")
    return parse_graph6(records[0])


# =============================================================================
# DOT
# =============================================================================

def to_dot(g: Graph, name: str = "G", highlight: Optional[VertexSet] = None,
           labels: Optional[dict] = None) -> str:
    """
    Render a graph as DOT text.

    Args:
        g: Graph to render
        name: DOT graph identifier
        highlight: Vertices drawn bold; edges inside the set are drawn bold too
        labels: Optional vertex -> label text

    Returns:
        DOT source
    """
    highlight = highlight or 0
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = []
        if labels and v in labels:
            attrs.append(f'label="{labels[v]}"')
        if highlight >> v & 1:
            attrs.append("penwidth=3")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {v}{suffix};")
    for u, v in g.edges():
        bold = highlight >> u & 1 and highlight >> v & 1
        lines.append(f"  {u} -- {v}{' [penwidth=3]' if bold else ''};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def vertex_list(mask: VertexSet) -> str:
    """Space-separated ascending vertex list."""
    return " ".join(str(v) for v in iter_members(mask))
