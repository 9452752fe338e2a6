"""
Tests for graph6, edge-list and DOT formats, cross-checked against networkx.
"""

import random

import networkx as nx
import pytest

from kblab.atlas.generate import generate_connected_up_to
from kblab.core.errors import EdgeListFormatError, Graph6FormatError
from kblab.core.formats import (
    from_networkx,
    looks_like_edge_list,
    parse_edge_list,
    parse_graph6,
    parse_graph_text,
    read_graph6_file,
    to_dot,
    to_edge_list,
    to_graph6,
    to_networkx,
    write_graph6_file,
)
from kblab.core.graph import Graph, complete, cycle, diamond, empty_graph, from_edge_list


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def corpus():
    graphs = list(generate_connected_up_to(7))
    rng = random.Random(7)
    graphs.extend(random_graph(rng, rng.randint(1, 20), rng.random()) for _ in range(60))
    return graphs


def test_known_records():
    assert parse_graph6("@") == empty_graph(1)
    assert parse_graph6("A_") == complete(2)
    assert to_graph6(complete(2)) == "A_"
    assert to_graph6(empty_graph(0)) == "?"
    assert parse_graph6(">>graph6<<A_") == complete(2)


def test_round_trip_corpus():
    graphs = corpus()
    assert len(graphs) >= 1000
    for g in graphs:
        record = to_graph6(g)
        assert parse_graph6(record) == g
        assert to_graph6(parse_graph6(record)) == record


def test_agrees_with_networkx():
    for g in corpus()[::7]:
        record = to_graph6(g)
        nxg = nx.from_graph6_bytes(record.encode("ascii"))
        assert sorted(tuple(sorted(e)) for e in nxg.edges()) == g.edges()
        assert nxg.number_of_nodes() == g.n

        ref = nx.Graph()
        ref.add_nodes_from(range(g.n))
        ref.add_edges_from(g.edges())
        assert nx.to_graph6_bytes(ref, header=False).decode("ascii").strip() == record


def test_networkx_bridge():
    assert from_networkx(nx.cycle_graph(5)) == cycle(5)
    assert from_networkx(to_networkx(diamond())) == diamond()
    assert to_networkx(empty_graph(3)).number_of_nodes() == 3

    record = nx.to_graph6_bytes(nx.petersen_graph()).decode("ascii")
    assert record.startswith(">>graph6<<")
    assert parse_graph6(record) == from_networkx(nx.petersen_graph())


def test_long_header():
    g = cycle(63)
    record = to_graph6(g)
    assert record.startswith("~")
    assert parse_graph6(record) == g
    assert nx.from_graph6_bytes(record.encode("ascii")).number_of_edges() == 63


def test_malformed_records():
    with pytest.raises(Graph6FormatError):
        parse_graph6("")
    with pytest.raises(Graph6FormatError):
        parse_graph6("A")  # body missing
    with pytest.raises(Graph6FormatError):
        parse_graph6("A_?")  # body too long
    with pytest.raises(Graph6FormatError):
        parse_graph6("A`")  # nonzero padding
    with pytest.raises(Graph6FormatError):
        parse_graph6("B 0")
    with pytest.raises(Graph6FormatError):
        parse_graph6("~~??????")


def test_graph6_file_round_trip(tmp_path):
    graphs = [cycle(5), diamond(), complete(4)]
    target = tmp_path / "out" / "graphs.g6"
    assert write_graph6_file(target, graphs) == 3
    assert not (tmp_path / "out" / "graphs.g6.tmp").exists()

    target.write_text(">>graph6<<" + target.read_text() + "\n")
    assert read_graph6_file(target) == graphs


def test_graph6_file_reports_line(tmp_path):
    target = tmp_path / "bad.g6"
    target.write_text("A_\nA`\n")
    with pytest.raises(Graph6FormatError, match=":2:"):
        read_graph6_file(target)


def test_edge_list():
    text = "# diamond\n4\n0 1\n1 2\n2 3\n3 0\n0 2  # chord\n"
    assert parse_edge_list(text) == diamond()
    assert parse_edge_list(to_edge_list(cycle(6))) == cycle(6)
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("")
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("three\n")
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("3\n0 1 2\n")


def test_format_detection():
    assert looks_like_edge_list("4\n0 1\n")
    assert not looks_like_edge_list("Bg\n")
    assert parse_graph_text("3\n0 1\n1 2\n") == parse_graph_text("Bg")


def test_dot():
    text = to_dot(diamond(), name="D", highlight=0b0101, labels={0: "x"})
    assert text.startswith("graph D {")
    assert '0 [label="x", penwidth=3];' in text
    assert "0 -- 2 [penwidth=3];" in text
    assert "1 -- 2;" in text
