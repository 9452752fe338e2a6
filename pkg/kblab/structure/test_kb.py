"""
Tests for biclique graphs.
"""

import random

import pytest

from kblab.atlas.canonical import are_isomorphic
from kblab.atlas.generate import connected_graphs
from kblab.core.errors import NotABicliqueError
from kblab.core.graph import (
    add_vertex,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    degree_sequence,
    diamond,
    path,
    paw,
    star,
)
from kblab.structure.bicliques import Biclique
from kblab.structure.kb import (
    biclique_graph,
    iterate_kb,
    kb_degree,
    kb_degree_sequence,
    kb_of_bicliques,
)
from kblab.structure.twins import twin_reduce


def test_kb_of_cycle_is_square_of_cycle():
    kb = biclique_graph(cycle(7))
    assert kb.graph.n == 7
    assert kb.host_n == 7
    assert are_isomorphic(kb.graph, circulant(7, (1, 2)))


def test_small_hosts():
    assert biclique_graph(star(3)).graph.n == 1
    assert biclique_graph(complete_bipartite(3, 3)).graph.n == 1
    assert are_isomorphic(biclique_graph(paw()).graph, complete(3))
    assert kb_degree_sequence(complete(4)) == (4,) * 6


def test_vertex_lookup():
    kb = biclique_graph(diamond())
    for q, b in enumerate(kb.bicliques):
        assert kb.vertex_of(b) == q
        assert kb.biclique_of_vertex(q) == b
    with pytest.raises(NotABicliqueError):
        kb.vertex_of(Biclique.from_lists([0], [1]))


def test_kb_degree_matches_graph_degree():
    for g in connected_graphs(5):
        kb = biclique_graph(g)
        for q, b in enumerate(kb.bicliques):
            assert kb_degree(g, b) == kb.graph.degree(q)
            assert kb_degree(g, b, kb) == kb.graph.degree(q)


def test_kb_degree_rejects_non_biclique():
    with pytest.raises(NotABicliqueError):
        kb_degree(cycle(5), Biclique.from_lists([0], [1]))


def test_intersection_graph_of_family():
    family = [Biclique.from_lists([0], [1]), Biclique.from_lists([2], [3]), Biclique.from_lists([1], [2])]
    g = kb_of_bicliques(family)
    assert g.edges() == [(0, 2), (1, 2)]


def test_iterate_kb():
    assert iterate_kb(cycle(7), 0) == cycle(7)
    assert are_isomorphic(iterate_kb(cycle(7), 1), circulant(7, (1, 2)))
    assert iterate_kb(star(3), 1).n == 1


def test_twin_reduction_preserves_kb():
    rng = random.Random(21)
    for g in connected_graphs(5):
        v = rng.randrange(g.n)
        h = add_vertex(g, [u for u in range(g.n) if g.has_edge(u, v)])
        tw = twin_reduce(h).graph
        assert are_isomorphic(biclique_graph(h).graph, biclique_graph(tw).graph)
        assert degree_sequence(biclique_graph(h).graph) == kb_degree_sequence(tw)


def test_kb_of_complete_graph_is_octahedron():
    assert are_isomorphic(biclique_graph(complete(4)).graph, circulant(6, (1, 2)))


def test_single_biclique_hosts():
    assert biclique_graph(path(3)).graph.n == 1
    assert biclique_graph(complete_bipartite(2, 3)).graph.n == 1
    assert kb_degree(path(3), Biclique.from_lists([1], [0, 2])) == 0


def test_kb_degree_examples():
    assert kb_degree(cycle(7), Biclique.from_lists([0], [1, 6])) == 4
    assert kb_degree(diamond(), Biclique.from_lists([0], [2])) == 2


def test_kb_of_cycles():
    for k in range(5, 13):
        assert are_isomorphic(biclique_graph(cycle(k)).graph, circulant(k, (1, 2))), f"k={k}"


@pytest.mark.slow
def test_twin_reduction_preserves_kb_on_atlas():
    for n in range(2, 8):
        for g in connected_graphs(n):
            tw = twin_reduce(g).graph
            if tw.n == g.n:
                continue
            assert are_isomorphic(biclique_graph(g).graph, biclique_graph(tw).graph)
