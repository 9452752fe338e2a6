"""
Tests for false-twin classes and the Tw(G) reduction.
"""

import pytest

from kblab.atlas.canonical import are_isomorphic
from kblab.atlas.generate import connected_graphs
from kblab.core.graph import complete, complete_bipartite, cycle, path, star
from kblab.structure.twins import false_twin_classes, is_twin_free, twin_pairs, twin_reduce


def test_star_collapses_to_edge():
    partition = false_twin_classes(star(3))
    assert partition.classes == (0b0001, 0b1110)
    assert partition.representatives == (0, 1)
    assert partition.class_of(3) == 0b1110
    assert not partition.is_trivial

    reduction = twin_reduce(star(3))
    assert reduction.graph == complete(2)
    assert reduction.kept == (0, 1)
    assert reduction.vertex_map == {0: 0, 1: 1, 2: 1, 3: 1}


def test_even_cycle_and_complete_bipartite():
    assert twin_pairs(cycle(4)) == [(0, 2), (1, 3)]
    assert twin_reduce(cycle(4)).graph == complete(2)
    assert twin_reduce(complete_bipartite(3, 4)).graph.n == 2


def test_adjacent_vertices_are_never_false_twins():
    assert is_twin_free(complete(4))
    assert false_twin_classes(complete(4)).is_trivial
    assert is_twin_free(cycle(5))
    assert is_twin_free(path(4))
    assert not is_twin_free(path(3))


def test_class_of_unknown_vertex():
    with pytest.raises(KeyError):
        false_twin_classes(path(3)).class_of(7)


def test_reduction_is_twin_free_and_idempotent():
    for n in range(2, 7):
        for g in connected_graphs(n):
            reduction = twin_reduce(g)
            tw = reduction.graph
            assert is_twin_free(tw)
            assert twin_reduce(tw).graph == tw
            assert set(reduction.vertex_map) == set(range(g.n))
            for v, image in reduction.vertex_map.items():
                rep = reduction.kept[image]
                assert g.adj[v] == g.adj[rep]


def test_twin_free_graph_is_unchanged():
    reduction = twin_reduce(cycle(7))
    assert reduction.graph == cycle(7)
    assert reduction.vertex_map == {v: v for v in range(7)}
    assert are_isomorphic(twin_reduce(path(5)).graph, path(5))
