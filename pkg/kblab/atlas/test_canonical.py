"""
Tests for canonical forms and isomorphism, with networkx as the reference.
"""

import random

import networkx as nx
import pytest

from kblab.atlas.atlas_constants import METHOD_EXHAUSTIVE
from kblab.atlas.canonical import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    find_isomorphism,
    graph_invariant,
    isomorphism_classes,
    refine_colors,
)
from kblab.atlas.generate import connected_graphs
from kblab.core.errors import CapExceededError, VerificationError
from kblab.core.formats import to_networkx
from kblab.core.graph import (
    Graph,
    circulant,
    complete_bipartite,
    cycle,
    from_edge_list,
    path,
    relabel,
    star,
)


def shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(g, perm)


def test_key_is_relabeling_invariant():
    rng = random.Random(1)
    for n in range(1, 7):
        for g in connected_graphs(n):
            key = canonical_form(g).key
            for _ in range(3):
                assert canonical_form(shuffled(g, rng)).key == key


def test_keys_separate_classes():
    for n in range(1, 7):
        level = connected_graphs(n)
        keys = {canonical_form(g).key for g in level}
        assert len(keys) == len(level), f"key collision at n={n}"


def test_keys_agree_with_networkx_on_random_pairs():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(4, 8)
        m = rng.randint(n - 1, n * (n - 1) // 2)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g1 = from_edge_list(n, rng.sample(pairs, m))
        g2 = from_edge_list(n, rng.sample(pairs, m))
        expected = nx.is_isomorphic(to_networkx(g1), to_networkx(g2))
        assert (canonical_form(g1) == canonical_form(g2)) == expected
        assert are_isomorphic(g1, g2) == expected


def test_canonical_graph_is_idempotent():
    for g in connected_graphs(5):
        assert canonical_graph(g) == g
    assert canonical_form(star(3)).graph6 == canonical_form(shuffled(star(3), random.Random(0))).graph6


def test_exhaustive_method_gives_same_partition():
    rng = random.Random(2)
    graphs = [shuffled(g, rng) for g in connected_graphs(5)] + list(connected_graphs(5))
    refine = [canonical_form(g).key for g in graphs]
    exhaustive = [canonical_form(g, METHOD_EXHAUSTIVE).key for g in graphs]
    for i in range(len(graphs)):
        for j in range(len(graphs)):
            assert (refine[i] == refine[j]) == (exhaustive[i] == exhaustive[j])


def test_caps():
    with pytest.raises(CapExceededError):
        canonical_labeling(cycle(17))
    with pytest.raises(CapExceededError):
        canonical_form(cycle(10), METHOD_EXHAUSTIVE)
    assert canonical_labeling(Graph(0, ())) == []


def test_find_isomorphism_returns_valid_witness():
    rng = random.Random(3)
    for g in (cycle(8), circulant(9, (1, 3)), complete_bipartite(3, 4), path(7)):
        h = shuffled(g, rng)
        mapping = find_isomorphism(g, h)
        assert mapping is not None
        assert sorted(mapping.values()) == list(range(g.n))
        for u, v in g.edges():
            assert h.has_edge(mapping[u], mapping[v])


def test_regular_non_isomorphic_pair():
    # both 4-regular on 8 vertices; the second is K4,4
    assert find_isomorphism(circulant(8, (1, 2)), circulant(8, (1, 3))) is None
    assert are_isomorphic(circulant(8, (1, 3)), complete_bipartite(4, 4))
    two_triangles = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not are_isomorphic(cycle(6), two_triangles)



def test_isomorphism_of_empty_and_mismatched_graphs():
    assert find_isomorphism(Graph(0, ()), Graph(0, ())) == {}
    assert find_isomorphism(path(4), star(3)) is None
    assert find_isomorphism(path(4), cycle(4)) is None


def test_bad_matcher_witness_is_rejected(monkeypatch):
    monkeypatch.setattr(nx, "vf2pp_isomorphism", lambda g1, g2: {0: 0, 1: 2, 2: 1, 3: 3})
    with pytest.raises(VerificationError):
        find_isomorphism(path(4), path(4))

def test_refine_colors():
    assert len(set(refine_colors(cycle(6), [0] * 6))) == 1
    colors = refine_colors(path(4), [1, 2, 2, 1])
    assert colors[0] == colors[3] and colors[1] == colors[2] and colors[0] != colors[1]


def test_invariant_and_classes():
    assert graph_invariant(cycle(5)) == graph_invariant(shuffled(cycle(5), random.Random(9)))
    graphs = [cycle(4), complete_bipartite(2, 2), path(4), star(3)]
    assert isomorphism_classes(graphs) == [[0, 1], [2], [3]]


def test_small_distinct_keys():
    assert canonical_form(path(4)).key != canonical_form(star(3)).key
    assert not are_isomorphic(cycle(6), complete_bipartite(3, 3))


def test_random_relabelings_keep_the_key():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(2, 10)
        g = from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        key = canonical_form(g).key
        for _ in range(20):
            assert canonical_form(shuffled(g, rng)).key == key
