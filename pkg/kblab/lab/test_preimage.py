"""
Tests for the atlas preimage search.
"""

import pytest

from kblab.atlas.canonical import are_isomorphic
from kblab.core.errors import CapExceededError, PreconditionError
from kblab.atlas.generate import clear_generation_cache
from kblab.core.graph import circulant, complete, crown, cycle, diamond, empty_graph, from_edge_list, path
from kblab.lab.preimage import PreimageIndex, find_preimage, shared_index, verify_preimage
from kblab.structure.kb import biclique_graph


def test_small_preimages():
    assert find_preimage(empty_graph(1), 3) == complete(2)
    assert are_isomorphic(find_preimage(complete(2), 5), path(4))
    assert find_preimage(complete(3), 3).n == 3


def test_smallest_order_comes_first():
    host = find_preimage(diamond(), 6)
    assert host.n == 5
    assert are_isomorphic(biclique_graph(host).graph, diamond())


def test_non_biclique_graph_has_no_preimage():
    assert find_preimage(cycle(4), 6) is None
    assert find_preimage(cycle(5), 6) is None


@pytest.mark.slow
def test_square_of_cycle_comes_from_cycle():
    host = find_preimage(circulant(7, (1, 2)), 7)
    assert host is not None and host.n == 7
    assert verify_preimage(circulant(7, (1, 2)), host)


def test_private_index():
    index = PreimageIndex()
    assert find_preimage(diamond(), 5, index=index) is not None
    assert set(index._levels) == {2, 3, 4, 5}
    index.clear()
    assert index._levels == {}


def test_bounds_and_preconditions():
    with pytest.raises(CapExceededError):
        find_preimage(diamond(), 9)
    with pytest.raises(PreconditionError):
        find_preimage(from_edge_list(3, [(0, 1)]), 5)
    with pytest.raises(PreconditionError):
        find_preimage(empty_graph(0), 5)


def test_verify_preimage():
    assert verify_preimage(circulant(5, (1, 2)), complete(5)) is False
    assert verify_preimage(complete(3), complete(3))
    assert not verify_preimage(complete(1), empty_graph(1))


def test_store_backed_index(tmp_path):
    clear_generation_cache()
    db = tmp_path / "atlas.db"
    assert shared_index(db) is shared_index(str(db))
    assert shared_index(db) is not shared_index()
    host = find_preimage(diamond(), 5, store_path=db)
    assert db.exists()
    assert are_isomorphic(host, find_preimage(diamond(), 5))


@pytest.mark.slow
def test_order_eight_search():
    assert find_preimage(crown(), 8) is None
    host = find_preimage(diamond(), 8)
    assert host.n == 5
    assert verify_preimage(diamond(), host)
