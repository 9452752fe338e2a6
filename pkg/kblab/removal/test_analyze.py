"""
Tests for the degree-two strip analysis and its certificates.
"""

import pytest

from kblab.atlas.canonical import are_isomorphic
from kblab.core.errors import PreconditionError
from kblab.core.graph import add_vertex, circulant, complete, crown, cycle, diamond, from_edge_list, path, remove_vertex
from kblab.lab.lab_constants import VERDICT_INCONCLUSIVE, VERDICT_IS_BICLIQUE, VERDICT_NOT_BICLIQUE
from kblab.lab.preimage import verify_preimage
from kblab.removal.analyze import (
    analyze_not_biclique,
    degree2_vertices,
    remove_all_degree2_chain,
)
from kblab.structure.conditions import p3_contained


def test_path_fails_immediately():
    result = analyze_not_biclique(path(3), max_preimage_n=5)
    assert result.verdict == VERDICT_NOT_BICLIQUE
    assert len(result.chain) == 1


def test_cycle_fails_immediately():
    result = analyze_not_biclique(cycle(5), max_preimage_n=5)
    assert result.verdict == VERDICT_NOT_BICLIQUE
    assert len(result.chain) == 1
    assert result.certificate.p3.witness == (0, 1, 2)


def test_triangle_is_a_biclique_graph():
    result = analyze_not_biclique(complete(3), max_preimage_n=4)
    assert result.verdict == VERDICT_IS_BICLIQUE
    assert verify_preimage(complete(3), result.certificate.preimage)


def test_diamond_preimage_needs_five_vertices():
    assert analyze_not_biclique(diamond(), max_preimage_n=4).verdict == VERDICT_INCONCLUSIVE
    result = analyze_not_biclique(diamond(), max_preimage_n=5)
    assert result.verdict == VERDICT_IS_BICLIQUE
    assert result.certificate.preimage.n == 5


def test_crown_stays_inconclusive():
    result = analyze_not_biclique(crown(), max_preimage_n=6)
    assert result.verdict == VERDICT_INCONCLUSIVE
    assert result.certificate is None
    assert len(result.chain) == 2
    assert result.chain[1].removed == 2
    assert are_isomorphic(result.chain[1].graph, diamond())
    assert result.chain[1].preimage is not None

    exhaustive = analyze_not_biclique(crown(), max_preimage_n=6, exhaustive=True)
    assert exhaustive.verdict == VERDICT_INCONCLUSIVE


def test_square_of_cycle_minus_vertex_with_ear():
    base, _ = remove_vertex(circulant(7, (1, 2)), 0)
    g = add_vertex(base, [0, 1])
    result = analyze_not_biclique(g, max_preimage_n=6)
    assert result.verdict == VERDICT_NOT_BICLIQUE
    cert = result.certificate
    assert p3_contained(cert.graph, cert.p3.witness) is None


def test_result_serializes():
    payload = analyze_not_biclique(crown(), max_preimage_n=6).to_dict()
    assert payload["verdict"] == VERDICT_INCONCLUSIVE
    assert payload["chain"][0]["removed"] is None
    assert payload["chain"][1]["preimage"] is not None


def test_strip_chain():
    chain = remove_all_degree2_chain(crown())
    assert [g.n for g in chain] == [5, 4, 3, 2]
    assert degree2_vertices(chain[-1]) == []
    assert remove_all_degree2_chain(complete(4)) == [complete(4)]


def test_rejects_disconnected_input():
    with pytest.raises(PreconditionError):
        analyze_not_biclique(from_edge_list(4, [(0, 1), (2, 3)]))
