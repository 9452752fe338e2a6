"""
Tests for the induced P3 containment condition.
"""

import pytest

from kblab.atlas.generate import connected_graphs
from kblab.core.errors import PreconditionError
from kblab.core.graph import complete, crown, cycle, diamond, gem, path, remove_vertex
from kblab.structure.conditions import (
    KIND_DIAMOND,
    KIND_GEM,
    VERDICT_FAIL,
    VERDICT_PASS,
    ContainmentWitness,
    check_theorem1,
    induced_p3s,
    is_induced_diamond,
    is_induced_gem,
    p3_contained,
    p3_violations,
    verify_witness,
)
from kblab.structure.kb import biclique_graph


def test_induced_p3s():
    assert induced_p3s(diamond()) == [(1, 0, 3), (1, 2, 3)]
    assert induced_p3s(complete(4)) == []
    assert induced_p3s(path(3)) == [(0, 1, 2)]


def test_diamond_witness():
    witness = p3_contained(diamond(), (1, 0, 3))
    assert witness == ContainmentWitness(KIND_DIAMOND, (2,))
    assert verify_witness(diamond(), (1, 0, 3), witness)


def test_gem_witness():
    witness = p3_contained(gem(), (0, 4, 3))
    assert witness == ContainmentWitness(KIND_GEM, (1, 2))
    assert is_induced_gem(gem(), 0b11111)
    assert not is_induced_diamond(gem(), 0b11111)


def test_cycle_fails_with_first_p3():
    report = check_theorem1(cycle(4))
    assert report.verdict == VERDICT_FAIL
    assert report.witness == (0, 1, 2)
    assert not report.passed
    assert len(p3_violations(cycle(5))) == 5


def test_crown_passes_although_not_a_biclique_graph():
    report = check_theorem1(crown())
    assert report.verdict == VERDICT_PASS
    assert report.witness is None


def test_trace_records_every_p3():
    report = check_theorem1(gem(), trace=True)
    assert report.passed
    assert set(report.containment) == set(induced_p3s(gem()))
    for triple, witness in report.containment.items():
        assert verify_witness(gem(), triple, witness)
    as_dict = report.to_dict()
    assert as_dict["verdict"] == VERDICT_PASS
    assert len(as_dict["containment"]) == len(induced_p3s(gem()))


def test_precondition():
    with pytest.raises(PreconditionError):
        p3_contained(complete(3), (0, 1, 2))
    assert not verify_witness(diamond(), (1, 0, 3), ContainmentWitness("square", (2,)))


def test_biclique_graphs_pass():
    for n in range(2, 7):
        for h in connected_graphs(n):
            kb = biclique_graph(h).graph
            assert check_theorem1(kb).passed, f"KB of {h} failed"


@pytest.mark.slow
def test_biclique_graphs_pass_order_seven():
    for h in connected_graphs(7):
        assert check_theorem1(biclique_graph(h).graph).passed


def test_vertex_removals_from_kb_of_long_cycles_fail():
    for k in range(7, 11):
        kb = biclique_graph(cycle(k)).graph
        for q in range(k):
            reduced, _ = remove_vertex(kb, q)
            assert not check_theorem1(reduced).passed, f"k={k}, q={q}"
