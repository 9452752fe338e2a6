"""
Tests for the conjecture harnesses on small host bounds.
"""

import pytest

from kblab.atlas.canonical import are_isomorphic
from kblab.atlas.generate import clear_generation_cache
from kblab.core.errors import PreconditionError, VerificationError
from kblab.core.graph import circulant, complete, cycle, from_edge_list, path
from kblab.lab import conjectures
from kblab.lab.lab_constants import (
    ITEM_DETAIL,
    ITEM_STATUS,
    REPORT_COUNTS,
    REPORT_ITEMS,
    REPORT_NOTES,
    STATUS_PROVED_NO,
    STATUS_PROVED_YES,
)
from kblab.lab.lab_utils import reverify_report
from kblab.structure.kb import biclique_graph


def test_biclique_graph_family_is_distinct():
    family = conjectures.biclique_graph_family(4)
    # KB(K2) = K1, KB(K3) = K3, KB(P4) = K2, KB(paw) = K3, KB(K4) = L(K4)
    assert len(family) == 4
    for kb, host in family:
        assert are_isomorphic(biclique_graph(host).graph, kb)


def test_cycle_pendant_shape():
    assert conjectures.cycle_pendant_length(cycle(7)) == 7
    assert conjectures.cycle_pendant_length(conjectures.cycle_with_pendants(7, [0, 3])) == 7
    assert conjectures.cycle_pendant_length(conjectures.cycle_with_pendants(7, [0, 0])) is None
    assert conjectures.cycle_pendant_length(path(5)) is None
    assert conjectures.cycle_pendant_length(complete(4)) is None


def test_positive_family_members_have_kb_cycle():
    for label, k, host in conjectures.positive_family(7):
        assert are_isomorphic(biclique_graph(host).graph, circulant(k, (1, 2))), label


def test_conjecture1_small_hosts():
    report = conjectures.test_conjecture1(max_n=5)
    assert report[REPORT_NOTES] == [conjectures.COVERAGE_NOTE]
    assert report[REPORT_COUNTS].get(STATUS_PROVED_NO, 0) == 0
    assert report[REPORT_COUNTS]["excluded_kb_cycles"] == 0
    reverify_report(report)


def test_conjecture2_small_hosts():
    report = conjectures.test_conjecture2(k_max=7, max_n=5)
    assert report[REPORT_COUNTS]["inconsistent"] == 0
    assert report[REPORT_COUNTS]["hosts"] == len(conjectures.positive_family(7))
    assert all(item["consistent"] for item in report[REPORT_ITEMS])


def test_conjecture2_needs_long_cycles():
    with pytest.raises(PreconditionError):
        conjectures.test_conjecture2(k_max=6)


def test_conjecture3_small_hosts():
    report = conjectures.test_conjecture3(max_n=5)
    assert all(item[ITEM_STATUS] != STATUS_PROVED_NO for item in report[REPORT_ITEMS])
    reverify_report(report)



def test_failed_degree2_removal_falls_through_to_preimage_search(monkeypatch):
    def broken_removal(host, q, kb=None, store_path=None):
        raise VerificationError("no host found")

    monkeypatch.setattr(conjectures, "remove_degree2", broken_removal)
    # pendant 0 on 1, path 1-2, triangle 2-3-4; KB(host) is a diamond
    host = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)])
    item = conjectures._conjecture1_item((biclique_graph(host).graph, host), max_n=5)
    assert item[ITEM_STATUS] == STATUS_PROVED_YES
    assert "degree-2 removal of" in item[ITEM_DETAIL]
    assert "VerificationError" in item[ITEM_DETAIL]
    assert item[ITEM_DETAIL].endswith("preimage search")


def test_worker_count_does_not_change_items():
    for run in (conjectures.test_conjecture1, conjectures.test_conjecture3):
        serial = run(max_n=5)
        parallel = run(max_n=5, jobs=2)
        assert parallel[REPORT_ITEMS] == serial[REPORT_ITEMS]
        assert parallel[REPORT_COUNTS] == serial[REPORT_COUNTS]


def test_atlas_store_is_used(tmp_path):
    clear_generation_cache()
    db = tmp_path / "atlas.db"
    stored = conjectures.test_conjecture1(max_n=5, store_path=db)
    assert db.exists()
    assert stored[REPORT_ITEMS] == conjectures.test_conjecture1(max_n=5)[REPORT_ITEMS]
    assert conjectures.test_conjecture1(max_n=5, store_path=db)[REPORT_ITEMS] == stored[REPORT_ITEMS]


def test_harness_entry_points_are_not_collected():
    for run in (conjectures.test_conjecture1, conjectures.test_conjecture2, conjectures.test_conjecture3):
        assert run.__test__ is False

@pytest.mark.slow
def test_conjectures_order_seven():
    for report in (
        conjectures.test_conjecture1(max_n=7),
        conjectures.test_conjecture2(k_max=9, max_n=7),
        conjectures.test_conjecture3(max_n=7),
    ):
        reverify_report(report)
