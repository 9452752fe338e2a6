"""
Tests for the computer-checked claim sweeps.
"""

import pytest

from kblab.atlas.generate import clear_generation_cache
from kblab.core.errors import CapExceededError, PreconditionError
from kblab.lab import verify
from kblab.lab.lab_constants import CLAIM_LEMMA1, REPORT_CLAIM, REPORT_COUNTS, REPORT_EXCEPTIONAL, REPORT_ITEMS
from kblab.lab.lab_utils import reverify_report


def test_base_case_order_six_has_three_exceptions():
    report = verify.verify_lemma1_base(6)
    assert report[REPORT_CLAIM] == CLAIM_LEMMA1
    assert report[REPORT_COUNTS]["graphs"] == 61
    assert report[REPORT_COUNTS]["exceptional_graphs"] == 3
    assert len(report[REPORT_EXCEPTIONAL]) == 3
    assert all(row["kb_degree"] == 2 for row in report[REPORT_ITEMS])


@pytest.mark.slow
def test_base_case_order_seven_has_none():
    report = verify.verify_lemma1_base(7)
    assert report[REPORT_COUNTS]["graphs"] == 507
    assert report[REPORT_COUNTS]["exceptional_graphs"] == 0


def test_base_case_rejects_other_orders():
    with pytest.raises(PreconditionError):
        verify.verify_lemma1_base(5)


def test_kb_cycle_removals_fail_p3():
    report = verify.verify_observation1(range(7, 9))
    assert report[REPORT_COUNTS] == {
        "removals": 15,
        "violations": 0,
        "proved-yes": 0,
        "proved-no": 15,
        "unknown": 0,
    }
    assert reverify_report(report) == 15


def test_kb_cycle_range_is_bounded():
    with pytest.raises(PreconditionError):
        verify.verify_observation1([6, 7])
    with pytest.raises(CapExceededError):
        verify.verify_observation1([13])


def test_roundtrip_small_orders():
    report = verify.verify_theorem2_roundtrip(min_n=4, max_n=6)
    counts = report[REPORT_COUNTS]
    assert counts["cases"] > 0
    assert counts["failures"] == 0
    assert counts["verified"] == counts["cases"]
    assert counts["unmatched_at_7_plus"] == 0
    assert counts["fallback"] >= counts["cases"] - counts["family1"] - counts["family2"]


@pytest.mark.slow
def test_roundtrip_order_seven_matches_a_family():
    report = verify.verify_theorem2_roundtrip(min_n=7, max_n=7, jobs=2)
    assert report[REPORT_COUNTS]["failures"] == 0
    assert report[REPORT_COUNTS]["unmatched_at_7_plus"] == 0


def test_base_case_with_atlas_store(tmp_path):
    clear_generation_cache()
    db = tmp_path / "atlas.db"
    report = verify.verify_lemma1_base(6, store_path=db)
    assert db.exists()
    assert report[REPORT_COUNTS]["exceptional_graphs"] == 3


@pytest.mark.slow
def test_roundtrip_order_eight_matches_a_family():
    report = verify.verify_theorem2_roundtrip(min_n=8, max_n=8, jobs=4)
    counts = report[REPORT_COUNTS]
    assert counts["cases"] > 0
    assert counts["failures"] == 0
    assert counts["verified"] == counts["cases"]
    assert counts["unmatched_at_7_plus"] == 0
    assert counts["family1"] + counts["family2"] == counts["cases"]
