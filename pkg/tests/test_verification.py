"""Suite dispatcher behavior and the oracle-anchor verifiers."""

import pytest

from polybernoulli.reports import all_passed
from polybernoulli.verification import (
    SUITE_NAMES,
    run_suite,
    verify_gen_numbers_anchor,
    verify_iterated_integral,
    verify_negative_index,
    verify_pb_closed_form,
)


def test_oracle_verifiers_pass_on_default_grids():
    assert all_passed(verify_pb_closed_form(n_max=10))
    assert all_passed(verify_negative_index(n_max=10))
    assert all_passed(verify_iterated_integral(k_max=4, order=10))
    assert all_passed(verify_gen_numbers_anchor(n_max=8, points=2))


def test_negative_index_reports_three_views():
    reports = verify_negative_index(n_max=6)
    assert [r.identity_id for r in reports] == ["ORACLE"] * 3
    assert len({r.detail for r in reports}) == 3


def test_run_suite_selects_one_family():
    reports = run_suite("T3", n_max=6, k_min=-2, k_max=2)
    assert [r.identity_id for r in reports] == ["T3.18", "T3.19"]
    assert all_passed(reports)


def test_run_suite_all_order_and_outcome():
    reports = run_suite("all", n_max=6, k_min=-2, k_max=2)
    ids = [r.identity_id for r in reports]
    assert ids == [
        "T1.11", "T1.12", "T1.13", "T1.14", "T1.15", "T1.16",
        "T2.17", "T2.17", "T2.17",
        "T3.18", "T3.19",
        "T4.20", "T4.21",
        "T5", "T5",
        "C1",
        "E1", "E2", "E3",
        "ORACLE", "ORACLE", "ORACLE", "ORACLE", "ORACLE", "ORACLE",
    ]
    assert all_passed(reports)


def test_run_suite_deterministic():
    first = run_suite("T1", n_max=5, k_min=-2, k_max=2, seed=11)
    second = run_suite("T1", n_max=5, k_min=-2, k_max=2, seed=11)
    assert first == second


def test_run_suite_rejects_bad_input():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("T9")
    with pytest.raises(ValueError, match="empty"):
        run_suite("T1", k_min=2, k_max=-2)
    assert "all" in SUITE_NAMES
