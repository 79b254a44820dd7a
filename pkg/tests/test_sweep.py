"""Tests for the sweep engine on small, fast configurations."""

import pytest

from mincodes.errors import BadParams
from mincodes.sweep import (CodeRegistry, default_instances, load_config,
                            run_criterion, run_sweep, validate_config,
                            write_distribution_csvs)


def by_check(result, name):
    return [c for c in result.checks if c.check == name]


def test_criterion_1_small_instances():
    res = run_criterion(1, instances=[(2, 2), (3, 3)])
    assert res.passed
    assert len(res.checks) == 6
    assert {c.check for c in res.checks} == {
        "params", "stratified-weights", "step-identity"}


def test_criterion_2_counter_instance_flagged():
    res = run_criterion(2, instances=[(3, 3)])
    assert res.passed
    counter, = by_check(res, "ratio-exceeds-threshold")
    assert counter.passed and counter.paper_discrepancy
    assert "5/7" in counter.detail


def test_criterion_2_strict_instance():
    res = run_criterion(2, instances=[(4, 3)])
    assert res.passed
    strict, = by_check(res, "ratio-below-threshold")
    assert strict.passed and not strict.paper_discrepancy
    assert "7/12" in strict.detail


def test_criterion_3_includes_count_note():
    res = run_criterion(3, instances=[(3, 3)])
    assert res.passed
    note, = by_check(res, "count-formula-note")
    assert note.passed and note.paper_discrepancy


def test_criterion_4_minimal_instance_passes():
    res = run_criterion(4, instances=[(4, 3, 3)])
    assert res.passed


def test_criterion_4_binary_instance_fails_flagged():
    res = run_criterion(4, instances=[(4, 3, 2)])
    assert not res.passed
    minimal, = by_check(res, "is-minimal")
    assert not minimal.passed and minimal.paper_discrepancy
    assert by_check(res, "params")[0].passed
    assert by_check(res, "distance-bound")[0].passed


def test_criterion_5_remark_fails_flagged():
    res = run_criterion(5, instances=[(3, 2, 2)])
    assert by_check(res, "stratified-weights")[0].passed
    assert by_check(res, "is-minimal")[0].passed
    remark, = by_check(res, "minimum-at-r-equals-s")
    assert not remark.passed and remark.paper_discrepancy


def test_criterion_6_case_weights_fail_flagged():
    res = run_criterion(6, instances=[(3, 3)])
    case, = by_check(res, "case-weights")
    assert not case.passed and case.paper_discrepancy
    assert "q-2" in case.detail
    for name in ("params", "is-minimal", "full-value"):
        assert by_check(res, name)[0].passed


def test_criterion_9_passes():
    res = run_criterion(9)
    assert res.passed
    assert len(res.checks) == 6


def test_criterion_10_passes():
    res = run_criterion(10)
    assert res.passed
    names = {c.check for c in res.checks}
    assert names == {"structure-agreement", "round-trip", "perfectness"}


def test_criterion_11_audits_shared_registry():
    reg = CodeRegistry()
    run_criterion(2, instances=[(2, 2)], registry=reg)
    res = run_criterion(11, registry=reg)
    assert res.passed
    labels = {c.instance for c in res.checks}
    assert labels == {"first(2,2)", "(registry)"}


def test_budget_overrun_is_a_failed_check():
    res = run_criterion(1, instances=[(5, 5)], budget=100)
    assert not res.passed
    budget, = by_check(res, "budget")
    assert "3125" in budget.detail


def test_unknown_criterion():
    with pytest.raises(BadParams):
        run_criterion(12)


def test_instances_rejected_where_fixed():
    with pytest.raises(BadParams):
        run_criterion(7, instances=[(3, 3)])


def test_wrong_instance_arity():
    with pytest.raises(BadParams):
        run_criterion(4, instances=[(4, 3)])


def test_default_instances():
    assert default_instances(1)[0] == (2, 2)
    assert default_instances(7) is None
    with pytest.raises(BadParams):
        default_instances(0)


def test_default_config_lists_all_criteria():
    cfg = load_config()
    assert [entry["id"] for entry in cfg["criteria"]] == list(range(1, 12))
    assert cfg["criteria"][0]["instances"] == default_instances(1)


def test_config_validation():
    with pytest.raises(BadParams):
        validate_config({"criteria": [{"id": 99}]})
    with pytest.raises(BadParams):
        validate_config({"criteria": [{"id": 7, "instances": [[3, 3]]}]})
    with pytest.raises(BadParams):
        validate_config({"criteria": [{"id": 4, "instances": [[4, 3]]}]})
    with pytest.raises(BadParams):
        validate_config([1, 2, 3])
    ok = validate_config({"criteria": [9, {"id": 1, "instances": [[2, 2]]}]})
    assert ok["criteria"][0] == {"id": 9, "instances": None}
    assert ok["criteria"][1]["instances"] == ((2, 2),)


def test_empty_config_gives_empty_passing_report():
    report = run_sweep({"criteria": []})
    assert report.passed
    assert report.results == []
    assert report.table() == "no criteria configured\n"
    assert report.as_dict()["summary"]["criteria_total"] == 0


def test_sweep_reports_are_byte_identical():
    cfg = {"criteria": [{"id": 1, "instances": [[2, 2], [3, 3]]}, 9]}
    a = run_sweep(cfg)
    b = run_sweep(cfg)
    assert a.to_json() == b.to_json()
    assert a.table() == b.table()


def test_sweep_table_shape():
    report = run_sweep({"criteria": [{"id": 1, "instances": [[2, 2]]}]})
    table = report.table()
    assert "criterion  1" in table and "PASS" in table
    assert "1/1 criteria passed" in table


def test_failed_criterion_marks_report():
    report = run_sweep({"criteria": [{"id": 4, "instances": [[4, 3, 2]]}]})
    assert not report.passed
    assert "FAIL" in report.table()
    assert len(report.failures()) == 1
    assert report.as_dict()["summary"]["flagged"] >= 1


def test_distribution_csvs(tmp_path):
    report = run_sweep({"criteria": [{"id": 1, "instances": [[2, 2]]}]})
    paths = write_distribution_csvs(report, tmp_path)
    assert [p.name for p in paths] == ["dist_first_2_2.csv"]
    assert paths[0].read_text() == "weight,count\n0,1\n2,3\n"


def test_json_shape():
    report = run_sweep({"criteria": [{"id": 9}]})
    d = report.as_dict()
    assert d["version"] == 1
    assert d["criteria"][0]["id"] == 9
    check = d["criteria"][0]["checks"][0]
    assert set(check) == {"instance", "check", "passed",
                          "paper_discrepancy", "detail"}
