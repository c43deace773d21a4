"""Branch-and-bound ground truth on desk-scale grids."""

import pytest

from gridband.bandwidth import bw_hales
from gridband.grid import GridParams, LabelingSpec, labeling_bandwidth
from gridband.oracle import (
    BUDGET_EXHAUSTED,
    PROVED,
    SearchBudget,
    brute_force_bw,
    certificate_to_text,
    verify_optimal,
)


def test_small_grids_proved():
    cert = brute_force_bw(GridParams(2, 2))
    assert cert.optimal_value == 3 and cert.status == PROVED

    cert = brute_force_bw(GridParams(1, 2))
    assert cert.optimal_value == 2 and cert.status == PROVED

    cert = brute_force_bw(GridParams(1, 3))
    assert cert.optimal_value == bw_hales(1, 3) == 4 and cert.status == PROVED


def test_hypercube_dimension_four_arbitration():
    # 16 vertices: the exhaustive optimum settles the d=4 value at 7, one
    # above the 6 that circulates in older tabulations
    cert = brute_force_bw(GridParams(1, 4))
    assert cert.status == PROVED
    assert cert.optimal_value == 7 == bw_hales(1, 4)


def test_value_never_exceeds_hales_labeling():
    for n, d in [(1, 2), (1, 3), (2, 2), (3, 2)]:
        cert = brute_force_bw(GridParams(n, d))
        scanned = labeling_bandwidth("hales", GridParams(n, d)).value
        assert cert.optimal_value <= scanned


def test_witness_rescans_to_optimal_value(tmp_path):
    params = GridParams(2, 2)
    cert = brute_force_bw(params)
    path = tmp_path / "certificate.tsv"
    path.write_text(certificate_to_text(cert), encoding="utf-8")
    report = labeling_bandwidth(LabelingSpec.from_file(str(path)), params)
    assert report.value == cert.optimal_value


def test_certificate_header_lines():
    cert = brute_force_bw(GridParams(1, 2))
    text = certificate_to_text(cert)
    lines = text.splitlines()
    assert lines[0] == f"# bandwidth {cert.optimal_value}"
    assert lines[1] == f"# status {cert.status}"
    assert lines[2] == f"# nodes {cert.nodes_explored}"
    assert len(lines) == 3 + 4


def test_search_is_deterministic():
    first = brute_force_bw(GridParams(3, 2))
    second = brute_force_bw(GridParams(3, 2))
    assert first == second


def test_trivial_bound_start_agrees():
    for n, d in [(1, 1), (1, 3), (2, 2)]:
        accel = brute_force_bw(GridParams(n, d))
        plain = brute_force_bw(GridParams(n, d), use_formula_bound=False)
        assert plain.status == PROVED
        assert plain.optimal_value == accel.optimal_value


def test_node_budget_exhaustion():
    cert = brute_force_bw(GridParams(2, 2), SearchBudget(max_nodes=5))
    assert cert.status == BUDGET_EXHAUSTED
    # the fallback witness is still a genuine labeling achieving the value
    mapping = cert.witness_labeling
    assert sorted(mapping.values()) == list(range(1, 10))


def test_time_limit_exhaustion():
    cert = brute_force_bw(GridParams(1, 4), SearchBudget(time_limit=1e-9))
    assert cert.status == BUDGET_EXHAUSTED


def test_verify_optimal_results():
    check = verify_optimal(GridParams(1, 2))
    assert check.result is True and check.formula_value == 2

    check = verify_optimal(GridParams(2, 2))
    assert check.result is True and check.formula_value == 3

    check = verify_optimal(GridParams(3, 2))
    assert check.result is True and check.formula_value == 4


def test_verify_optimal_inconclusive_is_not_false():
    check = verify_optimal(GridParams(2, 2), SearchBudget(max_nodes=5))
    assert check.result is None
    assert check.certificate.status == BUDGET_EXHAUSTED


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    with pytest.raises(ValueError):
        SearchBudget(time_limit=0.0)
