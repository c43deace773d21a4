"""Graph model, labelings, and the edge-scan bandwidth evaluator."""

from itertools import product

import pytest

from gridband.bandwidth import bw_hales, bw_lex
from gridband.grid import (
    BudgetExceededError,
    GridParams,
    LabelingSpec,
    edges,
    format_vertex,
    labeling_bandwidth,
    lex_rank,
    lex_unrank,
    load_labeling_file,
    neighbors,
    parse_vertex,
    weight,
)
from gridband.hales import hales_enumerate, hales_rank


def test_params_validation_and_counts():
    params = GridParams(2, 2)
    assert params.vertex_count == 9
    assert params.edge_count == 12
    with pytest.raises(ValueError):
        GridParams(0, 2)
    with pytest.raises(ValueError):
        GridParams(2, 0)


def test_vertex_text_form():
    assert parse_vertex("1,0,2") == (1, 0, 2)
    assert format_vertex((1, 0, 2)) == "1,0,2"
    with pytest.raises(ValueError):
        parse_vertex("1,x")


def test_weight():
    assert weight((0, 0, 0)) == 0
    assert weight((2, 2)) == 4
    assert weight((1, 0, 2)) == 3


def test_neighbors_examples():
    params = GridParams(2, 2)
    assert set(neighbors((0, 0), params)) == {(1, 0), (0, 1)}
    assert set(neighbors((1, 1), params)) == {(0, 1), (2, 1), (1, 0), (1, 2)}
    assert set(neighbors((2, 2), params)) == {(1, 2), (2, 1)}


def test_adjacency_symmetric():
    for n, d in [(1, 6), (2, 4), (3, 3)]:
        params = GridParams(n, d)
        for u in product(range(n + 1), repeat=d):
            for v in neighbors(u, params):
                assert u in neighbors(v, params)


def test_edge_counts():
    assert sum(1 for _ in edges(GridParams(2, 2))) == 12
    assert sum(1 for _ in edges(GridParams(5, 1))) == 5
    assert sum(1 for _ in edges(GridParams(1, 3))) == 12


def test_edges_lighter_endpoint_first():
    for u, v in edges(GridParams(2, 3)):
        assert weight(v) == weight(u) + 1


def test_lex_rank_unrank():
    params = GridParams(2, 2)
    assert lex_rank((1, 1), params) == 4
    assert lex_rank((0, 0), params) == 0
    assert lex_unrank(8, params) == (2, 2)
    for r in range(9):
        assert lex_rank(lex_unrank(r, params), params) == r
    with pytest.raises(ValueError):
        lex_unrank(9, params)


def test_labeling_bandwidth_examples():
    assert labeling_bandwidth("hales", GridParams(2, 2)).value == 3
    assert labeling_bandwidth("lex", GridParams(2, 3)).value == 9
    for n in (1, 3, 7):
        assert labeling_bandwidth("hales", GridParams(n, 1)).value == 1


def test_labeling_bandwidth_matches_formulas_small():
    for n in range(1, 4):
        d = 1
        while (n + 1) ** d <= 3000:
            params = GridParams(n, d)
            assert labeling_bandwidth("hales", params).value == bw_hales(n, d)
            assert labeling_bandwidth("lex", params).value == bw_lex(n, d)
            d += 1


def test_witness_is_an_edge_achieving_the_value():
    params = GridParams(2, 3)
    report = labeling_bandwidth("hales", params)
    u, v = report.witness
    diffs = [abs(a - b) for a, b in zip(u, v)]
    assert sorted(diffs) == [0] * (params.d - 1) + [1]
    ranks = {w: hales_rank(w, 2, 3) + 1 for w in (u, v)}
    assert abs(ranks[u] - ranks[v]) == report.value


def test_witness_is_deterministic_minimum_rank_pair():
    params = GridParams(2, 2)
    report = labeling_bandwidth("hales", params)
    maximizers = []
    labels = {u: i for i, u in enumerate(hales_enumerate(2, 2), start=1)}
    for u, v in edges(params):
        if abs(labels[u] - labels[v]) == report.value:
            maximizers.append((labels[u] - 1, labels[v] - 1, (u, v)))
    best = min(maximizers)
    assert report.witness == best[2]


def test_scan_budget_error_names_budget():
    with pytest.raises(BudgetExceededError) as err:
        labeling_bandwidth("hales", GridParams(2, 10), max_vertices=1000)
    assert "1000" in str(err.value)
    assert err.value.required == 3 ** 10


def _write_labeling(path, mapping):
    with open(path, "w", encoding="utf-8") as handle:
        for u, label in mapping.items():
            handle.write(f"{format_vertex(u)}\t{label}\n")


def test_labeling_file_round_trip(tmp_path):
    params = GridParams(2, 2)
    mapping = {u: i for i, u in enumerate(hales_enumerate(2, 2), start=1)}
    path = tmp_path / "hales.tsv"
    _write_labeling(path, mapping)
    assert load_labeling_file(str(path), params) == mapping
    report = labeling_bandwidth(LabelingSpec.from_file(str(path)), params)
    assert report.value == 3


def test_labeling_file_rejects_duplicates_and_gaps(tmp_path):
    params = GridParams(1, 1)
    path = tmp_path / "bad.tsv"

    path.write_text("0\t1\n0\t2\n", encoding="utf-8")
    with pytest.raises(ValueError, match="duplicate vertex"):
        load_labeling_file(str(path), params)

    path.write_text("0\t1\n1\t1\n", encoding="utf-8")
    with pytest.raises(ValueError, match="duplicate label"):
        load_labeling_file(str(path), params)

    path.write_text("0\t1\n", encoding="utf-8")
    with pytest.raises(ValueError, match="bijection"):
        load_labeling_file(str(path), params)

    path.write_text("0\t3\n1\t1\n", encoding="utf-8")
    with pytest.raises(ValueError, match="outside"):
        load_labeling_file(str(path), params)

    path.write_text("5\t1\n1\t2\n", encoding="utf-8")
    with pytest.raises(ValueError, match="not in the grid"):
        load_labeling_file(str(path), params)


def test_labeling_file_skips_comments_and_blanks(tmp_path):
    params = GridParams(1, 1)
    path = tmp_path / "commented.tsv"
    path.write_text("# header\n\n0\t1\n1\t2\n", encoding="utf-8")
    assert load_labeling_file(str(path), params) == {(0,): 1, (1,): 2}
