"""Coefficient rows: examples frozen against a direct convolution oracle."""

import pytest

from gridband.coeffs import (
    coeff,
    coeff_row,
    max_coeff,
    middle_window,
    sorted_desc,
    top_sum,
    trinomial_coeff,
)


def conv_row(n, d):
    """Oracle: multiply out (1 + x + ... + x^n)^d term by term."""
    row = [1]
    for _ in range(d):
        out = [0] * (len(row) + n)
        for i, a in enumerate(row):
            for j in range(n + 1):
                out[i + j] += a
        row = out
    return row


def test_coeff_row_examples():
    assert coeff_row(2, 0).values == (1,)
    assert coeff_row(3, 1).values == (1, 1, 1, 1)
    assert coeff_row(2, 3).values == (1, 3, 6, 7, 6, 3, 1)
    assert coeff_row(2, 3).values == tuple(conv_row(2, 3))


def test_coeff_row_rejects_degenerate_path():
    with pytest.raises(ValueError):
        coeff_row(0, 3)
    with pytest.raises(ValueError):
        coeff_row(2, -1)


def test_coeff_out_of_range_is_zero():
    assert coeff(2, 3, 3) == 7
    assert coeff(2, 3, -1) == 0
    assert coeff(2, 3, 7) == 0
    assert coeff(2, 3, 1) == 3
    assert coeff(2, 3, 5) == 3


@pytest.mark.parametrize("n", [1, 2, 5])
def test_max_coeff_trivial_power(n):
    assert max_coeff(n, 0) == 1


def test_max_coeff_examples():
    assert max_coeff(2, 3) == 7
    assert max_coeff(1, 10) == 252  # central binomial C(10, 5)


def test_sorted_desc_examples():
    assert sorted_desc(2, 2).entries == (3, 2, 2, 1, 1)
    assert sorted_desc(3, 0).entries == (1,)
    assert sorted_desc(1, 3).entries == (3, 3, 1, 1)


def test_sorted_desc_is_permutation_of_row():
    for n in (1, 2, 3):
        for d in range(8):
            arr = sorted_desc(n, d).entries
            assert sorted(arr, reverse=True) == list(arr)
            assert sorted(arr) == sorted(coeff_row(n, d).values)


def test_top_sum_examples():
    assert top_sum(4, 0) == 1
    assert top_sum(2, 2) == 5  # 3 + 2 from 1,2,3,2,1
    assert top_sum(2, 4) == 35  # 19 + 16


def test_trinomial_closed_form():
    assert trinomial_coeff(3, 3) == 7
    assert trinomial_coeff(4, 4) == 19
    for d in (0, 1, 5, 9):
        assert trinomial_coeff(d, 0) == 1
    for d in range(13):
        for k in range(2 * d + 1):
            assert trinomial_coeff(d, k) == coeff(2, d, k)


def test_trinomial_rejects_out_of_range():
    with pytest.raises(ValueError):
        trinomial_coeff(3, 7)
    with pytest.raises(ValueError):
        trinomial_coeff(3, -1)


def test_middle_window_examples():
    assert middle_window(2, 2, 1) == (2, 2)
    assert middle_window(1, 1, 2) == (0, 1)
    lo, hi = middle_window(2, 3, 2)
    row = coeff_row(2, 3).values
    assert sum(row[lo : hi + 1]) == 13  # ties at 6,7,6 allow [2,3] or [3,4]


def test_middle_window_rejects_bad_width():
    with pytest.raises(ValueError):
        middle_window(2, 2, 0)
    with pytest.raises(ValueError):
        middle_window(2, 2, 6)


def test_middle_window_is_leftmost_admissible():
    # two equal peaks: the window slides onto the left one
    assert middle_window(1, 3, 1) == (1, 1)
    assert middle_window(1, 3, 2) == (1, 2)


def test_middle_window_sums_match_sorted_prefixes():
    for n in range(1, 7):
        for d in range(1, 13):
            row = coeff_row(n, d).values
            ranked = sorted_desc(n, d).entries
            for i in range(1, n * d + 2):
                lo, hi = middle_window(n, d, i)
                assert hi - lo + 1 == i
                assert sum(row[lo : hi + 1]) == sum(ranked[:i]), (n, d, i)


def test_row_invariants_small():
    for n in range(1, 5):
        for d in range(13):
            row = coeff_row(n, d).values
            assert len(row) == n * d + 1
            assert sum(row) == (n + 1) ** d
            assert row == row[::-1]
            for k in range(1, n * d):
                assert row[k] * row[k] >= row[k - 1] * row[k + 1]


def test_recurrence_matches_convolution_small():
    for n in range(1, 5):
        for d in range(10):
            assert list(coeff_row(n, d).values) == conv_row(n, d)


def test_central_coefficient_identity():
    # max of row d equals top_sum(n, d-1) plus the (n+1)-st sorted entry,
    # that entry read as 0 when row d-1 is shorter than n+1
    for n in range(1, 6):
        for d in range(1, 12):
            ranked = sorted_desc(n, d - 1).entries
            extra = ranked[n] if n < len(ranked) else 0
            assert max_coeff(n, d) == top_sum(n, d - 1) + extra, (n, d)
