"""Coefficient rows of (1 + x + ... + x^n)^d and quantities derived from them.

The row for parameters (n, d) holds the n*d + 1 coefficients
C(d, k) = [x^k] (1 + x + ... + x^n)^d.  Every row is symmetric, log-concave
and sums to (n + 1)^d.  All arithmetic is exact (Python big integers); rows
are memoized per (n, d).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial


@dataclass(frozen=True)
class CoeffRow:
    """One row of the extended Pascal triangle: values[k] = [x^k](1+x+...+x^n)^d."""

    n: int
    d: int
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class SortedCoeffArray:
    """The coefficients of one row sorted in non-increasing order."""

    n: int
    d: int
    entries: tuple[int, ...]


def _check_params(n: int, d: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")


@lru_cache(maxsize=None)
def _row(n: int, d: int) -> tuple[int, ...]:
    if d == 0:
        return (1,)
    prev = _row(n, d - 1)
    # C(d, k) = sum_{j=0}^{n} C(d-1, k-j): a sliding window over the
    # previous row, evaluated with prefix sums.
    prefix = [0]
    for v in prev:
        prefix.append(prefix[-1] + v)
    out = []
    for k in range(n * d + 1):
        lo = max(0, k - n)
        hi = min(k, len(prev) - 1)
        out.append(prefix[hi + 1] - prefix[lo])
    return tuple(out)


@lru_cache(maxsize=None)
def _cumulative(n: int, d: int) -> tuple[int, ...]:
    """Prefix sums: _cumulative(n, d)[k] = sum of coefficients of degree < k."""
    acc = [0]
    for v in _row(n, d):
        acc.append(acc[-1] + v)
    return tuple(acc)


def coeff_row(n: int, d: int) -> CoeffRow:
    """Full coefficient row of (1 + x + ... + x^n)^d, exact big integers."""
    _check_params(n, d)
    return CoeffRow(n, d, _row(n, d))


def coeff(n: int, d: int, k: int) -> int:
    """Coefficient of x^k; returns 0 for k outside [0, n*d]."""
    _check_params(n, d)
    if k < 0 or k > n * d:
        return 0
    return _row(n, d)[k]


def coeff_range_sum(n: int, d: int, a: int, b: int) -> int:
    """Sum of coefficients of degrees a..b inclusive (degrees clamped to the row)."""
    _check_params(n, d)
    lo = max(a, 0)
    hi = min(b, n * d)
    if lo > hi:
        return 0
    acc = _cumulative(n, d)
    return acc[hi + 1] - acc[lo]


def cumulative_below(n: int, d: int, k: int) -> int:
    """Number of monomials of degree < k, i.e. sum of coefficients 0..k-1."""
    _check_params(n, d)
    if k <= 0:
        return 0
    return _cumulative(n, d)[min(k, n * d + 1)]


def max_coeff(n: int, d: int) -> int:
    """Largest coefficient of the row; sits at the central degree floor(n*d/2)."""
    _check_params(n, d)
    return _row(n, d)[(n * d) // 2]


@lru_cache(maxsize=None)
def _sorted_desc(n: int, d: int) -> tuple[int, ...]:
    return tuple(sorted(_row(n, d), reverse=True))


def sorted_desc(n: int, d: int) -> SortedCoeffArray:
    """Row coefficients in non-increasing order."""
    _check_params(n, d)
    return SortedCoeffArray(n, d, _sorted_desc(n, d))


def top_sum(n: int, i: int) -> int:
    """Sum of the n largest coefficients of the row for (n, i).

    When the row has fewer than n entries (only i = 0) the whole row is
    summed, which gives 1.
    """
    _check_params(n, i)
    entries = _sorted_desc(n, i)
    return sum(entries[: min(n, len(entries))])


def trinomial_coeff(d: int, k: int) -> int:
    """Closed form for the n = 2 coefficients via trinomial multinomials.

    Sums d! / ((d-k+l)! (k-2l)! l!) over l = 0..floor(k/2), skipping terms
    with a negative first part; equals coeff(2, d, k).
    """
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if k < 0 or k > 2 * d:
        raise ValueError(f"k must lie in [0, {2 * d}], got {k}")
    fact_d = factorial(d)
    total = 0
    for ell in range(k // 2 + 1):
        a = d - k + ell
        if a < 0:
            continue
        total += fact_d // (factorial(a) * factorial(k - 2 * ell) * factorial(ell))
    return total


def middle_window(n: int, d: int, i: int) -> tuple[int, int]:
    """Degrees [lo, hi] holding the i largest coefficients of the row.

    The window of width i is centered on the peak degree floor((n*d+1)/2)
    (shifted half-open to the left for even i), then slid left over exact
    ties so the leftmost admissible interval is returned.  The coefficient
    sum over the window always equals the sum of the i largest entries.
    """
    _check_params(n, d)
    if i < 1 or i > n * d + 1:
        raise ValueError(f"window width must lie in [1, {n * d + 1}], got {i}")
    peak = (n * d + 1) // 2
    if i % 2 == 1:
        lo, hi = peak - i // 2, peak + i // 2
    else:
        lo, hi = peak - i // 2, peak + i // 2 - 1
    row = _row(n, d)
    while lo > 0 and row[lo - 1] == row[hi]:
        lo -= 1
        hi -= 1
    return lo, hi
