"""Closed-form bandwidth values for P_n^d, bounds, and asymptotics.

The exact bandwidth is the sum over i < d of the n largest coefficients of
(1 + x + ... + x^n)^i; the hypercube case n = 1 reduces to a sum of central
binomials.  The largest coefficients of consecutive rows bracket the value,
and a local-CLT estimate approximates the upper bracket for large d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coeffs import max_coeff, top_sum


@dataclass(frozen=True)
class BoundsPair:
    """Central-coefficient bracket: lower <= bw(P_n^d) <= upper."""

    lower: int
    upper: int


@dataclass(frozen=True)
class AsymptoticEstimate:
    """Normal-density approximation of the largest coefficient of row d+1."""

    n: int
    d: int
    estimate: float
    sqrt_factor: float


def bw_hales(n: int, d: int) -> int:
    """Exact bandwidth of P_n^d: sum of top_sum(n, i) for i = 0..d-1."""
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    return sum(top_sum(n, i) for i in range(d))


def bw_hypercube(d: int) -> int:
    """Bandwidth of the d-cube: sum of binom(i, floor(i/2)) for i = 0..d-1."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return sum(math.comb(i, i // 2) for i in range(d))


def bw_lex(n: int, d: int) -> int:
    """Bandwidth of the left-to-right lexicographic labeling: (n+1)^(d-1)."""
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    return (n + 1) ** (d - 1)


def bounds(n: int, d: int) -> BoundsPair:
    """max_coeff(n, d) <= bw(P_n^d) <= max_coeff(n, d+1)."""
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    return BoundsPair(lower=max_coeff(n, d), upper=max_coeff(n, d + 1))


def asymptotic_estimate(n: int, d: int) -> AsymptoticEstimate:
    """Estimate of max_coeff(n, d+1) as (n+1)^(d+1) times a normal peak density.

    The coordinate sum of d+1 uniform draws from {0,...,n} has variance
    (d+1)(n^2+2n)/12; the peak of the matching normal density overestimates
    the central coefficient share, so the ratio to the exact value tends to
    1 from above.
    """
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    factor = math.sqrt(6.0 / (math.pi * (d + 1) * (n * n + 2 * n)))
    return AsymptoticEstimate(
        n=n, d=d, estimate=(n + 1) ** (d + 1) * factor, sqrt_factor=factor
    )


def clt_estimate(n: int, d: int) -> float:
    """The numeric value of asymptotic_estimate(n, d)."""
    return asymptotic_estimate(n, d).estimate


def ratio_table(n: int, d_max: int) -> list[tuple[int, float]]:
    """(d, bw_hales/bw_lex) for d = 1..d_max; exact integers divided last."""
    if n < 1 or d_max < 1:
        raise ValueError(f"need n >= 1 and d_max >= 1, got n={n}, d_max={d_max}")
    out = []
    for d in range(1, d_max + 1):
        out.append((d, bw_hales(n, d) / bw_lex(n, d)))
    return out
