"""Closed-form rounding bounds and their exact comparison.

alpha(n, m) = (1 - 1/n) * min(n, m) bounds the max-norm distance and
beta(n, m) = sqrt(n * min(n, m)) / 2 the Euclidean distance from a hull
point of an m-fold Minkowski sum in Z^n to a nearest sum point.  beta is
irrational in general, so it is carried as its exact square.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Optional, Sequence

from .errors import UsageError

__all__ = [
    "BoundPair",
    "Comparison",
    "bound_pair",
    "theta",
    "alpha_beta_compare",
    "bounds_table",
    "floor_sqrt",
    "unit_cube_radius_sq",
    "TABLE_N_VALUES",
    "TABLE_M_VALUES",
]

TABLE_N_VALUES = (2, 3, 4, 8, 12, 16)
TABLE_M_VALUES = (1, 2, 3, 4, 5)


def floor_sqrt(q: Fraction) -> int:
    """Largest integer k with k*k <= q, by integer comparisons only."""
    if q < 0:
        raise UsageError("floor_sqrt of a negative value")
    k = isqrt(q.numerator // q.denominator)
    while (k + 1) * (k + 1) * q.denominator <= q.numerator:
        k += 1
    while k * k * q.denominator > q.numerator:
        k -= 1
    return k


def unit_cube_radius_sq(n: int) -> Fraction:
    """Squared circumradius of a unit cube in Z^n: (sqrt(n)/2)^2."""
    if n < 1:
        raise UsageError("dimension must be positive")
    return Fraction(n, 4)


@dataclass(frozen=True)
class BoundPair:
    """alpha and beta for one (n, m), with beta kept as its square."""

    n: int
    m: int
    alpha: Fraction
    beta_sq: Fraction
    floor_alpha: int
    floor_beta: int


def bound_pair(n: int, m: int) -> BoundPair:
    """Exact alpha(n, m) and beta(n, m)^2 with their floors."""
    if n < 1 or m < 1:
        raise UsageError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    k = min(n, m)
    alpha = Fraction(n - 1, n) * k
    beta_sq = Fraction(n * k, 4)
    return BoundPair(
        n=n,
        m=m,
        alpha=alpha,
        beta_sq=beta_sq,
        floor_alpha=alpha.numerator // alpha.denominator,
        floor_beta=floor_sqrt(beta_sq),
    )


def theta(n: int) -> Fraction:
    """Threshold n^3 / (4 (n-1)^2) separating the alpha-smaller and
    beta-smaller regimes in the summand count m."""
    if n < 2:
        raise UsageError(f"theta needs n >= 2, got {n}")
    return Fraction(n**3, 4 * (n - 1) ** 2)


class Comparison(enum.Enum):
    ALPHA_SMALLER = "alpha"
    BETA_SMALLER = "beta"
    EQUAL = "equal"


def alpha_beta_compare(n: int, m: int) -> Comparison:
    """Exact trichotomy between alpha(n, m) and beta(n, m).

    Compares the squares, which are both rational.
    """
    if n < 2 or m < 1:
        raise UsageError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    pair = bound_pair(n, m)
    a_sq = pair.alpha * pair.alpha
    if a_sq < pair.beta_sq:
        return Comparison.ALPHA_SMALLER
    if a_sq > pair.beta_sq:
        return Comparison.BETA_SMALLER
    return Comparison.EQUAL


def bounds_table(
    n_values: Optional[Sequence[int]] = None,
    m_values: Optional[Sequence[int]] = None,
) -> list:
    """Grid of (floor alpha, floor beta, smaller) over n rows and m columns.

    ``smaller`` is "alpha" or "beta" by exact floor comparison, or None on
    ties.  Defaults reproduce the published reference grid.
    """
    ns = tuple(n_values) if n_values is not None else TABLE_N_VALUES
    ms = tuple(m_values) if m_values is not None else TABLE_M_VALUES
    if any(n < 2 for n in ns) or any(m < 1 for m in ms):
        raise UsageError("table needs n >= 2 and m >= 1")
    table = []
    for n in ns:
        row = []
        for m in ms:
            pair = bound_pair(n, m)
            if pair.floor_alpha < pair.floor_beta:
                flag = "alpha"
            elif pair.floor_beta < pair.floor_alpha:
                flag = "beta"
            else:
                flag = None
            row.append((pair.floor_alpha, pair.floor_beta, flag))
        table.append((n, row))
    return table
