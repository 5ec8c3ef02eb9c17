"""Witnessed Minkowski sums of lattice sets and hole detection."""

from __future__ import annotations

import os
from itertools import product
from typing import Iterable, Sequence

from .discrete_sets import LatticeSet
from .errors import BudgetError, UsageError
from .exact_geometry import RationalPoint, _membership_support

DEFAULT_BUDGET = 10_000_000

__all__ = ["WitnessedSum", "minkowski_sum", "find_holes", "DEFAULT_BUDGET"]


def enumeration_budget() -> int:
    """Tuple budget for sum enumeration; LATROUND_BUDGET overrides it."""
    raw = os.environ.get("LATROUND_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise UsageError(f"LATROUND_BUDGET must be an integer, got {raw!r}") from exc
    return DEFAULT_BUDGET


class WitnessedSum:
    """A Minkowski sum together with one decomposition per sum point.

    The witness for a point w is the lexicographically least tuple
    (s1, ..., sm) of summand points with s1 + ... + sm = w.
    """

    __slots__ = ("result", "witnesses", "summands")

    def __init__(self, result: LatticeSet, witnesses: dict, summands: tuple):
        object.__setattr__(self, "result", result)
        object.__setattr__(self, "witnesses", witnesses)
        object.__setattr__(self, "summands", summands)

    def __setattr__(self, name, value):
        raise AttributeError("WitnessedSum is immutable")

    @property
    def dim(self) -> int:
        return self.result.dim

    def __contains__(self, p):
        return p in self.result

    def __len__(self):
        return len(self.result)

    def __repr__(self):
        return f"WitnessedSum({len(self.summands)} summands, {len(self.result)} points)"


def minkowski_sum(sets: Sequence[LatticeSet], budget: int | None = None) -> WitnessedSum:
    """Sum of lattice sets with a stored witness tuple per result point.

    Enumerates the product of the summands in lexicographic order, so the
    kept witness (first seen) is the lexicographically least one.  Raises
    BudgetError when the product exceeds the enumeration budget.
    """
    sets = tuple(sets)
    if not sets:
        raise UsageError("need at least one summand")
    for s in sets:
        if not isinstance(s, LatticeSet) or len(s) == 0:
            raise UsageError("summands must be nonempty lattice sets")
    dim = sets[0].dim
    if any(s.dim != dim for s in sets):
        raise UsageError("summands have mixed dimensions")
    limit = enumeration_budget() if budget is None else budget
    total = 1
    for s in sets:
        total *= len(s)
    if total > limit:
        raise BudgetError(
            f"sum enumeration needs {total} tuples, over the budget of {limit}",
            budget=limit,
            required=total,
        )
    witnesses: dict = {}
    for tup in product(*(s.points for s in sets)):
        w = tuple(sum(c) for c in zip(*tup))
        if w not in witnesses:
            witnesses[w] = tup
    result = LatticeSet(witnesses.keys(), dim=dim)
    return WitnessedSum(result, witnesses, sets)


def find_holes(w: WitnessedSum) -> LatticeSet:
    """Integer hull points of the sum that are not sum points.

    Returns a possibly empty LatticeSet: conv(W) cap Z^n minus W, found
    by exact membership over the bounding box.
    """
    res = w.result
    holes = []
    pts = list(res.points)
    for p in product(*(range(lo, hi + 1) for lo, hi in res.bbox)):
        if p in res:
            continue
        if _membership_support(pts, RationalPoint(p)) is not None:
            holes.append(p)
    return LatticeSet(holes, dim=res.dim, allow_empty=True)
