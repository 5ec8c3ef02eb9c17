"""Independent brute-force oracles and instance generators.

Everything here re-decides questions answered elsewhere in the package,
on purpose and by different means: membership by enumeration of small
affinely independent sub-supports, nearest points by global scans, and
integral convexity by dense flat-intersection enumeration.  None of it
calls the pivoting kernels, so agreement between an oracle and its
certified counterpart is a genuine cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Optional

from .discrete_sets import (
    LatticeSet,
    integral_neighborhood,
    is_lnat_convex,
    is_mnat_convex,
)
from .errors import BudgetError, UsageError
from .minkowski import WitnessedSum

__all__ = [
    "InstanceFamily",
    "enumerate_class_sets",
    "oracle_membership",
    "oracle_nearest",
    "oracle_integral_convexity",
    "EXHAUSTIVE_CELL_LIMIT",
]

EXHAUSTIVE_CELL_LIMIT = 12
MEMBERSHIP_SIZE_LIMIT = 20


def _solve_unique(rows, rhs):
    """Unique exact solution of an overdetermined system, or None.

    Plain Fraction Gauss elimination on the augmented matrix; requires
    full column rank and consistency, otherwise None.
    """
    m = len(rows)
    k = len(rows[0]) if m else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    nextrow = 0
    for c in range(k):
        pr = next((r for r in range(nextrow, m) if aug[r][c]), None)
        if pr is None:
            return None  # rank-deficient: no unique solution
        aug[pr], aug[nextrow] = aug[nextrow], aug[pr]
        piv = aug[nextrow][c]
        aug[nextrow] = [v / piv for v in aug[nextrow]]
        for r in range(m):
            if r != nextrow and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[nextrow])]
        pivots.append(c)
        nextrow += 1
    for r in range(nextrow, m):
        if aug[r][k]:
            return None  # inconsistent
    return [aug[r][k] for r in range(k)]


def oracle_membership(s: LatticeSet, x) -> bool:
    """Decide x in conv(s) by enumerating small sub-supports.

    Caratheodory: membership holds if and only if some affinely
    independent subset of at most dim + 1 points contains x in its hull,
    and over such a subset the barycentric weights are unique.
    """
    if not isinstance(s, LatticeSet) or len(s) == 0:
        raise UsageError("need a nonempty lattice set")
    if len(s) > MEMBERSHIP_SIZE_LIMIT:
        raise BudgetError(
            f"oracle membership is limited to {MEMBERSHIP_SIZE_LIMIT} points",
            budget=MEMBERSHIP_SIZE_LIMIT,
            required=len(s),
        )
    coords = [Fraction(c) for c in x]
    n = s.dim
    if len(coords) != n:
        raise UsageError("dimension mismatch")
    for i in range(n):
        lo, hi = s.bbox[i]
        if coords[i] < lo or coords[i] > hi:
            return False
    for size in range(1, n + 2):
        for team in combinations(s.points, size):
            rows = [[Fraction(p[i]) for p in team] for i in range(n)]
            rows.append([Fraction(1)] * size)
            lam = _solve_unique(rows, coords + [Fraction(1)])
            if lam is not None and all(v >= 0 for v in lam):
                return True
    return False


def oracle_nearest(w: WitnessedSum, x, norm: str = "linf"):
    """Exact global nearest sum point; ties break lexicographically.

    Returns (z, distance) with the distance squared for the Euclidean
    norm so that it stays rational.
    """
    if norm not in ("linf", "l2"):
        raise UsageError(f"unknown norm {norm!r}")
    coords = [Fraction(c) for c in x]
    if len(coords) != w.dim:
        raise UsageError("dimension mismatch")
    best = None
    best_d = None
    for p in w.result.points:
        if norm == "linf":
            d = max(abs(a - b) for a, b in zip(coords, p))
        else:
            d = sum(((a - b) * (a - b) for a, b in zip(coords, p)), Fraction(0))
        if best_d is None or d < best_d:
            best, best_d = p, d
    return best, best_d


def _affinely_independent(team) -> bool:
    if len(team) == 1:
        return True
    base = team[0]
    rows = [[Fraction(a - b) for a, b in zip(t, base)] for t in team[1:]]
    # row rank by elimination
    rank = 0
    width = len(rows[0])
    for c in range(width):
        pr = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if pr is None:
            continue
        rows[pr], rows[rank] = rows[rank], rows[pr]
        piv = rows[rank][c]
        for r in range(rank + 1, len(rows)):
            if rows[r][c]:
                f = rows[r][c] / piv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank == len(team) - 1


def oracle_integral_convexity(s: LatticeSet) -> bool:
    """Definitional cell check with dense flat-intersection candidates.

    Every vertex of conv(s) clipped to a unit cell lies on the affine
    flat of some affinely independent subset of s, pinned by cell faces.
    All such intersection points inside the cell and inside conv(s) are
    tested against the hull of s clipped to their own integral
    neighborhood, which is exactly the defining condition.
    """
    if not isinstance(s, LatticeSet) or len(s) == 0:
        raise UsageError("need a nonempty lattice set")
    n = s.dim
    flats = []
    for size in range(1, n + 2):
        for team in combinations(s.points, size):
            if _affinely_independent(team):
                base = team[0]
                dirs = [[a - b for a, b in zip(t, base)] for t in team[1:]]
                flats.append((base, dirs))
    member_cache: dict = {}

    def member(points_key, pts, coords):
        key = (points_key, tuple(coords))
        hit = member_cache.get(key)
        if hit is None:
            hit = _hull_member_by_enumeration(pts, coords, n)
            member_cache[key] = hit
        return hit

    all_pts = s.points
    ranges = [range(lo, max(lo, hi - 1) + 1) for lo, hi in s.bbox]
    for anchor in product(*ranges):
        seen = set()
        for base, dirs in flats:
            f = len(dirs)
            for combo in combinations(range(2 * n), f):
                rows = []
                rhs = []
                singular = False
                for fi in combo:
                    axis = fi // 2
                    if fi % 2 == 0:
                        h = [0] * n
                        h[axis] = 1
                        c = anchor[axis] + 1
                    else:
                        h = [0] * n
                        h[axis] = -1
                        c = -anchor[axis]
                    rows.append([sum(h[i] * d[i] for i in range(n)) for d in dirs])
                    rhs.append(c - sum(h[i] * base[i] for i in range(n)))
                if f:
                    mu = _solve_unique(rows, rhs)
                    if mu is None:
                        continue
                else:
                    mu = []
                coords = [Fraction(base[i]) for i in range(n)]
                for mj, d in zip(mu, dirs):
                    for i in range(n):
                        coords[i] += mj * d[i]
                key = tuple(coords)
                if key in seen:
                    continue
                seen.add(key)
                if any(c < a or c > a + 1 for c, a in zip(coords, anchor)):
                    continue
                if not member(all_pts, all_pts, coords):
                    continue
                local = [
                    p
                    for p in integral_neighborhood(coords).members
                    if p in s
                ]
                if not local or not member(tuple(local), tuple(local), coords):
                    return False
    return True


def _hull_member_by_enumeration(points, coords, n) -> bool:
    for size in range(1, n + 2):
        for team in combinations(points, size):
            rows = [[Fraction(p[i]) for p in team] for i in range(n)]
            rows.append([Fraction(1)] * size)
            lam = _solve_unique(rows, list(coords) + [Fraction(1)])
            if lam is not None and all(v >= 0 for v in lam):
                return True
    return False


@dataclass(frozen=True)
class InstanceFamily:
    """Deterministic source of lattice sets of one convexity class.

    ``box`` is a per-coordinate (lo, hi) range, ``class_filter`` one of
    any, integrally_convex, mnat, lnat.  Generation is reproducible from
    the seed alone; sampled draws are reproducible from (seed, index).
    """

    dim: int
    box: tuple
    class_filter: str = "any"
    seed: int = 0

    def __post_init__(self):
        if self.class_filter not in ("any", "integrally_convex", "mnat", "lnat"):
            raise UsageError(f"unknown class filter {self.class_filter!r}")
        if len(self.box) != self.dim:
            raise UsageError("box does not match the dimension")

    def cells(self):
        return [
            p
            for p in product(*(range(lo, hi + 1) for lo, hi in self.box))
        ]

    def passes(self, s: LatticeSet) -> bool:
        if self.class_filter == "any":
            return True
        if self.class_filter == "mnat":
            return is_mnat_convex(s)
        if self.class_filter == "lnat":
            return is_lnat_convex(s)
        from .discrete_sets import is_integrally_convex

        return is_integrally_convex(s)


def enumerate_class_sets(
    family: InstanceFamily,
    count: Optional[int] = None,
    cell_limit: int = EXHAUSTIVE_CELL_LIMIT,
) -> Iterator[LatticeSet]:
    """Sets of the family's class, exhaustively or by seeded sampling.

    With ``count`` omitted, yields every nonempty subset of the box that
    passes the class filter, in deterministic bitmask order; this needs
    at most ``cell_limit`` box cells.  With ``count`` given, yields that
    many filtered samples, each reproducible from (seed, index).
    """
    cells = family.cells()
    if count is None:
        if len(cells) > cell_limit:
            raise BudgetError(
                f"exhaustive enumeration over {len(cells)} cells exceeds "
                f"the limit of {cell_limit}",
                budget=cell_limit,
                required=len(cells),
            )
        for mask in range(1, 1 << len(cells)):
            chosen = [cells[i] for i in range(len(cells)) if mask >> i & 1]
            s = LatticeSet(chosen, dim=family.dim)
            if family.passes(s):
                yield s
        return
    for index in range(count):
        yield _sample_one(family, cells, index)


def _sample_one(family: InstanceFamily, cells, index: int) -> LatticeSet:
    rng = random.Random(family.seed * 1_000_003 + index)
    for _ in range(200):
        size = rng.randint(1, min(len(cells), 6))
        chosen = rng.sample(cells, size)
        s = LatticeSet(chosen, dim=family.dim)
        if family.passes(s):
            return s
    # a singleton passes every class filter
    corner = cells[rng.randrange(len(cells))]
    return LatticeSet([corner], dim=family.dim)
