"""Lattice sets and discrete convexity predicates.

A LatticeSet is a finite set of integer points.  The predicates decide
integral convexity, hole-freeness, exchange-property convexity (the
"Mnat" class) and discrete midpoint convexity (the "Lnat" class), each
with an exact witness when the answer is negative.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Optional

from . import _kernel
from .errors import UsageError
from .exact_geometry import (
    RationalPoint,
    _membership_support,
    hull_facets,
)

__all__ = [
    "LatticeSet",
    "IntegralNeighborhood",
    "integral_neighborhood",
    "is_integrally_convex",
    "integral_convexity_witness",
    "is_hole_free",
    "find_hole",
    "is_mnat_convex",
    "mnat_violation",
    "is_lnat_convex",
    "lnat_violation",
    "midpoint_criterion",
]


class LatticeSet:
    """A finite set of points of Z^n with a cached bounding box."""

    __slots__ = ("dim", "points", "bbox", "_index")

    def __init__(self, points: Iterable, dim: Optional[int] = None, allow_empty: bool = False):
        pts = set()
        for p in points:
            tup = tuple(int(c) for c in p)
            if any(c != t for c, t in zip(p, tup)):
                raise UsageError(f"not an integer point: {tuple(p)!r}")
            pts.add(tup)
        if not pts and not allow_empty:
            raise UsageError("empty lattice set")
        dims = {len(p) for p in pts}
        if len(dims) > 1:
            raise UsageError("points have mixed dimensions")
        if dims:
            (inferred,) = dims
            if dim is not None and dim != inferred:
                raise UsageError(f"points are {inferred}-dimensional, not {dim}")
            dim = inferred
        elif dim is None:
            raise UsageError("empty set needs an explicit dimension")
        ordered = tuple(sorted(pts))
        if ordered:
            bbox = tuple(
                (min(p[i] for p in ordered), max(p[i] for p in ordered)) for i in range(dim)
            )
        else:
            bbox = ()
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", ordered)
        object.__setattr__(self, "bbox", bbox)
        object.__setattr__(self, "_index", frozenset(ordered))

    def __setattr__(self, name, value):
        raise AttributeError("LatticeSet is immutable")

    def __contains__(self, p):
        return tuple(p) in self._index

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __bool__(self):
        return bool(self.points)

    def __eq__(self, other):
        if isinstance(other, LatticeSet):
            return self.dim == other.dim and self.points == other.points
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, self.points))

    def __repr__(self):
        return f"LatticeSet(dim={self.dim}, points={list(self.points)})"

    def intersect_points(self, pts: Iterable) -> "LatticeSet":
        found = [p for p in pts if p in self._index]
        return LatticeSet(found, dim=self.dim, allow_empty=True)


class IntegralNeighborhood:
    """The integer box between floor(x) and ceil(x), componentwise."""

    __slots__ = ("anchor", "members")

    def __init__(self, anchor: RationalPoint, members: tuple):
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "members", members)

    def __setattr__(self, name, value):
        raise AttributeError("IntegralNeighborhood is immutable")

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, p):
        return tuple(p) in self.members

    def __repr__(self):
        return f"IntegralNeighborhood(anchor={self.anchor}, members={list(self.members)})"


def integral_neighborhood(x) -> IntegralNeighborhood:
    """Integer points z with floor(x) <= z <= ceil(x) in every coordinate."""
    x = RationalPoint(x)
    lo = x.floor()
    hi = x.ceil()
    members = tuple(sorted(product(*(range(a, b + 1) for a, b in zip(lo, hi)))))
    return IntegralNeighborhood(x, members)


def _require_nonempty(s: LatticeSet):
    if not isinstance(s, LatticeSet):
        raise UsageError("expected a LatticeSet")
    if len(s) == 0:
        raise UsageError("predicate is undefined for the empty set")


def _cell_anchors(s: LatticeSet):
    ranges = []
    for lo, hi in s.bbox:
        ranges.append(range(lo, max(lo, hi - 1) + 1))
    return product(*ranges)


def integral_convexity_witness(s: LatticeSet) -> Optional[RationalPoint]:
    """A hull point missing from its local hull, or None when s is
    integrally convex.

    Certified cell scan: for each unit cell of the bounding box, every
    vertex of conv(s) clipped to the cell must have an exact membership
    certificate in the hull of the cell's own points of s.  Vertices are
    enumerated as basic solutions of the facet-plus-cell-face system.
    """
    _require_nonempty(s)
    n = s.dim
    equalities, inequalities = hull_facets(s.points)
    eq_rows = [list(h) for h, _ in equalities]
    eq_rhs = [c for _, c in equalities]
    need = n - len(equalities)
    for anchor in _cell_anchors(s):
        cell_pts = [
            p
            for p in product(*(range(a, a + 2) for a in anchor))
            if p in s
        ]
        # candidate active constraints: facets crossing this cell plus the
        # 2n cell faces; facets that stay clear of the cell cannot be active
        cands = []
        for h, c in inequalities:
            base = sum(a * b for a, b in zip(h, anchor))
            lo = base + sum(min(v, 0) for v in h)
            hi = base + sum(max(v, 0) for v in h)
            if lo <= c <= hi:
                cands.append((h, c))
        for i in range(n):
            e = [0] * n
            e[i] = 1
            cands.append((tuple(e), anchor[i] + 1))
            e = [0] * n
            e[i] = -1
            cands.append((tuple(e), -anchor[i]))
        seen = set()
        for chosen in combinations(cands, need):
            rows = eq_rows + [list(h) for h, _ in chosen]
            rhs = eq_rhs + [c for _, c in chosen]
            sol = _kernel.solve_square(rows, rhs)
            if sol is None:
                continue
            x = tuple(Fraction(num, den) for num, den in sol)
            if x in seen:
                continue
            seen.add(x)
            if any(xi < a or xi > a + 1 for xi, a in zip(x, anchor)):
                continue
            if any(
                sum(a * b for a, b in zip(h, x)) > c for h, c in inequalities
            ):
                continue
            if any(
                sum(a * b for a, b in zip(h, x)) != c for h, c in equalities
            ):
                continue
            # x is a vertex of conv(s) clipped to this cell
            if not cell_pts or _membership_support(cell_pts, RationalPoint(x)) is None:
                return RationalPoint(x)
    return None


def is_integrally_convex(s: LatticeSet) -> bool:
    """Whether every hull point of s lies in the hull of its integral
    neighborhood slice."""
    return integral_convexity_witness(s) is None


def midpoint_criterion(s: LatticeSet) -> bool:
    """Pairwise midpoint cross-check for integral convexity.

    For every x, y in s the midpoint must lie in the hull of s clipped to
    the midpoint's integral neighborhood.  This is a fast screen used to
    cross-validate is_integrally_convex in the test suite; the cell scan
    stays the certified answer.
    """
    _require_nonempty(s)
    pts = s.points
    for i, x in enumerate(pts):
        for y in pts[i + 1 :]:
            mid = RationalPoint([Fraction(a + b, 2) for a, b in zip(x, y)])
            local = [p for p in integral_neighborhood(mid) if p in s]
            if not local:
                return False
            if _membership_support(local, mid) is None:
                return False
    return True


def find_hole(s: LatticeSet) -> Optional[tuple]:
    """An integer hull point missing from s, or None when s is hole-free."""
    _require_nonempty(s)
    for p in product(*(range(lo, hi + 1) for lo, hi in s.bbox)):
        if p in s:
            continue
        if _membership_support(list(s.points), RationalPoint(p)) is not None:
            return p
    return None


def is_hole_free(s: LatticeSet) -> bool:
    """Whether s equals the integer points of its own convex hull."""
    return find_hole(s) is None


def mnat_violation(s: LatticeSet) -> Optional[tuple]:
    """A triple (x, y, i) violating the exchange property, or None.

    The property: for x, y in s and x_i > y_i, either both x - e_i and
    y + e_i belong to s, or some j with x_j < y_j has both x - e_i + e_j
    and y + e_i - e_j in s.
    """
    _require_nonempty(s)
    n = s.dim
    pts = s.points
    for x in pts:
        for y in pts:
            for i in range(n):
                if x[i] <= y[i]:
                    continue
                xm = tuple(v - (k == i) for k, v in enumerate(x))
                yp = tuple(v + (k == i) for k, v in enumerate(y))
                if xm in s and yp in s:
                    continue
                ok = False
                for j in range(n):
                    if x[j] < y[j]:
                        xmj = tuple(v - (k == i) + (k == j) for k, v in enumerate(x))
                        ypj = tuple(v + (k == i) - (k == j) for k, v in enumerate(y))
                        if xmj in s and ypj in s:
                            ok = True
                            break
                if not ok:
                    return (x, y, i)
    return None


def is_mnat_convex(s: LatticeSet) -> bool:
    """Whether s has the coordinate exchange property."""
    return mnat_violation(s) is None


def lnat_violation(s: LatticeSet) -> Optional[tuple]:
    """A pair (x, y) whose rounded midpoints leave s, or None."""
    _require_nonempty(s)
    pts = s.points
    for i, x in enumerate(pts):
        for y in pts[i + 1 :]:
            up = tuple(-((-a - b) // 2) for a, b in zip(x, y))
            down = tuple((a + b) // 2 for a, b in zip(x, y))
            if up not in s or down not in s:
                return (x, y)
    return None


def is_lnat_convex(s: LatticeSet) -> bool:
    """Whether s is closed under rounded midpoints."""
    return lnat_violation(s) is None
