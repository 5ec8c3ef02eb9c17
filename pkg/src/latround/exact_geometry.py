"""Exact rational convex geometry.

Hull membership with verified certificates, Caratheodory support
reduction, and nonnegative linear feasibility.  Scalars are
``fractions.Fraction`` throughout; no floating point enters any
certified path.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Optional, Sequence

from . import _kernel
from .errors import InternalError, UsageError

# Exact scalar type used across the package.  fractions.Fraction already
# guarantees lowest terms, a positive denominator and value equality.
Rational = Fraction

__all__ = [
    "Rational",
    "RationalPoint",
    "ConvexCombination",
    "hull_membership",
    "caratheodory_reduce",
    "solve_linear_feasibility",
    "hull_vertices",
    "hull_facets",
]


def as_rational(value) -> Fraction:
    """Coerce to an exact Fraction, refusing floats outright."""
    if isinstance(value, float):
        raise UsageError(
            "floating point values are not allowed; pass int, Fraction or 'p/q'"
        )
    try:
        return Fraction(value)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"not a rational value: {value!r}") from exc


class RationalPoint:
    """A point of Q^n with exact componentwise arithmetic."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        if isinstance(coords, RationalPoint):
            object.__setattr__(self, "coords", coords.coords)
            return
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if isinstance(other, RationalPoint):
            return self.coords == other.coords
        if isinstance(other, tuple):
            return self.coords == tuple(Fraction(c) for c in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoint is immutable")

    def __add__(self, other):
        other = RationalPoint(other)
        _check_same_dim(self, other)
        return RationalPoint(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = RationalPoint(other)
        _check_same_dim(self, other)
        return RationalPoint(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, factor) -> "RationalPoint":
        f = as_rational(factor)
        return RationalPoint(tuple(f * c for c in self.coords))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def as_int_tuple(self) -> tuple:
        if not self.is_integral():
            raise UsageError(f"{self} is not an integer point")
        return tuple(int(c) for c in self.coords)

    def floor(self) -> tuple:
        return tuple(c.numerator // c.denominator for c in self.coords)

    def ceil(self) -> tuple:
        return tuple(-((-c.numerator) // c.denominator) for c in self.coords)

    def linf_distance(self, other) -> Fraction:
        other = RationalPoint(other)
        _check_same_dim(self, other)
        return max(abs(a - b) for a, b in zip(self.coords, other.coords))

    def l2sq_distance(self, other) -> Fraction:
        other = RationalPoint(other)
        _check_same_dim(self, other)
        return sum(((a - b) * (a - b) for a, b in zip(self.coords, other.coords)), Fraction(0))

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _check_same_dim(a: RationalPoint, b: RationalPoint):
    if a.dim != b.dim:
        raise UsageError(f"dimension mismatch: {a.dim} vs {b.dim}")


def _as_lattice_point(p) -> tuple:
    out = tuple(int(c) for c in p)
    for c, o in zip(p, out):
        if c != o:
            raise UsageError(f"not an integer lattice point: {tuple(p)!r}")
    return out


class ConvexCombination:
    """Positive rational weights on lattice points, summing to one.

    The certified target is the exact weighted point sum; it is computed
    on construction and every invariant (positivity, total weight one)
    is checked there, so a ConvexCombination that exists is valid.
    """

    __slots__ = ("support", "target")

    def __init__(self, support: Iterable):
        merged = {}
        for point, weight in support:
            pt = _as_lattice_point(point)
            w = as_rational(weight)
            merged[pt] = merged.get(pt, Fraction(0)) + w
        if not merged:
            raise UsageError("a convex combination needs a nonempty support")
        dims = {len(p) for p in merged}
        if len(dims) != 1:
            raise UsageError("support points have mixed dimensions")
        items = tuple(sorted(merged.items()))
        total = Fraction(0)
        for pt, w in items:
            if w <= 0:
                raise UsageError(f"nonpositive weight {w} on {pt}")
            total += w
        if total != 1:
            raise UsageError(f"weights sum to {total}, not 1")
        (n,) = dims
        sums = [Fraction(0)] * n
        for pt, w in items:
            for i in range(n):
                sums[i] += w * pt[i]
        object.__setattr__(self, "support", items)
        object.__setattr__(self, "target", RationalPoint(sums))

    @property
    def dim(self) -> int:
        return self.target.dim

    def points(self):
        return tuple(pt for pt, _ in self.support)

    def __len__(self):
        return len(self.support)

    def __iter__(self):
        return iter(self.support)

    def __eq__(self, other):
        if isinstance(other, ConvexCombination):
            return self.support == other.support
        return NotImplemented

    def __hash__(self):
        return hash(self.support)

    def __setattr__(self, name, value):
        raise AttributeError("ConvexCombination is immutable")

    def __repr__(self):
        inner = ", ".join(f"{pt}: {w}" for pt, w in self.support)
        return f"ConvexCombination({{{inner}}})"


def _point_list(points) -> list:
    """Accept a LatticeSet-like object or a plain iterable of points."""
    raw = getattr(points, "points", points)
    out = sorted({_as_lattice_point(p) for p in raw})
    if not out:
        raise UsageError("empty point set")
    dims = {len(p) for p in out}
    if len(dims) != 1:
        raise UsageError("points have mixed dimensions")
    return out


def _scaled_rows(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Clear denominators row by row; row scaling preserves the solutions."""
    int_rows = []
    int_rhs = []
    for row, b in zip(matrix, rhs):
        scale = lcm(b.denominator, *(v.denominator for v in row)) if row else b.denominator
        int_rows.append([int(v * scale) for v in row])
        int_rhs.append(int(b * scale))
    return int_rows, int_rhs


def solve_linear_feasibility(matrix, rhs) -> Optional[list]:
    """Exact nonnegative solution of ``A @ lam = b`` with basic support.

    Returns a list of Fractions whose positive entries sit on linearly
    independent columns of A, or None when no nonnegative solution
    exists.
    """
    mat = [[as_rational(v) for v in row] for row in matrix]
    b = [as_rational(v) for v in rhs]
    if len(mat) != len(b):
        raise UsageError(f"{len(mat)} rows but {len(b)} right-hand sides")
    widths = {len(row) for row in mat}
    if len(widths) > 1:
        raise UsageError("ragged matrix")
    ncols = widths.pop() if widths else 0
    int_rows, int_rhs = _scaled_rows(mat, b)
    status, payload = _kernel.lp_feasible(int_rows, int_rhs)
    if status != "feasible":
        return None
    lam = [Fraction(0)] * ncols
    for col, num, den in payload:
        lam[col] = Fraction(num, den)
    return lam


def _membership_support(points: list, x: RationalPoint):
    """Support of a basic convex combination of ``points`` hitting x, or None."""
    n = x.dim
    rows = []
    rhs = []
    for i in range(n):
        xi = x.coords[i]
        d = xi.denominator
        rows.append([p[i] * d for p in points])
        rhs.append(xi.numerator)
    rows.append([1] * len(points))
    rhs.append(1)
    status, payload = _kernel.lp_feasible(rows, rhs)
    if status != "feasible":
        return None
    return [(points[col], Fraction(num, den)) for col, num, den in payload]


def hull_membership(points, x) -> Optional[ConvexCombination]:
    """Certificate that x lies in the convex hull of the given lattice points.

    Returns a verified ConvexCombination with target x, or None when x is
    outside the hull.  ``points`` may be a LatticeSet or any iterable of
    integer points.
    """
    pts = _point_list(points)
    x = RationalPoint(x)
    if x.dim != len(pts[0]):
        raise UsageError(f"dimension mismatch: point set is {len(pts[0])}-d, x is {x.dim}-d")
    # cheap exact rejections and the one-point fast path
    for i in range(x.dim):
        lo = min(p[i] for p in pts)
        hi = max(p[i] for p in pts)
        if x.coords[i] < lo or x.coords[i] > hi:
            return None
    if x.is_integral():
        xi = x.as_int_tuple()
        if xi in set(pts):
            return ConvexCombination([(xi, 1)])
    support = _membership_support(pts, x)
    if support is None:
        return None
    comb = ConvexCombination(support)
    if comb.target != x:
        raise InternalError(f"certificate target {comb.target} differs from {x}")
    return comb


def infeasibility_gap(points, x) -> Optional[Fraction]:
    """Positive phase-1 optimum when x is outside the hull, else None.

    The gap is an exact certificate-of-infeasibility figure: it is the
    minimum total artificial mass needed to satisfy the membership
    system, and it is zero exactly on hull members.
    """
    pts = _point_list(points)
    x = RationalPoint(x)
    n = x.dim
    rows = []
    rhs = []
    for i in range(n):
        d = x.coords[i].denominator
        rows.append([p[i] * d for p in pts])
        rhs.append(x.coords[i].numerator)
    rows.append([1] * len(pts))
    rhs.append(1)
    status, payload = _kernel.lp_feasible(rows, rhs)
    if status == "feasible":
        return None
    num, den = payload
    return Fraction(num, den)


def _reduce_support(columns: list, weights: list):
    """Pivot weight along exact null directions until the active columns
    are linearly independent.

    ``columns`` are integer tuples (stacked coordinates), ``weights``
    positive Fractions.  Returns the surviving (column_index, weight)
    pairs.  Each round finds an affine dependency and drives at least one
    weight to zero, so at most len(columns) rounds run.
    """
    active = list(range(len(columns)))
    w = {i: weights[i] for i in active}
    height = len(columns[0])
    while True:
        rows = [[columns[i][r] for i in active] for r in range(height)]
        null = _kernel.nullspace_vector(rows)
        if null is None:
            return [(i, w[i]) for i in active]
        if all(v <= 0 for v in null):
            null = [-v for v in null]
        step = None
        for i, v in zip(active, null):
            if v > 0:
                ratio = w[i] / v
                if step is None or ratio < step:
                    step = ratio
        survivors = []
        for i, v in zip(active, null):
            nw = w[i] - step * v
            if nw < 0:
                raise InternalError("negative weight during support reduction")
            if nw > 0:
                w[i] = nw
                survivors.append(i)
            else:
                del w[i]
        active = survivors


def caratheodory_reduce(comb: ConvexCombination, dim: Optional[int] = None) -> ConvexCombination:
    """Shrink a convex combination to at most dim + 1 support points.

    Repeatedly finds an exact affine dependency among the support points
    and moves weight along it until some weight hits zero.  The target is
    preserved exactly and the output support is a subset of the input
    support.
    """
    if not isinstance(comb, ConvexCombination):
        raise UsageError("caratheodory_reduce expects a ConvexCombination")
    n = comb.dim
    if dim is not None and dim != n:
        raise UsageError(f"combination lives in dimension {n}, not {dim}")
    if len(comb) <= n + 1:
        return comb
    columns = [pt + (1,) for pt, _ in comb.support]
    weights = [wt for _, wt in comb.support]
    kept = _reduce_support(columns, weights)
    reduced = ConvexCombination([(comb.support[i][0], wt) for i, wt in kept])
    if reduced.target != comb.target:
        raise InternalError("support reduction moved the target")
    if len(reduced) > n + 1:
        raise InternalError("support reduction left a dependent support")
    return reduced


def hull_vertices(points) -> list:
    """Vertices of conv(points): the points outside the hull of the others."""
    pts = _point_list(points)
    if len(pts) == 1:
        return pts
    out = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1 :]
        if _membership_support(others, RationalPoint(p)) is None:
            out.append(p)
    return out


def _independent_directions(pts: list) -> list:
    """A maximal linearly independent subset of {p - pts[0]}."""
    base = pts[0]
    chosen = []
    echelon = []
    for p in pts[1:]:
        d = [a - b for a, b in zip(p, base)]
        vec = list(d)
        for row in echelon:
            lead = next(i for i, v in enumerate(row) if v)
            if vec[lead]:
                f = vec[lead]
                piv = row[lead]
                vec = [piv * a - f * b for a, b in zip(vec, row)]
        if any(vec):
            chosen.append(d)
            echelon.append(vec)
            echelon.sort(key=lambda r: next(i for i, v in enumerate(r) if v))
    return chosen


def _nullspace_basis(rows: list, width: int) -> list:
    """Integer basis of {h : rows @ h = 0} via exact Gauss-Jordan."""
    if not rows:
        basis = []
        for i in range(width):
            e = [0] * width
            e[i] = 1
            basis.append(e)
        return basis
    mat = [[Fraction(v) for v in r] for r in rows]
    pivots = []
    nextrow = 0
    for c in range(width):
        pr = next((r for r in range(nextrow, len(mat)) if mat[r][c]), None)
        if pr is None:
            continue
        mat[pr], mat[nextrow] = mat[nextrow], mat[pr]
        piv = mat[nextrow][c]
        mat[nextrow] = [v / piv for v in mat[nextrow]]
        for r in range(len(mat)):
            if r != nextrow and mat[r][c]:
                f = mat[r][c]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[nextrow])]
        pivots.append(c)
        nextrow += 1
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * width
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -mat[r][fc]
        scale = lcm(*(x.denominator for x in v))
        basis.append([int(x * scale) for x in v])
    return basis


def _primitive_pair(vec: list, c: int):
    """Divide (h, c) by gcd(h); c stays integral because h . x = c holds
    at a lattice point."""
    from math import gcd

    g = 0
    for v in vec:
        g = gcd(g, v)
    if g > 1:
        return tuple(v // g for v in vec), c // g
    return tuple(vec), c


def hull_facets(points):
    """Exact H-representation of conv(points).

    Returns ``(equalities, inequalities)``: the affine hull as integer
    pairs (h, c) meaning h . x == c, and the facets as pairs meaning
    h . x <= c.  Brute force over point subsets; intended for the desk
    scale this package certifies at (n <= 4, small sets).
    """
    pts = _point_list(points)
    n = len(pts[0])
    base = pts[0]
    dirs = _independent_directions(pts)
    d = len(dirs)
    equalities = []
    for h in _nullspace_basis(dirs, n):
        c = sum(a * b for a, b in zip(h, base))
        equalities.append(_primitive_pair(h, c))
    if d == 0:
        return equalities, []
    verts = hull_vertices(pts)
    inequalities = set()
    for team in combinations(verts, d):
        t0 = team[0]
        diffs = [[a - b for a, b in zip(t, t0)] for t in team[1:]]
        if d == 1:
            coeffs = [1]
        else:
            gram = [[sum(a * b for a, b in zip(diff, v)) for v in dirs] for diff in diffs]
            if _rank(gram) != d - 1:
                continue
            coeffs = _kernel.nullspace_vector(gram)
            if coeffs is None:
                continue
        h = [0] * n
        for coef, v in zip(coeffs, dirs):
            if coef:
                for i in range(n):
                    h[i] += coef * v[i]
        if not any(h):
            continue
        c = sum(a * b for a, b in zip(h, t0))
        lo = hi = False
        for p in pts:
            s = sum(a * b for a, b in zip(h, p))
            if s < c:
                lo = True
            elif s > c:
                hi = True
            if lo and hi:
                break
        if lo and hi:
            continue
        if hi:
            h = [-v for v in h]
            c = -c
        inequalities.add(_primitive_pair(h, c))
    return equalities, sorted(inequalities)


def _rank(rows: list) -> int:
    mat = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    width = len(mat[0]) if mat else 0
    for c in range(width):
        pr = next((r for r in range(rank, len(mat)) if mat[r][c]), None)
        if pr is None:
            continue
        mat[pr], mat[rank] = mat[rank], mat[pr]
        piv = mat[rank][c]
        for r in range(rank + 1, len(mat)):
            if mat[r][c]:
                f = mat[r][c] / piv
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank
