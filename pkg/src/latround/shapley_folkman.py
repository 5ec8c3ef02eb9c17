"""Decomposition and rounding pipelines for Minkowski sums.

Given integrally convex summands and a hull point x of their sum W,
these pipelines produce an actual sum point z within the closed-form
distance bounds: alpha(n, m) in the max norm, beta(n, m) in the
Euclidean norm, 1 - 1/n for exchange-convex summands, and the halved
summand count for midpoint-convex summands.  Every step carries an
exact certificate and every claimed bound is asserted before a result
is returned.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .bounds import bound_pair, floor_sqrt
from .discrete_sets import (
    LatticeSet,
    integral_convexity_witness,
    integral_neighborhood,
    lnat_violation,
    mnat_violation,
)
from .errors import DomainError, InternalError, UsageError
from .exact_geometry import (
    ConvexCombination,
    RationalPoint,
    _membership_support,
    _reduce_support,
    caratheodory_reduce,
    hull_membership,
    infeasibility_gap,
)
from .minkowski import WitnessedSum, minkowski_sum

__all__ = [
    "SfDecomposition",
    "RoundingResult",
    "decompose_into_summand_hulls",
    "local_restrictions",
    "sf_decompose",
    "cube_round",
    "sf_round_linf",
    "sf_round_l2",
    "mnat_round",
    "lnat_round",
]


class SfDecomposition:
    """Index split of a sum decomposition: hull points on I, lattice
    points on J, reconstructing x exactly with |I| <= min(n, m)."""

    __slots__ = ("x", "fractional", "integral")

    def __init__(self, x: RationalPoint, fractional: dict, integral: dict):
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "fractional", dict(fractional))
        object.__setattr__(self, "integral", dict(integral))
        n = x.dim
        m = len(self.fractional) + len(self.integral)
        if len(self.fractional) > min(n, m):
            raise InternalError(
                f"{len(self.fractional)} fractional summands exceed min({n}, {m})"
            )
        total = RationalPoint([0] * n)
        for _, comb in self.fractional.items():
            total = total + comb.target
        for _, z in self.integral.items():
            total = total + RationalPoint(z)
        if total != x:
            raise InternalError(f"decomposition reconstructs {total}, not {x}")

    def __setattr__(self, name, value):
        raise AttributeError("SfDecomposition is immutable")

    @property
    def index_sets(self):
        return (tuple(sorted(self.fractional)), tuple(sorted(self.integral)))

    def hull_point(self, i: int) -> RationalPoint:
        return self.fractional[i].target

    def __repr__(self):
        i_set, j_set = self.index_sets
        return f"SfDecomposition(I={list(i_set)}, J={list(j_set)})"


class RoundingResult:
    """A sum point z near x, with exact distances and the asserted bound.

    Distances are recomputed from x and z on construction; whichever
    bounds are supplied are checked right here, so a RoundingResult that
    exists honors its bounds.
    """

    __slots__ = (
        "x",
        "z",
        "distance_linf",
        "distance_l2_sq",
        "bound_linf",
        "bound_l2_sq",
        "theorem_tag",
    )

    def __init__(
        self,
        x: RationalPoint,
        z: tuple,
        theorem_tag: str,
        bound_linf: Optional[Fraction] = None,
        bound_l2_sq: Optional[Fraction] = None,
    ):
        x = RationalPoint(x)
        z = tuple(int(c) for c in z)
        d_linf = x.linf_distance(RationalPoint(z))
        d_l2sq = x.l2sq_distance(RationalPoint(z))
        if bound_linf is not None and d_linf > bound_linf:
            raise InternalError(
                f"max-norm distance {d_linf} violates the bound {bound_linf}"
            )
        if bound_l2_sq is not None and d_l2sq > bound_l2_sq:
            raise InternalError(
                f"squared distance {d_l2sq} violates the bound {bound_l2_sq}"
            )
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "distance_linf", d_linf)
        object.__setattr__(self, "distance_l2_sq", d_l2sq)
        object.__setattr__(self, "bound_linf", bound_linf)
        object.__setattr__(self, "bound_l2_sq", bound_l2_sq)
        object.__setattr__(self, "theorem_tag", theorem_tag)

    def __setattr__(self, name, value):
        raise AttributeError("RoundingResult is immutable")

    def __repr__(self):
        return (
            f"RoundingResult(z={self.z}, linf={self.distance_linf}, "
            f"l2_sq={self.distance_l2_sq}, tag={self.theorem_tag!r})"
        )


def decompose_into_summand_hulls(w: WitnessedSum, x) -> list:
    """Split x in conv(W) into certified per-summand hull points.

    Returns [(y_i, combination over summand i)] with sum(y_i) = x.  The
    split pushes a Caratheodory-reduced combination of x over the sum
    points through the stored witness tuples, so it is deterministic.
    """
    x = RationalPoint(x)
    if x.dim != w.dim:
        raise UsageError(f"x is {x.dim}-dimensional, the sum is {w.dim}-dimensional")
    comb = hull_membership(w.result, x)
    if comb is None:
        raise _outside_hull(w, x)
    comb = caratheodory_reduce(comb)
    m = len(w.summands)
    per_set = [dict() for _ in range(m)]
    for point, weight in comb.support:
        witness = w.witnesses[point]
        for i in range(m):
            s = witness[i]
            per_set[i][s] = per_set[i].get(s, Fraction(0)) + weight
    out = []
    total = RationalPoint([0] * x.dim)
    for i in range(m):
        part = ConvexCombination(per_set[i].items())
        out.append((part.target, part))
        total = total + part.target
    if total != x:
        raise InternalError("summand hull points do not add up to x")
    return out


def local_restrictions(sets: Sequence[LatticeSet], ys: Sequence) -> list:
    """Clip each summand to the integral neighborhood of its hull point.

    Returns [(T_i, combination certifying y_i in conv(T_i))].  T_i sits
    inside a translated unit cube by construction.  A failed certificate
    means the summand is not integrally convex at y_i, which is reported
    with that witness.
    """
    if len(sets) != len(ys):
        raise UsageError("one hull point per summand is required")
    out = []
    for i, (s, y) in enumerate(zip(sets, ys)):
        y = RationalPoint(y)
        if y.dim != s.dim:
            raise UsageError("dimension mismatch between summand and hull point")
        members = integral_neighborhood(y).members
        local = s.intersect_points(members)
        support = None
        if len(local):
            support = _membership_support(list(local.points), y)
        if support is None:
            raise DomainError(
                f"summand {i} is not integrally convex: {y} has no local certificate",
                witness=y,
            )
        out.append((local, ConvexCombination(support)))
    return out


def sf_decompose(ts: Sequence[LatticeSet], x, certs: Sequence[ConvexCombination]) -> SfDecomposition:
    """Pivot a per-summand hull representation of x down to basic form.

    The stacked system has one convex-weight row per summand and one row
    per coordinate; driving the given feasible weights to a basic
    solution leaves at most min(n, m) summands with more than one
    support point.  Those form I (hull points); the rest contribute a
    single lattice point each and form J.
    """
    x = RationalPoint(x)
    ts = list(ts)
    certs = list(certs)
    if len(ts) != len(certs) or not ts:
        raise UsageError("need one certificate per summand")
    n = x.dim
    m = len(ts)
    total = RationalPoint([0] * n)
    for s, cert in zip(ts, certs):
        if not isinstance(cert, ConvexCombination):
            raise UsageError("certificates must be ConvexCombination values")
        if cert.dim != n or s.dim != n:
            raise UsageError("dimension mismatch in decomposition input")
        for p, _ in cert.support:
            if p not in s:
                raise UsageError(f"certificate point {p} is not in its summand")
        total = total + cert.target
    if total != x:
        raise UsageError(f"certificates sum to {total}, not {x}")

    columns = []
    weights = []
    owners = []
    for i, cert in enumerate(certs):
        marker = [0] * m
        marker[i] = 1
        for p, wt in cert.support:
            columns.append(tuple(marker) + p)
            weights.append(wt)
            owners.append((i, p))
    kept = _reduce_support(columns, weights)
    per_set: list = [[] for _ in range(m)]
    for idx, wt in kept:
        i, p = owners[idx]
        per_set[i].append((p, wt))
    fractional = {}
    integral = {}
    for i, sup in enumerate(per_set):
        if len(sup) == 1 and sup[0][1] == 1:
            integral[i] = sup[0][0]
        else:
            fractional[i] = ConvexCombination(sup)
    return SfDecomposition(x, fractional, integral)


def cube_round(s: LatticeSet, x, cert: ConvexCombination) -> tuple:
    """Nearest point of a unit-cube-contained set in the max norm.

    Requires n >= 2, s inside a translated unit cube and a certificate
    that x is in conv(s).  The exact scan over s (at most 2^n points)
    returns the lexicographically least minimizer; its distance is
    asserted to be at most 1 - 1/n, which holds for every certified
    input.
    """
    x = RationalPoint(x)
    n = x.dim
    if n < 2:
        raise UsageError("cube rounding needs dimension at least 2")
    if not isinstance(s, LatticeSet) or len(s) == 0 or s.dim != n:
        raise UsageError("need a nonempty lattice set of matching dimension")
    for lo, hi in s.bbox:
        if hi - lo > 1:
            raise UsageError("set is not contained in a translated unit cube")
    if not isinstance(cert, ConvexCombination) or cert.target != x:
        raise UsageError("certificate does not certify x")
    for p, _ in cert.support:
        if p not in s:
            raise UsageError(f"certificate point {p} is outside the set")
    best = None
    best_d = None
    for p in s.points:
        d = x.linf_distance(RationalPoint(p))
        if best_d is None or d < best_d:
            best, best_d = p, d
    limit = Fraction(n - 1, n)
    if best_d > limit:
        raise InternalError(
            f"cube rounding distance {best_d} exceeds 1 - 1/{n}; upstream bug"
        )
    return best


def _verify_summands(sets, witness_fn, label):
    for i, s in enumerate(sets):
        bad = witness_fn(s)
        if bad is not None:
            raise DomainError(f"summand {i} is not {label}: witness {bad}", witness=bad)


def _check_sets(sets) -> int:
    sets = list(sets)
    if not sets:
        raise UsageError("need at least one summand")
    for s in sets:
        if not isinstance(s, LatticeSet) or len(s) == 0:
            raise UsageError("summands must be nonempty lattice sets")
    dim = sets[0].dim
    if any(s.dim != dim for s in sets):
        raise UsageError("summands have mixed dimensions")
    return dim


def _integral_shortcut(w: WitnessedSum, x: RationalPoint):
    if x.is_integral():
        z = x.as_int_tuple()
        if z in w:
            return z
    return None


def _outside_hull(w: WitnessedSum, x: RationalPoint) -> DomainError:
    gap = infeasibility_gap(w.result, x)
    return DomainError(
        f"{x} is outside the hull of the sum (phase-1 infeasibility gap {gap})",
        witness=x,
    )


def sf_round_linf(sets: Sequence[LatticeSet], x, verify: bool = True) -> RoundingResult:
    """Round x in conv(W) to z in W with max-norm distance at most
    alpha(n, m); at most min(n, m) - 1 when x is integral.

    The pipeline: split x over the summand hulls, clip each summand to
    the integral neighborhood of its share, pivot to a basic
    decomposition, and cube-round the at most min(n, m) fractional
    shares.  ``verify=False`` skips the integral convexity check of the
    summands and trusts the caller.
    """
    sets = list(sets)
    n = _check_sets(sets)
    if n < 2:
        raise UsageError("the max-norm pipeline needs dimension at least 2")
    x = RationalPoint(x)
    if x.dim != n:
        raise UsageError("dimension mismatch between x and the summands")
    if verify:
        _verify_summands(sets, integral_convexity_witness, "integrally convex")
    m = len(sets)
    pair = bound_pair(n, m)
    w = minkowski_sum(sets)
    shortcut = _integral_shortcut(w, x)
    if shortcut is not None:
        return RoundingResult(x, shortcut, "ic-linf", bound_linf=Fraction(min(n, m) - 1))
    ys = decompose_into_summand_hulls(w, x)
    locals_ = local_restrictions(sets, [y for y, _ in ys])
    dec = sf_decompose([t for t, _ in locals_], x, [c for _, c in locals_])
    parts = []
    for i, (t, _) in enumerate(locals_):
        if i in dec.integral:
            parts.append(dec.integral[i])
        else:
            comb = dec.fractional[i]
            parts.append(cube_round(t, comb.target, comb))
    z = tuple(sum(c) for c in zip(*parts))
    if z not in w:
        raise InternalError(f"rounded point {z} is not a sum point")
    bound = Fraction(min(n, m) - 1) if x.is_integral() else pair.alpha
    return RoundingResult(x, z, "ic-linf", bound_linf=bound)


def sf_round_l2(sets: Sequence[LatticeSet], x, verify: bool = True) -> RoundingResult:
    """Round x in conv(W) to the nearest point of the clipped sum in the
    Euclidean norm; the squared distance is at most beta(n, m)^2.

    The local restrictions T_i of the summands are summed exhaustively
    and scanned for the exact nearest point, which the Euclidean bound
    guarantees to be within beta(n, m).  For integral x the max-norm
    distance is additionally at most floor(beta(n, m)).
    """
    sets = list(sets)
    n = _check_sets(sets)
    x = RationalPoint(x)
    if x.dim != n:
        raise UsageError("dimension mismatch between x and the summands")
    if verify:
        _verify_summands(sets, integral_convexity_witness, "integrally convex")
    m = len(sets)
    pair = bound_pair(n, m)
    w = minkowski_sum(sets)
    integral = x.is_integral()
    shortcut = _integral_shortcut(w, x)
    if shortcut is not None:
        return RoundingResult(
            x,
            shortcut,
            "ic-l2",
            bound_l2_sq=pair.beta_sq,
            bound_linf=Fraction(pair.floor_beta),
        )
    ys = decompose_into_summand_hulls(w, x)
    locals_ = local_restrictions(sets, [y for y, _ in ys])
    clipped = minkowski_sum([t for t, _ in locals_])
    best = None
    best_d = None
    for p in clipped.result.points:
        d = x.l2sq_distance(RationalPoint(p))
        if best_d is None or d < best_d:
            best, best_d = p, d
    if best not in w:
        raise InternalError(f"nearest clipped point {best} is not a sum point")
    return RoundingResult(
        x,
        best,
        "ic-l2",
        bound_l2_sq=pair.beta_sq,
        bound_linf=Fraction(pair.floor_beta) if integral else None,
    )


def mnat_round(sets: Sequence[LatticeSet], x, verify: bool = True) -> RoundingResult:
    """Round over exchange-convex summands: distance at most 1 - 1/n.

    The sum of exchange-convex sets is again exchange-convex, hence
    integrally convex, so the whole sum can be treated as one summand:
    clip it to the integral neighborhood of x and cube-round there.
    Integral x short-circuits to itself because such sums are hole-free.
    """
    sets = list(sets)
    n = _check_sets(sets)
    if n < 2:
        raise UsageError("the exchange-convex pipeline needs dimension at least 2")
    x = RationalPoint(x)
    if x.dim != n:
        raise UsageError("dimension mismatch between x and the summands")
    if verify:
        _verify_summands(sets, mnat_violation, "exchange-convex")
    w = minkowski_sum(sets)
    bound = Fraction(n - 1, n)
    shortcut = _integral_shortcut(w, x)
    if shortcut is not None:
        return RoundingResult(x, shortcut, "mnat", bound_linf=bound)
    if hull_membership(w.result, x) is None:
        raise _outside_hull(w, x)
    members = integral_neighborhood(x).members
    local = w.result.intersect_points(members)
    support = _membership_support(list(local.points), x) if len(local) else None
    if support is None:
        # the sum of verified exchange-convex sets is integrally convex,
        # so a missing local certificate means unverified bad input
        if verify:
            raise InternalError("verified exchange-convex sum lost integral convexity")
        raise DomainError(
            f"sum is not integrally convex at {x}; summands were not verified",
            witness=x,
        )
    z = cube_round(local, x, ConvexCombination(support))
    if z not in w:
        raise InternalError(f"rounded point {z} is not a sum point")
    return RoundingResult(x, z, "mnat", bound_linf=bound)


def lnat_round(
    sets: Sequence[LatticeSet], x, norm: str = "best", verify: bool = True
) -> RoundingResult:
    """Round over midpoint-convex summands by pairing them first.

    Pairwise sums of midpoint-convex sets are integrally convex, so
    summands are paired (1,2), (3,4), ... and the max-norm or Euclidean
    pipeline runs with the halved count m' = ceil(m/2), improving the
    bounds to alpha(n, m') and beta(n, m').  norm picks the delegate:
    "linf", "l2", or "best" for the better of the two.
    """
    if norm not in ("linf", "l2", "best"):
        raise UsageError(f"unknown norm {norm!r}")
    sets = list(sets)
    n = _check_sets(sets)
    if n < 2:
        raise UsageError("the midpoint-convex pipeline needs dimension at least 2")
    x = RationalPoint(x)
    if x.dim != n:
        raise UsageError("dimension mismatch between x and the summands")
    if verify:
        _verify_summands(sets, lnat_violation, "midpoint-convex")
    effective = []
    for i in range(0, len(sets), 2):
        if i + 1 < len(sets):
            effective.append(minkowski_sum(sets[i : i + 2]).result)
        else:
            effective.append(sets[i])
    for i, s in enumerate(effective):
        bad = integral_convexity_witness(s)
        if bad is not None:
            if verify:
                raise InternalError(
                    f"pair sum {i} of verified midpoint-convex sets is not "
                    f"integrally convex at {bad}"
                )
            raise DomainError(
                f"pair sum {i} is not integrally convex; summands were not verified",
                witness=bad,
            )
    m_eff = len(effective)
    pair = bound_pair(n, m_eff)
    integral = x.is_integral()
    if norm == "linf":
        got = sf_round_linf(effective, x, verify=False)
        return RoundingResult(x, got.z, "lnat-linf", bound_linf=got.bound_linf)
    if norm == "l2":
        got = sf_round_l2(effective, x, verify=False)
        return RoundingResult(
            x, got.z, "lnat-l2", bound_l2_sq=got.bound_l2_sq, bound_linf=got.bound_linf
        )
    a = sf_round_linf(effective, x, verify=False)
    b = sf_round_l2(effective, x, verify=False)
    z = a.z if a.distance_linf <= b.distance_linf else b.z
    # the better of the two is within min(alpha, beta) in the max norm,
    # i.e. within alpha and within beta at once; beta is irrational, so
    # its half of the check compares squares
    d = min(a.distance_linf, b.distance_linf)
    if d > pair.alpha or d * d > pair.beta_sq:
        raise InternalError(f"combined distance {d} violates the paired bound")
    bound_linf = Fraction(min(pair.floor_alpha, pair.floor_beta)) if integral else pair.alpha
    return RoundingResult(x, z, "lnat-best", bound_linf=bound_linf)
