"""Acceptance suite.

One test per acceptance criterion, each printing a pass/fail line
(visible with ``pytest -s`` or in the captured-output report).  Stated
time budgets are asserted; exact value checks carry zero tolerance.
"""

import json
import random
import time
from fractions import Fraction
from itertools import product

import pytest

from latround import (
    LatticeSet,
    RationalPoint,
    bound_pair,
    cube_round,
    find_holes,
    hull_membership,
    is_hole_free,
    is_integrally_convex,
    is_lnat_convex,
    is_mnat_convex,
    lnat_round,
    minkowski_sum,
    sf_round_linf,
    theta,
)
from latround.cli import main
from latround.oracle import oracle_integral_convexity, oracle_membership
from latround.verify import run_bounds_suite, run_rounding_suite

from conftest import HOLE_SUM_POINTS, TRIPLE_SUM_POINTS

S1 = LatticeSet([(0, 0), (1, 1)])
S2 = LatticeSet([(1, 0), (0, 1)])
T1 = LatticeSet([(0, 0, 0), (1, 1, 0)])
T2 = LatticeSet([(0, 0, 0), (0, 1, 1)])
T3 = LatticeSet([(0, 0, 0), (1, 0, 1)])


def _report(number, label, elapsed=None):
    suffix = f" ({elapsed * 1000:.2f} ms)" if elapsed is not None else ""
    print(f"[acceptance] criterion {number} ({label}): PASS{suffix}")


def _best_of(fn, repeats=3):
    fn()  # warm up caches and imports
    best = None
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def test_criterion_1_hole_pair_reproduction():
    def run():
        w = minkowski_sum([S1, S2])
        return w, find_holes(w)

    elapsed, (w, holes) = _best_of(run)
    assert w.result.points == HOLE_SUM_POINTS
    assert holes.points == ((1, 1),)
    assert elapsed < 0.001, f"took {elapsed * 1000:.3f} ms"
    _report(1, "two-summand hole reproduction", elapsed)


def test_criterion_2_max_norm_rounding():
    def run():
        return sf_round_linf([S1, S2], (1, 1))

    elapsed, res = _best_of(run)
    assert res.z in minkowski_sum([S1, S2])
    assert res.distance_linf == 1
    assert bound_pair(2, 2).alpha == 1
    assert elapsed < 0.010, f"took {elapsed * 1000:.3f} ms"
    _report(2, "hole point rounds at distance exactly 1", elapsed)


def test_criterion_3_paired_midpoint_summands():
    def run():
        w = minkowski_sum([T1, T2, T3])
        holes = find_holes(w)
        paired = lnat_round([T1, T2, T3], (1, 1, 1), norm="linf")
        plain = sf_round_linf([T1, T2, T3], (1, 1, 1))
        return w, holes, paired, plain

    elapsed, (w, holes, paired, plain) = _best_of(run)
    assert w.result.points == TRIPLE_SUM_POINTS
    assert holes.points == ((1, 1, 1),)
    assert paired.distance_linf <= 1
    assert bound_pair(3, 3).alpha == 2  # the unpaired guarantee is weaker
    assert plain.distance_linf <= 2
    assert elapsed < 0.050, f"took {elapsed * 1000:.3f} ms"
    _report(3, "pairing improves the three-summand bound", elapsed)


REFERENCE_ROWS = {
    "n=2": ["0 0", "1 1", "1 1", "1 1", "1 1"],
    "n=3": ["0 0", "1 1", "2 1*", "2 1*", "2 1*"],
    "n=4": ["0* 1", "1 1", "2 1*", "3 2*", "3 2*"],
    "n=8": ["0* 1", "1* 2", "2 2", "3 2*", "4 3*"],
    "n=12": ["0* 1", "1* 2", "2* 3", "3 3", "4 3*"],
    "n=16": ["0* 2", "1* 2", "2* 3", "3* 4", "4 4"],
}


def test_criterion_4_reference_table(capsys):
    assert main(["bounds", "--paper-table"]) == 0
    out = capsys.readouterr().out
    rows = [line for line in out.splitlines() if line.startswith("n=")]
    assert len(rows) == 6
    for line in rows:
        key, rest = line.split(maxsplit=1)
        cells = [c.strip() for c in rest.split("  ") if c.strip()]
        assert cells == REFERENCE_ROWS[key], key
    with capsys.disabled():
        _report(4, "published floor grid, all 60 entries and markings")


def test_criterion_5_comparator_sweep():
    t0 = time.perf_counter()
    assert theta(3) == Fraction(27, 16)
    assert theta(4) == Fraction(16, 9)
    reports = run_bounds_suite()
    elapsed = time.perf_counter() - t0
    for rep in reports:
        assert rep.passed, (rep.name, rep.failures[:3])
    by_name = {rep.name: rep for rep in reports}
    assert by_name["comparator matches the case analysis"].checked == 199 * 200
    assert by_name["(n+2)/4 < theta(n) < (n+3)/4 for n >= 5"].checked == 10_000 - 4
    assert elapsed < 5, f"took {elapsed:.2f} s"
    _report(5, "comparator trichotomy and threshold sandwich", elapsed)


def test_criterion_6_unit_cube_tightness():
    for n in range(2, 9):
        pts = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        s = LatticeSet(pts)
        x = tuple(Fraction(1, n) for _ in range(n))
        cert = hull_membership(s, x)
        v = cube_round(s, x, cert)
        assert RationalPoint(x).linf_distance(RationalPoint(v)) == 1 - Fraction(1, n), n
    _report(6, "corner-simplex rounding is tight for n = 2..8")


def test_criterion_7_randomized_theorem_suite():
    t0 = time.perf_counter()
    reports = run_rounding_suite(seed=42, instances=500)
    elapsed = time.perf_counter() - t0
    for rep in reports:
        assert rep.passed, (rep.name, rep.failures[:3])
    by_name = {rep.name: rep for rep in reports}
    assert by_name["max-norm distance within alpha(n, m)"].checked == 500
    assert by_name["squared distance within beta(n, m)^2"].checked == 500
    assert by_name["basic split: |I| <= min(n, m), exact rebuild"].checked == 500
    assert by_name["integral x within min(n, m) - 1"].checked > 50
    assert elapsed < 60, f"took {elapsed:.2f} s"
    _report(7, "500 seeded instances within every bound", elapsed)


def _nonempty_subsets(cells):
    for mask in range(1, 1 << len(cells)):
        yield [cells[i] for i in range(len(cells)) if mask >> i & 1]


def test_criterion_8_class_closure():
    t0 = time.perf_counter()
    grid = [(a, b) for a in range(3) for b in range(3)]
    mnat_family = [
        LatticeSet(s) for s in _nonempty_subsets(grid) if is_mnat_convex(LatticeSet(s))
    ]
    assert len(mnat_family) == 68
    seen = set()
    for i, a in enumerate(mnat_family):
        for b in mnat_family[i:]:
            w = minkowski_sum([a, b])
            if w.result.points in seen:
                continue
            seen.add(w.result.points)
            assert is_mnat_convex(w.result), (a.points, b.points)
            assert is_hole_free(w.result), (a.points, b.points)
    cube = list(product((0, 1), repeat=3))
    lnat_family = [
        LatticeSet(s) for s in _nonempty_subsets(cube) if is_lnat_convex(LatticeSet(s))
    ]
    assert len(lnat_family) == 73
    seen = set()
    for i, a in enumerate(lnat_family):
        for b in lnat_family[i:]:
            w = minkowski_sum([a, b])
            if w.result.points in seen:
                continue
            seen.add(w.result.points)
            assert is_integrally_convex(w.result), (a.points, b.points)
    elapsed = time.perf_counter() - t0
    assert elapsed < 120, f"took {elapsed:.2f} s"
    _report(8, "class closure under pairwise sums, exhaustive", elapsed)


def test_criterion_9_oracle_equivalence():
    t0 = time.perf_counter()
    rng = random.Random(20240501)
    for index in range(1000):
        n = rng.randint(1, 3)
        size = rng.randint(1, 10)
        pts = {tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(size)}
        s = LatticeSet(pts)
        x = tuple(Fraction(rng.randint(-2, 14), rng.choice((1, 2, 3, 4))) for _ in range(n))
        certified = hull_membership(s, x) is not None
        assert certified == oracle_membership(s, x), (index, sorted(pts), x)
    grid = [(a, b) for a in range(3) for b in range(3)]
    for raw in _nonempty_subsets(grid):
        s = LatticeSet(raw)
        assert is_integrally_convex(s) == oracle_integral_convexity(s), s.points
    elapsed = time.perf_counter() - t0
    _report(9, "certified paths agree with the oracles", elapsed)
