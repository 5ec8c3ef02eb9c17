from fractions import Fraction
from itertools import product

import pytest

from latround import (
    LatticeSet,
    UsageError,
    find_hole,
    integral_convexity_witness,
    integral_neighborhood,
    is_hole_free,
    is_integrally_convex,
    is_lnat_convex,
    is_mnat_convex,
    lnat_violation,
    midpoint_criterion,
    mnat_violation,
)
from latround.oracle import oracle_membership

from conftest import HOLE_SUM_POINTS, TRIPLE_SUM_POINTS


def all_subsets(cells):
    for mask in range(1, 1 << len(cells)):
        yield [cells[i] for i in range(len(cells)) if mask >> i & 1]


def test_lattice_set_basics():
    s = LatticeSet([(2, 1), (0, 0), (2, 1)])
    assert s.points == ((0, 0), (2, 1))
    assert s.bbox == ((0, 2), (0, 1))
    assert (2, 1) in s and (1, 1) not in s
    with pytest.raises(UsageError):
        LatticeSet([])
    with pytest.raises(UsageError):
        LatticeSet([(0, 0), (1, 1, 1)])
    with pytest.raises(UsageError):
        LatticeSet([(Fraction(1, 2), 0)])


def test_integral_neighborhood_fractional():
    nbh = integral_neighborhood((Fraction(1, 2), Fraction(3, 4)))
    assert nbh.members == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_integral_neighborhood_pinned():
    nbh = integral_neighborhood((1, Fraction(1, 2)))
    assert nbh.members == ((1, 0), (1, 1))


def test_integral_neighborhood_integer_point():
    assert integral_neighborhood((2, 3)).members == ((2, 3),)


def test_neighborhood_cardinality_property():
    import random

    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(1, 4)
        coords = [Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3, 4])) for _ in range(n)]
        nbh = integral_neighborhood(coords)
        frac = sum(1 for c in coords if c.denominator > 1)
        assert len(nbh) == 2**frac


def test_unit_box_subsets_are_integrally_convex():
    for s in all_subsets(list(product((0, 1), repeat=2))):
        assert is_integrally_convex(LatticeSet(s))


def test_hole_sum_is_not_integrally_convex():
    assert not is_integrally_convex(LatticeSet(HOLE_SUM_POINTS))


def test_long_diagonal_is_not_integrally_convex():
    s = LatticeSet([(0, 0), (2, 1)])
    witness = integral_convexity_witness(s)
    assert witness is not None
    # the witness is genuinely a hull point with an empty or insufficient
    # local neighborhood: cross-checked by the enumeration oracle
    assert oracle_membership(s, witness.coords)
    local = [p for p in integral_neighborhood(witness) if p in s]
    assert not local or not oracle_membership(LatticeSet(local), witness.coords)


def test_hole_free_examples():
    assert find_hole(LatticeSet(HOLE_SUM_POINTS)) == (1, 1)
    assert find_hole(LatticeSet(TRIPLE_SUM_POINTS)) == (1, 1, 1)
    assert is_hole_free(LatticeSet([(0, 0), (1, 0), (2, 0)]))


def test_mnat_examples():
    assert is_mnat_convex(LatticeSet([(5, 7)]))
    assert not is_mnat_convex(LatticeSet([(0, 0), (1, 1)]))
    assert mnat_violation(LatticeSet([(0, 0), (1, 1)])) == ((1, 1), (0, 0), 0)
    assert is_mnat_convex(LatticeSet([(0, 0), (1, 0), (0, 1)]))


def test_lnat_examples():
    assert is_lnat_convex(LatticeSet([(0, 0, 0), (1, 1, 0)]))
    assert lnat_violation(LatticeSet([(1, 0), (0, 1)])) == ((0, 1), (1, 0))
    assert is_lnat_convex(LatticeSet([(0, 0), (1, 1)]))


def test_predicates_reject_empty():
    empty = LatticeSet([], dim=2, allow_empty=True)
    for fn in (is_integrally_convex, is_hole_free, is_mnat_convex, is_lnat_convex):
        with pytest.raises(UsageError):
            fn(empty)


def test_exhaustive_grid_implications():
    """Class inclusions and the midpoint cross-check on every nonempty
    subset of the 3x3 grid."""
    cells = [(a, b) for a in range(3) for b in range(3)]
    counts = {"mnat": 0, "lnat": 0, "ic": 0}
    for raw in all_subsets(cells):
        s = LatticeSet(raw)
        ic = is_integrally_convex(s)
        if ic:
            counts["ic"] += 1
            assert is_hole_free(s), s.points
        if is_mnat_convex(s):
            counts["mnat"] += 1
            assert ic, s.points
        if is_lnat_convex(s):
            counts["lnat"] += 1
            assert ic, s.points
        assert midpoint_criterion(s) == ic, s.points
    assert counts == {"mnat": 68, "lnat": 68, "ic": 117}


def test_one_dimensional_sets():
    assert is_integrally_convex(LatticeSet([(0,), (1,), (2,)]))
    assert not is_integrally_convex(LatticeSet([(0,), (2,)]))
    assert find_hole(LatticeSet([(0,), (2,)])) == (1,)
