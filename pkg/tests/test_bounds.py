from fractions import Fraction

import pytest

from latround import UsageError, alpha_beta_compare, bound_pair, bounds_table, theta
from latround.bounds import Comparison, floor_sqrt, unit_cube_radius_sq

# the published 6x5 reference grid: (floor alpha, floor beta, smaller flag)
REFERENCE_TABLE = {
    2: [(0, 0, None), (1, 1, None), (1, 1, None), (1, 1, None), (1, 1, None)],
    3: [(0, 0, None), (1, 1, None), (2, 1, "beta"), (2, 1, "beta"), (2, 1, "beta")],
    4: [(0, 1, "alpha"), (1, 1, None), (2, 1, "beta"), (3, 2, "beta"), (3, 2, "beta")],
    8: [(0, 1, "alpha"), (1, 2, "alpha"), (2, 2, None), (3, 2, "beta"), (4, 3, "beta")],
    12: [(0, 1, "alpha"), (1, 2, "alpha"), (2, 3, "alpha"), (3, 3, None), (4, 3, "beta")],
    16: [(0, 2, "alpha"), (1, 2, "alpha"), (2, 3, "alpha"), (3, 4, "alpha"), (4, 4, None)],
}


def test_bound_pair_2_2():
    pair = bound_pair(2, 2)
    assert pair.alpha == 1
    assert pair.beta_sq == 1
    assert (pair.floor_alpha, pair.floor_beta) == (1, 1)


def test_bound_pair_8_5():
    pair = bound_pair(8, 5)
    assert pair.alpha == Fraction(35, 8)
    assert pair.beta_sq == Fraction(40, 4)
    assert (pair.floor_alpha, pair.floor_beta) == (4, 3)


@pytest.mark.parametrize("n", [2, 3, 5, 17, 100])
def test_bound_pair_single_summand(n):
    pair = bound_pair(n, 1)
    assert pair.alpha == 1 - Fraction(1, n)
    assert pair.floor_alpha == 0


def test_bound_pair_rejects_nonpositive():
    with pytest.raises(UsageError):
        bound_pair(0, 3)
    with pytest.raises(UsageError):
        bound_pair(3, 0)


def test_theta_values():
    assert theta(3) == Fraction(27, 16)
    assert theta(4) == Fraction(16, 9)
    # independent big-integer evaluation: 5^3 over 4 * 4^2
    assert theta(5) == Fraction(5**3, 4 * 4**2) == Fraction(125, 64)
    with pytest.raises(UsageError):
        theta(1)


@pytest.mark.parametrize("m", [2, 3, 10, 50])
def test_compare_flat_dimension_two(m):
    assert alpha_beta_compare(2, m) == Comparison.EQUAL


@pytest.mark.parametrize("n", [2, 3, 4, 10, 40])
def test_compare_single_summand(n):
    assert alpha_beta_compare(n, 1) == Comparison.ALPHA_SMALLER


def test_compare_three_two():
    assert alpha_beta_compare(3, 2) == Comparison.BETA_SMALLER


def test_compare_rejects_out_of_range():
    with pytest.raises(UsageError):
        alpha_beta_compare(1, 2)


def test_reference_table_reproduced():
    table = bounds_table()
    assert [n for n, _ in table] == [2, 3, 4, 8, 12, 16]
    for n, row in table:
        assert row == REFERENCE_TABLE[n], f"row n={n}"


def test_trichotomy_sweep_small():
    for n in range(2, 60):
        for m in range(1, 60):
            got = alpha_beta_compare(n, m)
            if m == 1:
                assert got == Comparison.ALPHA_SMALLER, (n, m)
            elif n == 2:
                assert got == Comparison.EQUAL, (n, m)
            elif 3 <= n <= 4 * m - 3:
                assert got == Comparison.BETA_SMALLER, (n, m)
            else:
                assert got == Comparison.ALPHA_SMALLER, (n, m)


def test_threshold_equivalence_small():
    for n in range(3, 40):
        t = theta(n)
        for m in range(2, 40):
            cmp_ = alpha_beta_compare(n, m)
            assert (cmp_ == Comparison.ALPHA_SMALLER) == (m < t), (n, m)
            assert (cmp_ == Comparison.BETA_SMALLER) == (m > t), (n, m)


def test_sandwich_small():
    for n in range(5, 500):
        t = theta(n)
        assert Fraction(n + 2, 4) < t < Fraction(n + 3, 4), n


def test_theta_never_integral_small():
    for n in range(3, 500):
        assert theta(n).denominator != 1, n


def test_floor_sqrt_property():
    for num in range(0, 400):
        for den in (1, 2, 3, 4, 7):
            q = Fraction(num, den)
            k = floor_sqrt(q)
            assert k * k <= q < (k + 1) * (k + 1)


def test_unit_cube_radius():
    assert unit_cube_radius_sq(3) == Fraction(3, 4)
    pair = bound_pair(3, 2)
    assert pair.beta_sq == unit_cube_radius_sq(3) * 2
