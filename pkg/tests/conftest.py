import pytest

from latround import LatticeSet


@pytest.fixture
def hole_pair():
    """Two integrally convex segments whose sum has a hole at (1, 1)."""
    return LatticeSet([(0, 0), (1, 1)]), LatticeSet([(1, 0), (0, 1)])


@pytest.fixture
def lnat_triple():
    """Three midpoint-convex pairs whose sum has a hole at (1, 1, 1)."""
    return (
        LatticeSet([(0, 0, 0), (1, 1, 0)]),
        LatticeSet([(0, 0, 0), (0, 1, 1)]),
        LatticeSet([(0, 0, 0), (1, 0, 1)]),
    )


HOLE_SUM_POINTS = ((0, 1), (1, 0), (1, 2), (2, 1))

TRIPLE_SUM_POINTS = (
    (0, 0, 0),
    (0, 1, 1),
    (1, 0, 1),
    (1, 1, 0),
    (1, 1, 2),
    (1, 2, 1),
    (2, 1, 1),
    (2, 2, 2),
)
