import pytest

from daolab.fields import GF, QQ
from daolab.polynomials import PolyRing
from daolab.rings import PresentedRing
from daolab.invariants import InvariantConfig

F = GF(32003)


@pytest.fixture(scope="session")
def config():
    return InvariantConfig(seed=20240915)


@pytest.fixture(scope="session")
def ring_xy():
    """K[x,y] over F32003, graded."""
    return PresentedRing.polynomial_ring(("x", "y"), F)


@pytest.fixture(scope="session")
def ring_xyz():
    return PresentedRing.polynomial_ring(("x", "y", "z"), F)


@pytest.fixture(scope="session")
def quadric_cone():
    """K[x,y,z]/(z^2 - x*y), graded."""
    S = PolyRing(("x", "y", "z"), F)
    x, y, z = S.gens
    return PresentedRing(S, [z * z - x * y])


@pytest.fixture(scope="session")
def double_line():
    """K[x,y]/(y^2), graded, dimension one."""
    S = PolyRing(("x", "y"), F)
    _, y = S.gens
    return PresentedRing(S, [y * y])


@pytest.fixture(scope="session")
def depthless_ring():
    """K[x,y]/(xy, x^2): x kills m, so depth 0."""
    S = PolyRing(("x", "y"), F)
    x, y = S.gens
    return PresentedRing(S, [x * y, x * x])


@pytest.fixture(scope="session")
def seven_variable_ring():
    from daolab.scenarios import seven_variable_local_ring

    return seven_variable_local_ring(F)


@pytest.fixture(scope="session")
def ring_xy_rational():
    return PresentedRing.polynomial_ring(("x", "y"), QQ)
