import pytest

from fqx.gf import make_field
from fqx.polyring import Poly


@pytest.fixture(scope="session")
def F3():
    return make_field(3)


@pytest.fixture(scope="session")
def F5():
    return make_field(5)


@pytest.fixture(scope="session")
def F7():
    return make_field(7)


@pytest.fixture(scope="session")
def F9():
    return make_field(3, 2)


def P(F, *coeffs):
    """Polynomial from low-to-high coefficients."""
    return Poly(F, list(coeffs))
