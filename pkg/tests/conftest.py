import pytest

from kashiwara.algebra import get_algebras
from kashiwara.rootdata import cartan_type


def algebras(name, delta_sign=1):
    return get_algebras(cartan_type(name), 6, delta_sign)


@pytest.fixture(scope="session")
def A1():
    return algebras("A1")


@pytest.fixture(scope="session")
def A2():
    return algebras("A2")


@pytest.fixture(scope="session")
def B2():
    return algebras("B2")


@pytest.fixture(scope="session")
def G2():
    return algebras("G2")
