import pytest

from affine_nichols.roots import preset


@pytest.fixture(scope="session")
def a2():
    return preset("A2")


@pytest.fixture(scope="session")
def a3():
    return preset("A3")


@pytest.fixture(scope="session")
def b2():
    return preset("B2")


@pytest.fixture(scope="session")
def g2():
    return preset("G2")
