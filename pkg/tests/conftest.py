import pytest

from sparsinv import make_field


@pytest.fixture(scope="session")
def gf2():
    return make_field(2, 1)


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2, [1, 1, 1])  # z^2 + z + 1


@pytest.fixture(scope="session")
def gf8():
    return make_field(2, 3, [1, 1, 0, 1])  # z^3 + z + 1


@pytest.fixture(scope="session")
def gf9():
    return make_field(3, 2, [1, 0, 1])  # z^2 + 1


@pytest.fixture(scope="session")
def gf16():
    return make_field(2, 4, [1, 1, 0, 0, 1])  # z^4 + z + 1
