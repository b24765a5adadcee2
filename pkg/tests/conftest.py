import pytest

from zmeasure import GrandParams, ZParams


@pytest.fixture(scope="session")
def real_pair() -> ZParams:
    return ZParams(0.5, 1.0 / 3.0)


@pytest.fixture(scope="session")
def negative_pair() -> ZParams:
    return ZParams(-0.4, -0.7)


@pytest.fixture(scope="session")
def complex_pair() -> ZParams:
    return ZParams(0.5 + 1.5j, 0.5 - 1.5j)


@pytest.fixture(scope="session")
def gp02(real_pair) -> GrandParams:
    return GrandParams(real_pair, 0.2)


@pytest.fixture(scope="session")
def gp03(real_pair) -> GrandParams:
    return GrandParams(real_pair, 0.3)
