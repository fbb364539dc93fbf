import pytest

from osr import builtin_family


@pytest.fixture(scope="session")
def family8():
    return builtin_family(8)


@pytest.fixture(scope="session")
def family6():
    return builtin_family(6)
