import pytest

from semiinf.rootsystem import build_root_system


@pytest.fixture(scope="session")
def A1():
    return build_root_system("A1")


@pytest.fixture(scope="session")
def A2():
    return build_root_system("A2")


@pytest.fixture(scope="session")
def B2():
    return build_root_system("B2")


@pytest.fixture(scope="session")
def G2():
    return build_root_system("G2")
