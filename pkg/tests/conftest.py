import pytest

from hermite_cs import build_basis


@pytest.fixture(scope="session")
def basis200():
    return build_basis(200)


@pytest.fixture(scope="session")
def basis400():
    return build_basis(400)


@pytest.fixture(scope="session")
def basis50():
    return build_basis(50)
