import pytest

from helpers import fixture


@pytest.fixture(scope="session")
def fig1a():
    return fixture("fig1a")


@pytest.fixture(scope="session")
def fig1b():
    return fixture("fig1b")


@pytest.fixture(scope="session")
def fig2b():
    return fixture("fig2b")


@pytest.fixture(scope="session")
def fig3():
    return fixture("fig3")


@pytest.fixture(scope="session")
def fig5a():
    return fixture("fig5a")
