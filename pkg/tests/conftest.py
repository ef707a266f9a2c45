import pytest

from bhcut import solver, topology


@pytest.fixture(scope="session")
def bh1():
    return topology.build_direct(1)


@pytest.fixture(scope="session")
def bh2():
    return topology.build_direct(2)


@pytest.fixture(scope="session")
def bh3():
    return topology.build_direct(3)


@pytest.fixture(scope="session")
def bh4():
    return topology.build_direct(4)


@pytest.fixture(scope="session")
def bh5():
    return topology.build_direct(5)


@pytest.fixture(scope="session")
def q2(bh2):
    return solver.build_quotient(bh2)


@pytest.fixture(scope="session")
def q3(bh3):
    return solver.build_quotient(bh3)
