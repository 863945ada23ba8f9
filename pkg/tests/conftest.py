import pytest

from grundylab.generate import connected_graphs, enumerate_regular_graphs

CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}
QUARTIC_COUNTS = {5: 1, 6: 1, 7: 2, 8: 6, 9: 16, 10: 59, 11: 265}


@pytest.fixture(scope="session")
def cubic_corpus():
    """Connected cubic graphs by order, n <= 12."""
    return {n: enumerate_regular_graphs(3, n, connected_only=True) for n in range(4, 13, 2)}


@pytest.fixture(scope="session")
def quartic_corpus():
    """Connected 4-regular graphs by order, n <= 11."""
    return {n: enumerate_regular_graphs(4, n, connected_only=True) for n in range(5, 12)}


@pytest.fixture(scope="session")
def connected_upto7():
    return {n: connected_graphs(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def connected_upto8(connected_upto7):
    out = dict(connected_upto7)
    out[8] = connected_graphs(8)
    return out
