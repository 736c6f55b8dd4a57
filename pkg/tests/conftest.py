import pytest

from leavitt import Graph


@pytest.fixture
def toeplitz():
    """Loop c at v with exit e to the sink w."""
    return Graph.make(["v", "w"], [("c", "v", "v"), ("e", "v", "w")])


@pytest.fixture
def single_loop():
    return Graph.make(["v"], [("c", "v", "v")])


@pytest.fixture
def rose2():
    """Two loops g, h at one vertex."""
    return Graph.make(["v"], [("g", "v", "v"), ("h", "v", "v")])


@pytest.fixture
def line2():
    return Graph.make(["v", "w"], [("e", "v", "w")])


@pytest.fixture
def fan():
    """v emits e and f, both to w."""
    return Graph.make(["v", "w"], [("e", "v", "w"), ("f", "v", "w")])


@pytest.fixture
def breaking_example():
    """Infinite emitter u with targets {w} plus an explicit edge d to v."""
    return Graph.make(["u", "v", "w"], [("d", "u", "v")], {"u": {"w"}})
