import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from regma.catalog import catalog


@pytest.fixture(scope="session")
def k4():
    return catalog("k4")


@pytest.fixture(scope="session")
def k33():
    return catalog("k33")


@pytest.fixture(scope="session")
def petersen():
    return catalog("petersen")


@pytest.fixture(scope="session")
def heawood():
    return catalog("heawood")


@pytest.fixture
def rng():
    return random.Random(20240817)


def random_connected_multigraph(rng, max_edges=18, max_betti=12):
    """Random connected multigraph (loops and parallels allowed) containing
    at least one cycle."""
    while True:
        n = rng.randint(2, 9)
        extra = rng.randint(1, max(1, max_edges - (n - 1)))
        m = n - 1 + extra
        if m > max_edges or m - n + 1 > max_betti:
            continue
        edges = []
        for v in range(1, n):
            edges.append((rng.randrange(v), v))
        for _ in range(extra):
            u = rng.randrange(n)
            v = rng.randrange(n)
            edges.append((min(u, v), max(u, v)))
        from regma.graph import MultiGraph, girth

        g = MultiGraph(n, tuple(edges))
        if girth(g) != float("inf"):
            return g
