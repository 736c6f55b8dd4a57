"""Seeded random graph corpus shared across the test modules."""

from __future__ import annotations

import random

from leavitt import Graph, check_condition_L, validate_graph

VERTEX_NAMES = "abcdef"
EDGE_NAMES = "ghijklmnop"


def random_graph(rng: random.Random, max_v: int = 6, max_e: int = 10,
                 p_infinite: float = 0.2) -> Graph:
    n = rng.randint(1, max_v)
    verts = list(VERTEX_NAMES[:n])
    m = rng.randint(0, max_e)
    edges = [(EDGE_NAMES[i], rng.choice(verts), rng.choice(verts))
             for i in range(m)]
    infinite = {}
    if rng.random() < p_infinite:
        u = rng.choice(verts)
        infinite[u] = set(rng.sample(verts, rng.randint(1, min(2, n))))
    g = Graph.make(verts, edges, infinite)
    validate_graph(g)
    return g


def random_condition_L_graph(rng: random.Random, **kwargs) -> Graph:
    while True:
        g = random_graph(rng, **kwargs)
        if check_condition_L(g).holds:
            return g


def line_graph(n: int) -> Graph:
    """Path graph on n vertices v1 -> v2 -> ... -> vn."""
    verts = ["v%d" % i for i in range(1, n + 1)]
    edges = [("e%d" % i, "v%d" % i, "v%d" % (i + 1)) for i in range(1, n)]
    return Graph.make(verts, edges)
