"""Seeded random generators for elements; used by the verification harness
and the test corpus."""

from __future__ import annotations

import random

from .algebra import Element, LeavittAlgebra, Monomial
from .graph import Path


def random_path(g, rng: random.Random, max_len: int,
                start: str | None = None) -> Path:
    v = start if start is not None else rng.choice(g.vertices)
    edges = []
    for _ in range(rng.randint(0, max_len)):
        out = g.out_edges(v)
        if not out:
            break
        e = rng.choice(out)
        edges.append(e.name)
        v = e.range
    return Path(start if start is not None else
                (g.edge(edges[0]).source if edges else v), tuple(edges))


def random_monomial(g, rng: random.Random, max_len: int) -> Monomial:
    alpha = random_path(g, rng, max_len)
    end = g.edge(alpha.edges[-1]).range if alpha.edges else alpha.base
    # walk backwards so beta ends where alpha ends
    beta_rev = []
    u = end
    for _ in range(rng.randint(0, max_len)):
        inc = g.in_edges(u)
        if not inc:
            break
        e = rng.choice(inc)
        beta_rev.append(e.name)
        u = e.source
    return Monomial(alpha.edges, tuple(reversed(beta_rev)), end)


def random_element(alg: LeavittAlgebra, rng: random.Random,
                   max_terms: int = 4, max_path_len: int = 3) -> Element:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        m = random_monomial(alg.graph, rng, max_path_len)
        terms.append((m, alg.field.sample(rng)))
    return alg.element(terms)


def random_nonzero_element(alg: LeavittAlgebra, rng: random.Random,
                           max_terms: int = 4, max_path_len: int = 3) -> Element:
    for _ in range(200):
        a = random_element(alg, rng, max_terms, max_path_len)
        if not a.is_zero:
            return a
    # a vertex is always nonzero
    return alg.vertex(rng.choice(alg.graph.vertices))
