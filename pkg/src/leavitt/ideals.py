"""Hereditary saturated sets, breaking vertices, and quotient graphs.

Graded quotients of the algebra are manipulated exclusively through their
graph-level avatars: the quotient graph of an admissible pair (H, S) presents
the quotient algebra exactly, so the lattice machinery here never touches
element sets.

A subset H of the vertices is hereditary when it is closed under edge
reachability (explicit and infinite-multiplicity alike) and saturated when a
regular vertex all of whose edge ranges lie in H is itself in H.  A breaking
vertex of H is an infinite emitter outside H whose fan into the complement of
H is finite and nonempty, i.e. all its infinite targets lie in H and it keeps
at least one explicit edge out of H.

One convention the quotient construction needs that the definitions leave
open: a vertex of S keeps only its finite fan out of H (its infinite
multiplicities, which all point into H, are dropped), so it becomes a regular
vertex of the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .algebra import Element, LeavittAlgebra
from .conditions import ConditionReport, check_condition_L
from .errors import (
    GraphTooLargeError,
    InvalidAdmissiblePairError,
    InvalidSubsetError,
    NotABreakingVertexError,
    UnknownVertexError,
)
from .graph import Edge, Graph, Path


def is_hereditary(g: Graph, h: frozenset[str]) -> bool:
    return all(g.successors(v) <= h for v in h)


def is_saturated(g: Graph, h: frozenset[str]) -> bool:
    return all(
        v in h
        for v in g.vertices
        if g.is_regular(v) and {e.range for e in g.out_edges(v)} <= h)


def is_hereditary_saturated(g: Graph, h: Iterable[str]) -> bool:
    hs = frozenset(h)
    return is_hereditary(g, hs) and is_saturated(g, hs)


def hereditary_saturated_closure(g: Graph, seed: Iterable[str]) -> frozenset[str]:
    """Least hereditary saturated superset of the seed: alternate reachability
    descent and saturation ascent to the fixpoint."""
    h = set(seed)
    for v in h:
        if not g.has_vertex(v):
            raise UnknownVertexError("unknown vertex %r" % v)
    changed = True
    while changed:
        changed = False
        frontier = list(h)
        while frontier:
            v = frontier.pop()
            for w in g.successors(v):
                if w not in h:
                    h.add(w)
                    frontier.append(w)
        for v in g.vertices:
            if v not in h and g.is_regular(v) \
                    and {e.range for e in g.out_edges(v)} <= h:
                h.add(v)
                changed = True
    return frozenset(h)


def enumerate_hereditary_saturated(g: Graph, cap: int = 15) -> list[frozenset[str]]:
    """All hereditary saturated subsets, sorted by (size, members)."""
    if len(g.vertices) > cap:
        raise GraphTooLargeError(
            "%d vertices exceed the enumeration cap %d" % (len(g.vertices), cap))
    found = set()
    verts = list(g.vertices)
    for r in range(len(verts) + 1):
        for seed in combinations(verts, r):
            found.add(hereditary_saturated_closure(g, seed))
    return sorted(found, key=lambda h: (len(h), tuple(sorted(h))))


def breaking_vertices(g: Graph, h: Iterable[str]) -> frozenset[str]:
    """Infinite emitters outside H whose fan out of H is finite and nonempty."""
    hs = frozenset(h)
    if not is_hereditary_saturated(g, hs):
        raise InvalidSubsetError("subset is not hereditary saturated")
    out = set()
    for v in g.vertices:
        if v in hs or not g.is_infinite_emitter(v):
            continue
        if g.infinite_targets(v) <= hs \
                and any(e.range not in hs for e in g.out_edges(v)):
            out.add(v)
    return frozenset(out)


def breaking_vertex_element(alg: LeavittAlgebra, h: Iterable[str], v: str) -> Element:
    """The element v - sum of e e* over the finite fan of v out of H."""
    hs = frozenset(h)
    if v not in breaking_vertices(alg.graph, hs):
        raise NotABreakingVertexError("%r is not a breaking vertex of the subset" % v)
    acc = alg.vertex(v)
    for e in alg.graph.out_edges(v):
        if e.range not in hs:
            acc = acc - alg.edge(e.name) * alg.ghost(e.name)
    return acc


@dataclass(frozen=True)
class AdmissiblePair:
    h: frozenset[str]
    s: frozenset[str]

    def to_dict(self) -> dict:
        return {"h": sorted(self.h), "s": sorted(self.s)}


@dataclass(frozen=True)
class QuotientGraph:
    """The quotient graph together with provenance for primed copies."""

    graph: Graph
    primed_vertices: tuple[tuple[str, str], ...]  # (new name, original)
    primed_edges: tuple[tuple[str, str], ...]

    def to_dict(self) -> dict:
        from .graph import graph_to_dict
        d = graph_to_dict(self.graph)
        d["provenance"] = {
            "vertices": {new: old for new, old in self.primed_vertices},
            "edges": {new: old for new, old in self.primed_edges},
        }
        return d


def _fresh_primed(base: str, taken: set[str]) -> str:
    name = base + "'"
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def quotient_graph(g: Graph, h: Iterable[str], s: Iterable[str] = ()) -> QuotientGraph:
    """Build the quotient graph of an admissible pair (H, S).

    Vertices: the complement of H, plus a primed sink v' for every breaking
    vertex v outside S.  Edges: every explicit edge whose range avoids H,
    plus a primed copy e' (source s(e), range r(e)') for every edge whose
    range is a breaking vertex outside S.  Infinite multiplicities into H are
    dropped; those into surviving vertices are kept, with primed copies when
    the target is a breaking vertex outside S.
    """
    hs, ss = frozenset(h), frozenset(s)
    if not is_hereditary_saturated(g, hs):
        raise InvalidAdmissiblePairError("H is not hereditary saturated")
    b = breaking_vertices(g, hs)
    if not ss <= b:
        raise InvalidAdmissiblePairError("S is not a subset of the breaking vertices")

    keep = [v for v in g.vertices if v not in hs]
    taken = set(g.vertices) | {e.name for e in g.edges}
    primed_v = {v: _fresh_primed(v, taken) for v in sorted(b - ss)}

    edges: list[Edge] = []
    primed_e: list[tuple[str, str]] = []
    for e in g.edges:
        if e.range not in hs:
            edges.append(e)
        if e.range in primed_v:
            name = _fresh_primed(e.name, taken)
            edges.append(Edge(name, e.source, primed_v[e.range]))
            primed_e.append((name, e.name))

    infinite: dict[str, set[str]] = {}
    for v, targets in g.infinite:
        if v in hs:
            continue
        kept = {t for t in targets if t not in hs}
        kept |= {primed_v[t] for t in targets if t in primed_v}
        if kept:
            infinite[v] = kept

    quotient = Graph.make(
        keep + list(primed_v.values()), edges, infinite)
    return QuotientGraph(
        quotient,
        tuple(sorted((new, old) for old, new in primed_v.items())),
        tuple(sorted(primed_e)))


def admissible_pairs(g: Graph, cap: int = 15) -> list[AdmissiblePair]:
    pairs = []
    for h in enumerate_hereditary_saturated(g, cap=cap):
        b = sorted(breaking_vertices(g, h))
        for r in range(len(b) + 1):
            for s in combinations(b, r):
                pairs.append(AdmissiblePair(h, frozenset(s)))
    return pairs


def quotient_survey(g: Graph, cap: int = 15) -> list[tuple[AdmissiblePair, ConditionReport]]:
    """Every admissible pair with the Condition (L) report of its quotient."""
    return [(pair, check_condition_L(quotient_graph(g, pair.h, pair.s).graph))
            for pair in admissible_pairs(g, cap=cap)]
