"""Condition (L) and Condition (K) with re-verifiable witnesses.

Condition (L): every simple closed path has an exit.  A simple closed path
with no exit forces out-degree one at every vertex it visits and is therefore
a cycle, so (L) is decided via exitless cycles.

Condition (K): no vertex is the base of precisely one simple closed path.
The count of simple closed paths based at v is classified exactly (0, 1, or
2-or-more, where "2 or more" includes infinitely many) by a split-vertex
construction: duplicate v into an out-copy and an in-copy, restrict to
vertices that both are reachable from the out-copy and co-reach the in-copy,
and inspect that restriction.  A cycle or an infinite-multiplicity edge in
the restriction means infinitely many; otherwise the restriction is acyclic
and paths can be counted directly.

A second, independent route to Condition (K) checks Condition (L) on the
quotient graph of every admissible pair; the two methods are cross-validated
in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownVertexError
from .graph import (
    Cycle,
    Graph,
    Path,
    find_exitless_cycle,
    path_to_dict,
)


@dataclass(frozen=True)
class ConditionReport:
    condition: str  # "L" or "K"
    holds: bool
    witness: object | None
    method: str

    def to_dict(self) -> dict:
        w = None
        if self.witness is not None:
            if isinstance(self.witness, Cycle):
                w = {"cycle": path_to_dict(self.witness.path)}
            elif isinstance(self.witness, tuple) and len(self.witness) == 2 \
                    and isinstance(self.witness[0], str):
                v, p = self.witness
                w = {"vertex": v, "path": path_to_dict(p)}
            else:
                (h, s), cyc = self.witness
                w = {"pair": {"h": sorted(h), "s": sorted(s)},
                     "cycle": path_to_dict(cyc.path)}
        return {"condition": self.condition, "holds": self.holds,
                "witness": w, "method": self.method}


@dataclass(frozen=True)
class SimpleClosedPathCount:
    """Classification of the simple closed paths based at one vertex.

    kind is "zero", "one" or "two_or_more".  The witness paths are the single
    path for "one", and two distinct paths for "two_or_more" when the
    multiplicity is witnessed by explicit edges; when it comes from an
    infinite-multiplicity entry the paths are unnameable and omitted.
    """

    kind: str
    paths: tuple[Path, ...] = ()


_OUT, _IN = 0, 1  # split-vertex tags


def _split_graph(g: Graph, v: str):
    """Edges of the graph with v split into (v, OUT) and (v, IN); nodes are
    (vertex, tag) pairs, other vertices tagged OUT for uniformity."""
    def node(u, incoming):
        if u == v:
            return (v, _IN) if incoming else (v, _OUT)
        return (u, _OUT)

    explicit = [(node(e.source, False), node(e.range, True), e.name)
                for e in g.edges]
    infinite = [(node(u, False), node(t, True))
                for u, targets in g.infinite for t in targets]
    return explicit, infinite


def _reach(nodes_from, edges) -> set:
    seen = set(nodes_from)
    frontier = list(nodes_from)
    while frontier:
        u = frontier.pop()
        for (a, b) in edges:
            if a == u and b not in seen:
                seen.add(b)
                frontier.append(b)
    return seen


def count_simple_closed_paths(g: Graph, v: str) -> SimpleClosedPathCount:
    if not g.has_vertex(v):
        raise UnknownVertexError("unknown vertex %r" % v)
    explicit, infinite = _split_graph(g, v)
    arcs = [(a, b) for (a, b, _name) in explicit] + infinite
    src, dst = (v, _OUT), (v, _IN)
    fwd = _reach([src], arcs)
    back = _reach([dst], [(b, a) for (a, b) in arcs])
    live = fwd & back
    if dst not in live:
        return SimpleClosedPathCount("zero")

    # Any surviving infinite-multiplicity arc yields infinitely many paths.
    for (a, b) in infinite:
        if a in live and b in live:
            return SimpleClosedPathCount("two_or_more")

    surviving = [(a, b, name) for (a, b, name) in explicit
                 if a in live and b in live]

    cyc_arc = _find_cycle_arc(surviving)
    if cyc_arc is not None:
        return SimpleClosedPathCount(
            "two_or_more", _two_paths_via_cycle(g, v, surviving, cyc_arc))

    # Acyclic now: enumerate src -> dst paths, stopping at the second one.
    found: list[tuple[str, ...]] = []

    def extend(node, edges_so_far):
        if node == dst:
            found.append(tuple(edges_so_far))
            return
        for (a, b, name) in sorted(surviving, key=lambda t: t[2]):
            if a == node and len(found) < 2:
                extend(b, edges_so_far + [name])

    extend(src, [])
    if not found:
        return SimpleClosedPathCount("zero")
    paths = tuple(Path(v, edges) for edges in found[:2])
    if len(found) == 1:
        return SimpleClosedPathCount("one", paths)
    return SimpleClosedPathCount("two_or_more", paths)


def _find_cycle_arc(arcs):
    """Some arc that lies on a directed cycle of the arc set, else None."""
    nodes = {a for a, _, _ in arcs} | {b for _, b, _ in arcs}
    for start in sorted(nodes):
        reachable = _reach([b for (a, b, _n) in arcs if a == start],
                           [(a, b) for (a, b, _n) in arcs])
        if start in reachable:
            for (a, b, name) in sorted(arcs, key=lambda t: t[2]):
                if a == start:
                    back = _reach([b], [(x, y) for (x, y, _n) in arcs])
                    if start in back:
                        return (a, b, name)
    return None


def _shortest(arcs, src, dst) -> list[str] | None:
    from collections import deque
    prev = {src: None}
    q = deque([src])
    while q:
        u = q.popleft()
        if u == dst:
            break
        for (a, b, name) in sorted(arcs, key=lambda t: t[2]):
            if a == u and b not in prev:
                prev[b] = (u, name)
                q.append(b)
    if dst not in prev:
        return None
    names = []
    node = dst
    while prev[node] is not None:
        node, name = prev[node]
        names.append(name)
    return names[::-1]


def _two_paths_via_cycle(g: Graph, v: str, arcs, cyc_arc) -> tuple[Path, Path]:
    """Two distinct simple closed paths based at v when the restriction has a
    cycle: a shortest path, and one detouring once around the cycle."""
    src, dst = (v, _OUT), (v, _IN)
    direct = _shortest(arcs, src, dst)
    a, b, name = cyc_arc
    around = _shortest(arcs, b, a)
    to_cycle = _shortest(arcs, src, a)
    from_cycle = _shortest(arcs, a, dst)
    looped = to_cycle + [name] + around + from_cycle
    return (Path(v, tuple(direct)), Path(v, tuple(looped)))


# -- the two condition checkers ------------------------------------------------

def check_condition_L(g: Graph) -> ConditionReport:
    cyc = find_exitless_cycle(g)
    return ConditionReport("L", cyc is None, cyc, "direct")


def check_condition_K_direct(g: Graph) -> ConditionReport:
    for v in g.vertices:
        count = count_simple_closed_paths(g, v)
        if count.kind == "one":
            return ConditionReport("K", False, (v, count.paths[0]), "direct")
    return ConditionReport("K", True, None, "direct")


def check_condition_K_via_quotients(g: Graph, cap: int = 15) -> ConditionReport:
    """Condition (K) holds iff the quotient graph of every admissible pair
    satisfies Condition (L); guarded by the lattice enumeration cap."""
    from .ideals import quotient_survey
    for pair, report in quotient_survey(g, cap=cap):
        if not report.holds:
            witness = ((pair.h, pair.s), report.witness)
            return ConditionReport("K", False, witness, "quotients")
    return ConditionReport("K", True, None, "quotients")
