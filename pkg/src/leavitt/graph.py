"""Finite presentations of directed graphs with path and cycle machinery.

A graph is given by named vertices, named edges, and an optional table of
infinite multiplicities: an entry ``u -> {t, ...}`` means "countably many
additional unnamed parallel edges from u to each listed target".  A vertex
with a nonempty infinite table is an infinite emitter and is never regular.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    DanglingEndpointError,
    DuplicateIdError,
    EmptyVertexSetError,
    ExprSyntaxError,
    UnknownVertexError,
)


@dataclass(frozen=True)
class Edge:
    name: str
    source: str
    range: str


@dataclass(frozen=True)
class Graph:
    """Canonicalized graph presentation: sorted vertices, edges and table."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    infinite: tuple[tuple[str, tuple[str, ...]], ...]

    @staticmethod
    def make(vertices: Iterable[str],
             edges: Iterable[Edge | tuple[str, str, str]] = (),
             infinite: Mapping[str, Iterable[str]] | None = None) -> "Graph":
        """Build a graph, canonicalizing order; does not validate (see
        :func:`validate_graph`).  Empty infinite entries are dropped."""
        edge_objs = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        inf = infinite or {}
        table = tuple(sorted(
            (v, tuple(sorted(set(ts)))) for v, ts in inf.items() if ts))
        return Graph(vertices=tuple(sorted(set(vertices))),
                     edges=tuple(sorted(edge_objs, key=lambda e: e.name)),
                     infinite=table)

    # -- lookups ------------------------------------------------------------

    @cached_property
    def _edge_by_name(self) -> dict[str, Edge]:
        return {e.name: e for e in self.edges}

    @cached_property
    def _out(self) -> dict[str, tuple[Edge, ...]]:
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out.setdefault(e.source, []).append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[Edge, ...]]:
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc.setdefault(e.range, []).append(e)
        return {v: tuple(es) for v, es in inc.items()}

    @cached_property
    def _infinite_map(self) -> dict[str, frozenset[str]]:
        return {v: frozenset(ts) for v, ts in self.infinite}

    def edge(self, name: str) -> Edge:
        return self._edge_by_name[name]

    def has_vertex(self, v: str) -> bool:
        return v in self._out

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        return self._out.get(v, ())

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        return self._in.get(v, ())

    def infinite_targets(self, v: str) -> frozenset[str]:
        return self._infinite_map.get(v, frozenset())

    def is_infinite_emitter(self, v: str) -> bool:
        return bool(self.infinite_targets(v))

    def is_regular(self, v: str) -> bool:
        return not self.is_infinite_emitter(v) and bool(self.out_edges(v))

    def successors(self, v: str) -> set[str]:
        """Ranges of all edges out of v, explicit and infinite."""
        return {e.range for e in self.out_edges(v)} | set(self.infinite_targets(v))


# -- paths and cycles ----------------------------------------------------------

@dataclass(frozen=True)
class Path:
    """Edge sequence with an explicit base vertex for the trivial case.

    Invariant: for a nonempty path the base equals the source of the first
    edge, so equality and hashing are structural.
    """

    base: str
    edges: tuple[str, ...] = ()

    def __len__(self):
        return len(self.edges)

    @property
    def is_trivial(self) -> bool:
        return not self.edges

    def key(self):
        return (self.edges, self.base)


@dataclass(frozen=True)
class Cycle:
    path: Path


def make_path(g: Graph, edges: Iterable[str], base: str | None = None) -> Path:
    """Validated path constructor; for an empty edge list a base is required."""
    names = tuple(edges)
    if not names:
        if base is None:
            raise ValueError("trivial path needs a base vertex")
        if not g.has_vertex(base):
            raise UnknownVertexError("unknown vertex %r" % base)
        return Path(base, ())
    prev = None
    for name in names:
        e = g._edge_by_name.get(name)
        if e is None:
            raise UnknownVertexError("unknown edge %r in path" % name)
        if prev is not None and prev.range != e.source:
            raise ValueError("edges %r and %r do not compose" % (prev.name, name))
        prev = e
    src = g.edge(names[0]).source
    if base is not None and base != src:
        raise ValueError("path base %r does not match first edge source %r" % (base, src))
    return Path(src, names)


def path_source(g: Graph, p: Path) -> str:
    return p.base


def path_range(g: Graph, p: Path) -> str:
    return g.edge(p.edges[-1]).range if p.edges else p.base


def concat_paths(g: Graph, p: Path, q: Path) -> Path:
    if path_range(g, p) != path_source(g, q):
        raise ValueError("paths do not compose")
    return Path(p.base, p.edges + q.edges)


def path_to_dict(p: Path) -> dict:
    return {"base": p.base, "edges": list(p.edges)}


def is_cycle(g: Graph, p: Path) -> bool:
    """Closed, nonempty, and no vertex is visited twice."""
    if p.is_trivial or path_range(g, p) != p.base:
        return False
    sources = [g.edge(e).source for e in p.edges]
    return len(set(sources)) == len(sources)


# -- validation ------------------------------------------------------------------

def validate_graph(g: Graph) -> None:
    """Check all presentation invariants; raises on the first violation."""
    if not g.vertices:
        raise EmptyVertexSetError("graph has no vertices")
    vset = set(g.vertices)
    if len(vset) != len(g.vertices):
        raise DuplicateIdError("duplicate vertex identifier")
    seen = set()
    for e in g.edges:
        if e.name in seen:
            raise DuplicateIdError("duplicate edge identifier %r" % e.name)
        seen.add(e.name)
        if e.name in vset:
            raise DuplicateIdError("identifier %r used for both a vertex and an edge" % e.name)
        if e.source not in vset:
            raise DanglingEndpointError("edge %r has unknown source %r" % (e.name, e.source))
        if e.range not in vset:
            raise DanglingEndpointError("edge %r has unknown range %r" % (e.name, e.range))
    for v, targets in g.infinite:
        if v not in vset:
            raise DanglingEndpointError("infinite emitter %r is not a vertex" % v)
        for t in targets:
            if t not in vset:
                raise DanglingEndpointError("infinite target %r of %r is not a vertex" % (t, v))


def regular_vertices(g: Graph) -> set[str]:
    """Vertices with at least one explicit out-edge and no infinite targets."""
    return {v for v in g.vertices if g.is_regular(v)}


def find_exitless_cycle(g: Graph) -> Cycle | None:
    """Deterministically find a cycle all of whose vertices emit exactly one
    edge, or None.

    A cycle has no exit iff every vertex on it has out-degree exactly one, so
    it suffices to follow the out-degree-1 sub-functional-graph.  The returned
    cycle is based at the lexicographically least vertex lying on such a
    cycle.
    """
    step: dict[str, Edge] = {}
    for v in g.vertices:
        out = g.out_edges(v)
        if len(out) == 1 and not g.is_infinite_emitter(v):
            step[v] = out[0]
    for start in g.vertices:
        if start not in step:
            continue
        u, walk = start, []
        for _ in range(len(g.vertices) + 1):
            e = step.get(u)
            if e is None:
                break
            walk.append(e.name)
            u = e.range
            if u == start:
                return Cycle(Path(start, tuple(walk)))
            if any(g.edge(w).source == u for w in walk):
                break  # entered a cycle not through start
    return None


# -- JSON interchange ---------------------------------------------------------

def graph_to_dict(g: Graph) -> dict:
    d = {
        "vertices": list(g.vertices),
        "edges": [{"name": e.name, "source": e.source, "range": e.range}
                  for e in g.edges],
    }
    if g.infinite:
        d["infinite"] = [{"vertex": v, "targets": list(ts)} for v, ts in g.infinite]
    return d


def graph_from_dict(data: dict) -> Graph:
    if not isinstance(data, dict):
        raise ExprSyntaxError("graph document must be a JSON object")
    try:
        vertices = data["vertices"]
        raw_edges = data.get("edges", [])
        raw_inf = data.get("infinite", [])
        edges = [Edge(e["name"], e["source"], e["range"]) for e in raw_edges]
        infinite = {entry["vertex"]: entry["targets"] for entry in raw_inf}
    except (KeyError, TypeError) as exc:
        raise ExprSyntaxError("malformed graph document: %s" % exc)
    g = Graph.make(vertices, edges, infinite)
    validate_graph(g)
    return g


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), sort_keys=True)


def graph_from_json(text: str) -> Graph:
    """Parse and validate the graph JSON format."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ExprSyntaxError("invalid JSON: %s" % exc.msg,
                              line=exc.lineno, column=exc.colno)
    return graph_from_dict(data)


# graph_from_json is the file-level parser; kept under the spec-facing name too.
parse_graph = graph_from_json
