"""Immutable simple undirected graphs and mutation-by-copy operations.

Vertices are non-negative integers with stable ids: deletion preserves ids,
contraction keeps the lower id of each merged pair. All operations are pure
functions returning fresh Graph values, so graphs are safe to share across
workers.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, Mapping, Tuple

import networkx as nx

from .errors import DuplicateEdgeError, GraphFormatError, MissingEdgeError

Edge = Tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """Canonical (low, high) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph: no loops, no parallel edges.

    Immutable after construction; equality and hashing are by vertex set
    and edge set.
    """

    __slots__ = ("_adj", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        adj: Dict[int, set] = {int(v): set() for v in vertices}
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if u < 0 or v < 0:
                raise GraphFormatError(f"negative vertex id in edge ({u}, {v})")
            adj.setdefault(u, set())
            adj.setdefault(v, set())
            adj[u].add(v)
            adj[v].add(u)
        self._adj: Dict[int, Tuple[int, ...]] = {
            v: tuple(sorted(nbrs)) for v, nbrs in sorted(adj.items())
        }
        self._hash = None

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(self._adj.keys())

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> Tuple[Edge, ...]:
        return tuple(
            (u, v) for u in self._adj for v in self._adj[u] if u < v
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, self.edges()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- conversions -------------------------------------------------------

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        return cls(g.nodes(), ((u, v) for u, v in g.edges()))

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Iterable[int] = ()) -> "Graph":
        return cls(vertices, edges)


def min_degree(g: Graph) -> int:
    """Minimum vertex degree; errors on the empty graph."""
    if g.n == 0:
        raise GraphFormatError("min_degree of empty graph")
    return min(g.degree(v) for v in g.vertices)


def delete_edge(g: Graph, e: Edge) -> Graph:
    """Copy of g without edge e; the vertex set is unchanged."""
    u, v = e
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"({u}, {v}) is not an edge")
    return Graph(g.vertices, (f for f in g.edges() if f != norm_edge(u, v)))


def delete_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    drop = {norm_edge(u, v) for u, v in edges}
    for e in drop:
        if not g.has_edge(*e):
            raise MissingEdgeError(f"{e} is not an edge")
    return Graph(g.vertices, (f for f in g.edges() if f not in drop))


def contract_edges(g: Graph, contract: Iterable[Edge]) -> Tuple[Graph, Dict[int, int]]:
    """Contract every edge in ``contract``; simplify the result.

    Parallel edges created by a merge are collapsed to one and loops are
    dropped, so the result is again simple. Returns the contracted graph
    and the vertex mapping old id -> merged id; each merge keeps the lower
    id of the pair, and merges chain through unions of contracted edges.
    """
    contract = [norm_edge(u, v) for u, v in contract]
    for e in contract:
        if not g.has_edge(*e):
            raise MissingEdgeError(f"{e} is not an edge")
    parent = {v: v for v in g.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in contract:
        ru, rv = find(u), find(v)
        if ru != rv:
            lo, hi = (ru, rv) if ru < rv else (rv, ru)
            parent[hi] = lo
    mapping = {v: find(v) for v in g.vertices}
    edges = {
        norm_edge(mapping[u], mapping[v])
        for u, v in g.edges()
        if mapping[u] != mapping[v]
    }
    return Graph(set(mapping.values()), edges), mapping


# -- text formats ----------------------------------------------------------

_FORMATS = ("graph6", "edgelist")


def parse_graph(text: bytes, fmt: str) -> Graph:
    """Parse graph6 or whitespace edge-list bytes into a Graph.

    Edge lists are 0-indexed, one edge per line, '#' starts a comment;
    a repeated edge is an error, not a dedupe.
    """
    if isinstance(text, str):
        text = text.encode("ascii")
    if fmt == "graph6":
        data = text.strip()
        if data.startswith(b">>graph6<<"):
            data = data[len(b">>graph6<<"):]
        try:
            return Graph.from_networkx(nx.from_graph6_bytes(data))
        except (nx.NetworkXError, ValueError) as exc:
            raise GraphFormatError(f"bad graph6 input: {exc}") from exc
    if fmt == "edgelist":
        edges = []
        seen = set()
        max_v = -1
        for lineno, raw in enumerate(text.decode("ascii").splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected two vertex ids")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: non-integer vertex id") from exc
            if u < 0 or v < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex id")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at {u}")
            e = norm_edge(u, v)
            if e in seen:
                raise DuplicateEdgeError(f"line {lineno}: duplicate edge {e}")
            seen.add(e)
            edges.append(e)
            max_v = max(max_v, u, v)
        return Graph(range(max_v + 1), edges)
    raise GraphFormatError(f"unknown format {fmt!r}; expected one of {_FORMATS}")


def serialize_graph(g: Graph, fmt: str) -> bytes:
    """Inverse of parse_graph. graph6 requires contiguous ids 0..n-1."""
    if fmt == "graph6":
        if g.vertices != tuple(range(g.n)):
            raise GraphFormatError("graph6 output needs vertex ids 0..n-1")
        return nx.to_graph6_bytes(g.to_networkx(), header=False).strip() + b"\n"
    if fmt == "edgelist":
        lines = [f"{u} {v}" for u, v in sorted(g.edges())]
        return ("\n".join(lines) + "\n").encode("ascii") if lines else b""
    raise GraphFormatError(f"unknown format {fmt!r}; expected one of {_FORMATS}")
