"""Planarity, combinatorial embeddings, faces, duals, and triangulation.

An embedding is stored as a rotation system: a cyclic order of neighbors
around each vertex. Faces are derived by the standard next-edge walk and
validated against Euler's formula and the exact face-sum identities
(sum of face weights = |V|, sum of face lengths = 2|E|) at construction,
so an invalid embedding can never escape this module.

Face weights are exact rationals: a vertex contributes 1/deg once per
appearance on the boundary walk.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from .errors import GraphFormatError, NonPlanarError
from .graph import Edge, Graph, norm_edge


@dataclass(frozen=True)
class FaceRecord:
    """One face of an embedding.

    ``boundary`` lists the tail vertex of each directed edge on the walk,
    so ``length == len(boundary)`` counts edge-sides (a bridge contributes
    twice to its face).
    """

    boundary: Tuple[int, ...]
    length: int
    weight: Fraction

    def is_simple_cycle(self) -> bool:
        return self.length >= 3 and len(set(self.boundary)) == self.length


class RotationEmbedding:
    """A combinatorial planar embedding with derived, validated face list."""

    __slots__ = ("graph", "rotation", "faces", "_face_of")

    def __init__(self, graph: Graph, rotation: Dict[int, Tuple[int, ...]]):
        self.graph = graph
        self.rotation = {v: tuple(rotation[v]) for v in graph.vertices}
        self.faces, self._face_of = self._trace_faces()
        self._validate()

    def _trace_faces(self):
        rot = self.rotation
        pos = {
            (v, w): i for v, nbrs in rot.items() for i, w in enumerate(nbrs)
        }
        seen = set()
        faces: List[FaceRecord] = []
        face_of: Dict[Tuple[int, int], int] = {}
        degs = {v: self.graph.degree(v) for v in self.graph.vertices}
        for start in sorted(pos):
            if start in seen:
                continue
            walk = []
            u, v = start
            while (u, v) not in seen:
                seen.add((u, v))
                face_of[(u, v)] = len(faces)
                walk.append(u)
                nbrs = rot[v]
                u, v = v, nbrs[(pos[(v, u)] + 1) % len(nbrs)]
            weight = sum((Fraction(1, degs[x]) for x in walk), Fraction(0))
            faces.append(FaceRecord(tuple(walk), len(walk), weight))
        return tuple(faces), face_of

    def _validate(self):
        g = self.graph
        if g.n - g.m + len(self.faces) != 2:
            raise NonPlanarError(
                f"rotation system is not planar: V-E+F = "
                f"{g.n}-{g.m}+{len(self.faces)} != 2"
            )
        if sum(f.weight for f in self.faces) != g.n:
            raise NonPlanarError("face weights do not sum to |V|")
        if sum(f.length for f in self.faces) != 2 * g.m:
            raise NonPlanarError("face lengths do not sum to 2|E|")

    def face_of(self, u: int, v: int) -> int:
        """Face id to the left of the directed edge (u, v)."""
        return self._face_of[(u, v)]

    def faces_incident_to(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted({self.face_of(v, w) for w in self.graph.neighbors(v)}))


def is_planar(g: Graph) -> bool:
    if g.n == 0:
        return True
    return nx.check_planarity(g.to_networkx(), counterexample=False)[0]


def kuratowski_witness(g: Graph) -> FrozenSet[Edge]:
    """Edges of a K5/K3,3 subdivision of g; errors if g is planar."""
    ok, cex = nx.check_planarity(g.to_networkx(), counterexample=True)
    if ok:
        raise GraphFormatError("graph is planar; no Kuratowski witness exists")
    return frozenset(norm_edge(u, v) for u, v in cex.edges())


def embed(g: Graph) -> RotationEmbedding:
    """Rotation embedding of a connected planar graph with >= 2 vertices.

    Raises NonPlanarError (carrying a Kuratowski subdivision witness) for
    non-planar input.
    """
    if g.n < 2:
        raise GraphFormatError("embedding needs at least 2 vertices")
    gn = g.to_networkx()
    if not nx.is_connected(gn):
        raise GraphFormatError("embedding needs a connected graph")
    ok, emb = nx.check_planarity(gn, counterexample=False)
    if not ok:
        raise NonPlanarError("graph is not planar", witness=kuratowski_witness(g))
    rotation = {v: tuple(order) for v, order in emb.get_data().items()}
    return RotationEmbedding(g, rotation)


def faces_and_weights(emb: RotationEmbedding) -> Tuple[FaceRecord, ...]:
    return emb.faces


@dataclass(frozen=True)
class DualGraph:
    """Dual of an embedding: one node per face, one arc per primal edge.

    Arcs keep their primal edge, so routing in the dual translates back to
    crossed primal edges. A bridge yields a loop arc.
    """

    num_nodes: int
    arcs: Tuple[Tuple[int, int, Edge], ...]

    def neighbors(self) -> Dict[int, List[Tuple[int, Edge]]]:
        out: Dict[int, List[Tuple[int, Edge]]] = {f: [] for f in range(self.num_nodes)}
        for f1, f2, e in self.arcs:
            out[f1].append((f2, e))
            if f1 != f2:
                out[f2].append((f1, e))
        for lst in out.values():
            lst.sort()
        return out


def dual(emb: RotationEmbedding) -> DualGraph:
    arcs = []
    for u, v in emb.graph.edges():
        f1 = emb.face_of(u, v)
        f2 = emb.face_of(v, u)
        arcs.append((min(f1, f2), max(f1, f2), (u, v)))
    return DualGraph(len(emb.faces), tuple(sorted(arcs, key=lambda a: a[2])))


def _chord_positions(g: Graph, walk: Tuple[int, ...]):
    """Walk positions (i, j) of a chord candidate inside a face: fan from
    the lowest-id walk vertex, then fall back to any valid walk pair."""
    k = len(walk)
    ai = walk.index(min(walk))

    def ok(i, j):
        a, b = walk[i], walk[j]
        d = (j - i) % k
        return a != b and d not in (0, 1, k - 1) and not g.has_edge(a, b)

    for off in range(2, k - 1):
        j = (ai + off) % k
        if ok(ai, j):
            return ai, j
    for i in range(k):
        for j in range(i + 2, k):
            if ok(i, j):
                return i, j
    return None


def _insert_chord(rotation: Dict[int, list], walk: Tuple[int, ...], i: int, j: int):
    """Split a face by a chord between walk positions i and j.

    With the next-edge convention used by _trace_faces (successor of the
    incoming neighbor), inserting each endpoint right after the other
    occurrence's walk predecessor routes the chord inside this face.
    """
    k = len(walk)
    a, pa = walk[i], walk[i - 1]
    c, pc = walk[j], walk[j - 1]
    rotation[a].insert(rotation[a].index(pa) + 1, c)
    rotation[c].insert(rotation[c].index(pc) + 1, a)


def triangulate(emb: RotationEmbedding) -> Tuple[RotationEmbedding, FrozenSet[Edge]]:
    """Add chords until every face is a triangle; returns the fill edges.

    Chords are inserted into the rotation system itself, so the result is
    a refinement of the input embedding: every input face is the union of
    output faces separated only by fill edges. Fill edges never duplicate
    existing edges, and the result is maximal planar (|E| = 3|V| - 6) for
    inputs with >= 3 vertices.
    """
    if emb.graph.n < 3:
        raise GraphFormatError("triangulation needs at least 3 vertices")
    cur = emb
    rotation = {v: list(nbrs) for v, nbrs in emb.rotation.items()}
    fills = set()
    while True:
        target = None
        for f in cur.faces:
            if f.length > 3:
                target = f
                break
        if target is None:
            return cur, frozenset(fills)
        pos = _chord_positions(cur.graph, target.boundary)
        if pos is None:
            raise NonPlanarError("no chord available to triangulate a long face")
        i, j = pos
        _insert_chord(rotation, target.boundary, i, j)
        chord = norm_edge(target.boundary[i], target.boundary[j])
        fills.add(chord)
        g2 = Graph(cur.graph.vertices, cur.graph.edges() + (chord,))
        cur = RotationEmbedding(g2, {v: tuple(nbrs) for v, nbrs in rotation.items()})
