import random
from fractions import Fraction

import networkx as nx
import pytest

from crossbound.embedding import (
    RotationEmbedding,
    dual,
    embed,
    faces_and_weights,
    is_planar,
    kuratowski_witness,
    triangulate,
)
from crossbound.errors import NonPlanarError
from crossbound.generators import random_maximal_planar, random_planar_min_degree3
from crossbound.graph import Graph, min_degree

from oracles import independent_is_planar


def test_is_planar_basics(k4, k5, k33, petersen):
    assert is_planar(k4)
    assert not is_planar(k5)
    assert not is_planar(k33)
    assert not is_planar(petersen)


def test_is_planar_agrees_with_independent_oracle():
    rng = random.Random(11)
    for _ in range(120):
        n = rng.randint(1, 8)
        gn = nx.gnp_random_graph(n, rng.uniform(0.2, 0.9), seed=rng.randint(0, 10**6))
        g = Graph.from_networkx(gn)
        assert is_planar(g) == independent_is_planar(g), g.edges()


def test_embed_c4(c4):
    emb = embed(c4)
    assert len(emb.faces) == 2
    assert all(f.length == 4 for f in emb.faces)


def test_embed_k4(k4):
    emb = embed(k4)
    assert len(emb.faces) == 4
    assert all(f.length == 3 for f in emb.faces)
    assert all(f.weight == 1 for f in emb.faces)


def test_embed_cube():
    g = Graph.from_networkx(nx.convert_node_labels_to_integers(nx.hypercube_graph(3)))
    emb = embed(g)
    assert g.n - g.m + len(emb.faces) == 2  # 8 - 12 + 6
    assert sorted(f.length for f in emb.faces) == [4] * 6


def test_embed_nonplanar_has_witness(k5):
    with pytest.raises(NonPlanarError) as exc:
        embed(k5)
    witness = exc.value.witness
    assert witness is not None
    sub = Graph(range(5), witness)
    assert not independent_is_planar(sub)


def test_kuratowski_witness_is_nonplanar_subgraph(petersen):
    witness = kuratowski_witness(petersen)
    assert witness <= set(petersen.edges())
    assert not independent_is_planar(Graph(petersen.vertices, witness))


def test_face_sum_identities_on_random_embeddings():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(4, 30)
        g = random_planar_min_degree3(n, rng)
        emb = embed(g)
        assert sum(f.weight for f in emb.faces) == g.n
        assert sum(f.length for f in emb.faces) == 2 * g.m
        assert g.n - g.m + len(emb.faces) == 2


def test_light_face_exists_for_min_degree_3():
    # some face satisfies weight - length/2 + 1 > 0, and any such face is short
    rng = random.Random(5)
    for _ in range(40):
        g = random_planar_min_degree3(rng.randint(4, 30), rng)
        emb = embed(g)
        qualifying = [
            f for f in emb.faces if f.weight - Fraction(f.length, 2) + 1 > 0
        ]
        assert qualifying
        assert all(f.length <= 5 for f in qualifying)


def test_handbuilt_rotation_weight_counts_each_appearance():
    # triangle a,b,c with degrees 3, 11, 11 in the host graph; the rotation
    # is built by hand so the pure triangle face is guaranteed to exist
    a, b, c = 0, 1, 2
    edges = [(a, b), (b, c), (a, c), (a, 3)]
    rot = {a: (c, b, 3), b: (a, c), c: (b, a), 3: (a,)}
    for p in range(4, 13):  # 9 pendants on b
        edges.append((b, p))
        rot[b] = rot[b] + (p,)
        rot[p] = (b,)
    for p in range(13, 22):  # 9 pendants on c
        edges.append((c, p))
        rot[c] = rot[c] + (p,)
        rot[p] = (c,)
    g = Graph(range(22), edges)
    assert g.degree(a) == 3 and g.degree(b) == 11 and g.degree(c) == 11
    emb = RotationEmbedding(g, rot)
    tri = [f for f in emb.faces if sorted(f.boundary) == [a, b, c]]
    assert tri and tri[0].weight == Fraction(17, 33)
    assert tri[0].weight > Fraction(1, 2)


def test_invalid_rotation_rejected(c4):
    # planar graph, but a rotation system of the torus-like kind fails Euler
    k4 = Graph(range(4), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    bad = {0: (1, 2, 3), 1: (0, 2, 3), 2: (0, 1, 3), 3: (0, 1, 2)}
    with pytest.raises(NonPlanarError):
        RotationEmbedding(k4, bad)


def test_dual_k4(k4):
    d = dual(embed(k4))
    assert d.num_nodes == 4
    assert len(d.arcs) == 6
    counts = {}
    for f1, f2, _ in d.arcs:
        counts[f1] = counts.get(f1, 0) + 1
        counts[f2] = counts.get(f2, 0) + 1
    assert all(c == 3 for c in counts.values())  # dual of K4 is K4


def test_dual_c4(c4):
    d = dual(embed(c4))
    assert d.num_nodes == 2
    assert len(d.arcs) == 4
    assert all((f1, f2) == (0, 1) for f1, f2, _ in d.arcs)


def test_dual_of_maximal_planar_is_cubic(k5):
    g = Graph(range(5), [e for e in k5.edges() if e != (0, 1)])
    d = dual(embed(g))
    assert d.num_nodes == 2 * 5 - 4
    assert len(d.arcs) == 9
    degs = {}
    for f1, f2, _ in d.arcs:
        degs[f1] = degs.get(f1, 0) + 1
        degs[f2] = degs.get(f2, 0) + 1
    assert all(v == 3 for v in degs.values())


def test_triangulate_k4_noop(k4):
    emb, fills = triangulate(embed(k4))
    assert fills == frozenset()
    assert emb.graph == k4


def test_triangulate_c4_and_c5(c4):
    emb, fills = triangulate(embed(c4))
    assert emb.graph.m == 3 * 4 - 6
    assert all(f.length == 3 for f in emb.faces)
    c5 = Graph(range(5), [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    emb5, fills5 = triangulate(embed(c5))
    assert emb5.graph.m == 3 * 5 - 6
    assert len(fills5) == 4
    assert not (fills5 & set(c5.edges()))


def test_triangulate_is_refinement():
    # every fill-free directed edge keeps its original face region: faces of
    # the output, grouped by fill connectivity, partition the input faces
    rng = random.Random(9)
    for _ in range(20):
        g = random_planar_min_degree3(rng.randint(4, 25), rng)
        emb = embed(g)
        tri, fills = triangulate(emb)
        assert tri.graph.m == 3 * tri.graph.n - 6
        assert all(f.length == 3 for f in tri.faces)
        for v in g.vertices:
            assert set(emb.rotation[v]) <= set(tri.rotation[v])


def test_triangulate_random_trees_and_sparse():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(3, 15)
        g = Graph.from_networkx(nx.random_labeled_tree(n, seed=rng.randint(0, 10**6)))
        tri, fills = triangulate(embed(g))
        assert tri.graph.m == 3 * n - 6
