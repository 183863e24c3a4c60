import random

import networkx as nx
import pytest

from crossbound.embedding import is_planar
from crossbound.errors import BudgetExceededError
from crossbound.generators import complete, complete_bipartite, named, planar_plus
from crossbound.graph import Graph, delete_edge
from crossbound.oracle import cr_at_most, crossing_number, planarize_config


def test_ground_truths(k4, k5, k6, k33, petersen):
    assert crossing_number(k4) == 0
    assert crossing_number(k5) == 1
    assert crossing_number(k33) == 1
    assert crossing_number(k6) == 3
    assert crossing_number(petersen) == 2
    assert crossing_number(complete_bipartite(3, 4)) == 2
    assert crossing_number(complete_bipartite(2, 5)) == 0  # planar


def test_planar_graphs_are_zero():
    rng = random.Random(51)
    for _ in range(10):
        g, _ = planar_plus(rng.randint(4, 8), 0, rng)
        assert crossing_number(g) == 0


def test_cr_at_most_is_monotone_in_k(k6):
    answers = []
    for k in range(5):
        ok, wit = cr_at_most(k6, k, max_k=5)
        answers.append(ok)
        assert ok == (wit is not None)
        if ok:
            assert wit.k <= k
    assert answers == [False, False, False, True, True]


def test_edge_deletion_monotone(k5, k33, petersen):
    # cr can only drop when an edge goes
    for g in (k5, k33, petersen):
        base = crossing_number(g)
        for e in g.edges():
            assert crossing_number(delete_edge(g, e)) <= base


def test_witness_is_sound(k6, petersen):
    for g, expect in ((k6, 3), (petersen, 2)):
        ok, wit = cr_at_most(g, expect)
        assert ok and wit.k == expect
        planarized = planarize_config(g, sorted(wit.pairs), dict(wit.orders))
        assert is_planar(planarized)
        # a crossing adds one vertex and splits two edges into four
        assert planarized.n == g.n + expect
        assert planarized.m == g.m + 2 * expect


def test_witness_pairs_are_independent(k5):
    ok, wit = cr_at_most(k5, 1)
    assert ok
    ((e, f),) = wit.pairs
    assert len({e[0], e[1], f[0], f[1]}) == 4


def test_planarize_config_chains_share_dummies(k5):
    pairs = [(((0, 1)), ((2, 3)))]
    h = planarize_config(k5, pairs, {})
    assert h.n == 6 and h.m == 12
    d = 5  # the single dummy id
    assert h.degree(d) == 4
    assert not h.has_edge(0, 1) and not h.has_edge(2, 3)
    for v in (0, 1, 2, 3):
        assert h.has_edge(v, d)


def test_budget_k(k6):
    with pytest.raises(BudgetExceededError):
        cr_at_most(k6, 5)  # default max_k is 4
    with pytest.raises(BudgetExceededError) as exc:
        crossing_number(complete_bipartite(3, 5), max_k=2)  # cr(K3,5) = 4
    assert exc.value.established == "cr > 2"


def test_budget_edges(k5):
    with pytest.raises(BudgetExceededError):
        crossing_number(k5, max_edges=9)


def test_disconnected_sum(k5, k33):
    g = Graph.from_networkx(
        nx.disjoint_union(nx.complete_graph(5), nx.complete_bipartite_graph(3, 3))
    )
    assert crossing_number(g) == 2


def test_skewness_never_below_crossing_gap():
    # removing one edge per crossing planarizes, so sk <= cr always
    from crossbound.skewness import skewness_exact

    rng = random.Random(52)
    graphs = [named("petersen"), complete(5), complete(6), complete_bipartite(3, 4)]
    for _ in range(8):
        graphs.append(planar_plus(rng.randint(6, 8), rng.randint(0, 2), rng)[0])
    for g in graphs:
        if g.m > 20:
            continue
        try:
            cr = crossing_number(g)
        except BudgetExceededError:
            continue
        assert skewness_exact(g).value <= cr
