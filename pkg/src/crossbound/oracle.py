"""Exact crossing numbers for small graphs.

A drawing with k crossings is certified combinatorially: choose k unordered
pairs of independent edges (adjacent edges never cross and no pair crosses
twice in some optimal drawing, so nothing is lost), fix the order of
crossings along any edge involved more than once, replace each crossing by
a degree-4 dummy vertex, and planarity-test the result. The graph has a
drawing with at most k crossings iff some such configuration planarizes.

Exhaustive by design; budgets keep it at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from .errors import BudgetExceededError
from .graph import Edge, Graph, norm_edge

DEFAULT_MAX_K = 4
DEFAULT_MAX_EDGES = 20

Pair = Tuple[Edge, Edge]


@dataclass(frozen=True)
class CrossingConfig:
    """A witness drawing scheme: which edge pairs cross, and in what order
    along each edge crossed more than once."""

    pairs: FrozenSet[Pair]
    orders: Tuple[Tuple[Edge, Tuple[Edge, ...]], ...]

    @property
    def k(self) -> int:
        return len(self.pairs)


def _independent_pairs(g: Graph) -> List[Pair]:
    pairs = []
    edges = sorted(g.edges())
    for e, f in itertools.combinations(edges, 2):
        if len({e[0], e[1], f[0], f[1]}) == 4:
            pairs.append((e, f))
    return pairs


def planarize_config(g: Graph, pairs, orders: Dict[Edge, Tuple[Edge, ...]]) -> Graph:
    """The planarization graph of a crossing configuration.

    Each edge becomes a chain through its crossing dummies (in the given
    order, oriented from the low endpoint); each crossing pair shares one
    dummy. Dummy ids start above the host graph's ids.
    """
    next_id = (max(g.vertices) + 1) if g.n else 0
    dummy: Dict[Pair, int] = {}
    for p in sorted(pairs):
        dummy[p] = next_id
        next_id += 1
    crossings: Dict[Edge, List[Edge]] = {}
    for e, f in pairs:
        crossings.setdefault(e, []).append(f)
        crossings.setdefault(f, []).append(e)
    edges = []
    for e in g.edges():
        partners = crossings.get(e)
        if not partners:
            edges.append(e)
            continue
        seq = orders.get(e, tuple(sorted(partners)))
        chain = [e[0]] + [dummy[tuple(sorted((e, f)))] for f in seq] + [e[1]]
        edges.extend(zip(chain, chain[1:]))
    return Graph(g.vertices, edges)


def _order_choices(partners: List[Edge]):
    """Permutations of >= 2 crossings along one edge, deduplicated by
    reversal (the two traversal directions give the same drawing)."""
    if len(partners) == 1:
        return [tuple(partners)]
    out = []
    for perm in itertools.permutations(sorted(partners)):
        if perm <= perm[::-1]:
            out.append(perm)
    return out


def _level_witness(g: Graph, pool: List[Pair], k: int) -> Optional[CrossingConfig]:
    """First (lexicographic) k-pair configuration whose planarization is
    planar, or None."""
    for combo in itertools.combinations(pool, k):
        crossings: Dict[Edge, List[Edge]] = {}
        good = True
        for e, f in combo:
            crossings.setdefault(e, []).append(f)
            crossings.setdefault(f, []).append(e)
        multi = [e for e, ps in crossings.items() if len(ps) > 1]
        order_sets = [_order_choices(crossings[e]) for e in multi]
        for chosen in itertools.product(*order_sets):
            orders = dict(zip(multi, chosen))
            planarized = planarize_config(g, combo, orders)
            if nx.check_planarity(planarized.to_networkx(), counterexample=False)[0]:
                return CrossingConfig(
                    frozenset(combo),
                    tuple(sorted(orders.items())),
                )
    return None


def cr_at_most(
    g: Graph,
    k: int,
    max_k: int = DEFAULT_MAX_K,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> Tuple[bool, Optional[CrossingConfig]]:
    """Decide cr(g) <= k by exhausting configurations of 0..k crossings.

    Returns (True, witness) or (False, None). Raises BudgetExceededError
    when k or the edge count is beyond the configured budget.
    """
    if k < 0:
        return False, None
    if k > max_k:
        raise BudgetExceededError(f"k={k} above budget {max_k}")
    if g.m > max_edges:
        raise BudgetExceededError(f"|E|={g.m} above budget {max_edges}")
    pool = _independent_pairs(g)
    for level in range(k + 1):
        wit = _level_witness(g, pool, level)
        if wit is not None:
            return True, wit
    return False, None


def crossing_number(
    g: Graph,
    max_k: int = DEFAULT_MAX_K,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> int:
    """Exact cr(g), summed over connected components.

    Raises BudgetExceededError carrying the established fact cr(g) > max_k
    when the search space is exhausted without a witness.
    """
    total = 0
    gn = g.to_networkx()
    for nodes in sorted(nx.connected_components(gn), key=min):
        nodes = set(nodes)
        comp = Graph(nodes, (e for e in g.edges() if e[0] in nodes))
        if comp.m > max_edges:
            raise BudgetExceededError(f"|E|={comp.m} above budget {max_edges}")
        pool = _independent_pairs(comp)
        for level in range(max_k + 1):
            wit = _level_witness(comp, pool, level)
            if wit is not None:
                total += level
                break
        else:
            raise BudgetExceededError(
                f"cr exceeds budget on a component", established=f"cr > {max_k}"
            )
    return total
