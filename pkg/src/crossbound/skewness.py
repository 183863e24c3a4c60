"""Skewness: the fewest edge removals that leave a planar graph.

Exact values come from a branch-and-bound over removal sets: every removal
set must hit every Kuratowski subdivision, so branching on the edges of one
witness subdivision per node is exhaustive. A greedy planar-subgraph pass
provides an upper-bound certificate for graphs beyond exact-search scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

import networkx as nx

from .embedding import is_planar
from .errors import CrossboundError
from .graph import Edge, Graph, delete_edges, norm_edge


@dataclass(frozen=True)
class SkewnessCertificate:
    """A removal set witnessing an upper bound on skewness.

    ``exact`` is True only when the search proved no smaller set works.
    """

    value: int
    removed: FrozenSet[Edge]
    exact: bool

    def verify(self, g: Graph) -> bool:
        return len(self.removed) == self.value and is_planar(delete_edges(g, self.removed))


def skewness_lower_bound(g: Graph) -> int:
    """Edge-count lower bound: |E| - (3|V| - 6), refined to |E| - (2|V| - 4)
    for bipartite graphs."""
    if g.n < 3:
        return 0
    lb = g.m - (3 * g.n - 6)
    if nx.is_bipartite(g.to_networkx()):
        lb = max(lb, g.m - (2 * g.n - 4))
    return max(0, lb)


def _kuratowski_edges(gn: nx.Graph) -> Optional[List[Edge]]:
    ok, cex = nx.check_planarity(gn, counterexample=True)
    if ok:
        return None
    return sorted(norm_edge(u, v) for u, v in cex.edges())


def _search(gn: nx.Graph, depth: int, banned: frozenset) -> Optional[List[Edge]]:
    """Removal set of size <= depth making gn planar, or None.

    Branches over the edges of one Kuratowski subdivision; ``banned``
    prevents revisiting permutations of the same set.
    """
    witness = _kuratowski_edges(gn)
    if witness is None:
        return []
    if depth == 0:
        return None
    for e in witness:
        if e in banned:
            continue
        gn.remove_edge(*e)
        sub = _search(gn, depth - 1, banned)
        gn.add_edge(*e)
        if sub is not None:
            return sorted([e] + sub)
        banned = banned | {e}
    return None


def skewness_exact(g: Graph, budget: Optional[int] = None) -> SkewnessCertificate:
    """Exact skewness with a removal-set witness, searched by size.

    ``budget`` caps the largest removal-set size tried (default: lower
    bound + 4). If the budget is exhausted the greedy heuristic's
    certificate is returned with exact=False.
    """
    lb = skewness_lower_bound(g)
    if budget is None:
        budget = lb + 4
    if budget < lb:
        raise CrossboundError(f"budget {budget} below lower bound {lb}")
    gn = g.to_networkx()
    for size in range(lb, budget + 1):
        found = _search(gn, size, frozenset())
        if found is not None:
            cert = SkewnessCertificate(len(found), frozenset(found), exact=True)
            assert cert.verify(g)
            return cert
    cert = planar_subgraph_heuristic(g)
    assert cert.verify(g)
    return cert


def planar_subgraph_heuristic(g: Graph) -> SkewnessCertificate:
    """Greedy planar subgraph: spanning forest first, then each remaining
    edge in sorted order if planarity survives. Upper bound only."""
    gn = g.to_networkx()
    keep = nx.Graph()
    keep.add_nodes_from(g.vertices)
    forest = []
    for comp_edges in (nx.dfs_edges(gn, source=min(c)) for c in
                       sorted(nx.connected_components(gn), key=min)):
        forest.extend(norm_edge(u, v) for u, v in comp_edges)
    keep.add_edges_from(forest)
    removed = []
    for e in sorted(g.edges()):
        if keep.has_edge(*e):
            continue
        keep.add_edge(*e)
        if not nx.check_planarity(keep, counterexample=False)[0]:
            keep.remove_edge(*e)
            removed.append(e)
    cert = SkewnessCertificate(len(removed), frozenset(removed), exact=(len(removed) == 0))
    assert cert.verify(g)
    return cert
