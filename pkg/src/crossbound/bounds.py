"""Closed-form crossing-number bounds and crossing-criticality certification.

All bound arithmetic is exact: rationals throughout, and the lone
irrational term (sqrt(k) in the minimum-degree-5 bound) is kept symbolic,
so comparisons against integer crossing numbers are exact decisions rather
than float guesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from .errors import CrossboundError
from .graph import Graph, delete_edge, min_degree
from .lightcycle import CycleWitness, light_cycle_general
from .oracle import cr_at_most, crossing_number, DEFAULT_MAX_EDGES, DEFAULT_MAX_K
from .skewness import SkewnessCertificate, skewness_exact


@dataclass(frozen=True)
class SqrtExpr:
    """Exact value of ``rational + coeff * sqrt(radicand)``.

    Supports exact comparison with rationals by isolating the square root
    and squaring, so no floating-point rounding can flip a bound decision.
    """

    rational: Fraction
    coeff: Fraction
    radicand: int

    def __float__(self) -> float:
        return float(self.rational) + float(self.coeff) * math.sqrt(self.radicand)

    def exact(self) -> Optional[Fraction]:
        root = math.isqrt(self.radicand)
        if root * root == self.radicand:
            return self.rational + self.coeff * root
        return None

    def __ge__(self, other) -> bool:
        # self >= q  <=>  coeff*sqrt(r) >= q - rational
        q = Fraction(other)
        exact = self.exact()
        if exact is not None:
            return exact >= q
        rhs = q - self.rational
        lhs_sq = self.coeff * self.coeff * self.radicand  # (coeff*sqrt(r))^2
        if self.coeff >= 0:
            return rhs <= 0 or lhs_sq >= rhs * rhs
        return rhs <= 0 and lhs_sq <= rhs * rhs

    def __lt__(self, other) -> bool:
        return not self.__ge__(other)


BoundValue = Union[Fraction, SqrtExpr]


def skewness_crossing_bound(n: int, sk: int) -> Fraction:
    """Upper bound on cr(G) from n vertices and skewness sk:
    (3 sk^2 + (4n - 17) sk) / 6. Equals 1 for (n, sk) = (5, 1)."""
    if n < 1 or sk < 0:
        raise CrossboundError("need n >= 1 and sk >= 0")
    return Fraction(3 * sk * sk + (4 * n - 17) * sk, 6)


def critical_cycle_bound(k: int, delta: int, s: int, sk: int) -> Fraction:
    """Upper bound on cr(G) for a k-crossing-critical G containing a cycle
    of lightness s: 2k + (s-5)/2 when the minimum degree is 3, else
    2k - sk + delta*(s - delta + 2) / (2*(delta - 2))."""
    if delta < 3:
        raise CrossboundError("minimum degree must be >= 3")
    if delta == 3:
        return 2 * k + Fraction(s - 5, 2)
    return 2 * k - sk + Fraction(delta * (s - delta + 2), 2 * (delta - 2))


def critical_degree_bound(k: int, delta: int, n: int) -> BoundValue:
    """Upper bound on cr(G) for a k-crossing-critical G by minimum degree:
    2.5(k+1) at degree 3, 2(k+4) at degree 4, and
    2k - sqrt(k)/(2n) + 35/6 at degree >= 5 (exact symbolic sqrt)."""
    if delta < 3 or k < 1 or n < 1:
        raise CrossboundError("need delta >= 3, k >= 1, n >= 1")
    if delta == 3:
        return Fraction(5, 2) * (k + 1)
    if delta == 4:
        return Fraction(2 * (k + 4))
    expr = SqrtExpr(2 * k + Fraction(35, 6), Fraction(-1, 2 * n), k)
    exact = expr.exact()
    return exact if exact is not None else expr


def _holds(d: Tuple[int, ...], need_sum: Fraction, surplus_terms: int, cap: int) -> bool:
    if sum(Fraction(1, x) for x in d) <= need_sum:
        return True  # hypothesis fails; nothing to check
    return sum(x - 2 for x in d[:surplus_terms]) <= cap


def _enumerate_part(count: int, need_sum: Fraction, surplus_terms: int, cap: int, d_max: int) -> bool:
    """Check one implication over all nondecreasing degree tuples, pruning
    branches whose reciprocal sum can no longer exceed the threshold."""

    def rec(prefix, acc):
        if len(prefix) == count:
            return _holds(prefix, need_sum, surplus_terms, cap)
        lo = prefix[-1] if prefix else 3
        remaining = count - len(prefix)
        for d in range(lo, d_max + 1):
            if acc + Fraction(remaining, d) <= need_sum:
                break  # larger d only shrinks the sum; hypothesis unreachable
            if not rec(prefix + (d,), acc + Fraction(1, d)):
                return False
        return True

    return rec((), Fraction(0))


def verify_degree_reciprocal_bounds(d_max: int = 60) -> bool:
    """Exhaustively verify, in exact rationals, the three implications on
    nondecreasing degree tuples d_i >= 3:

      sum of 3 reciprocals > 1/2  =>  (d1-2) + (d2-2)          <= 10
      sum of 4 reciprocals > 1    =>  (d1-2) + ... + (d3-2)    <= 5
      sum of 5 reciprocals > 3/2  =>  (d1-2) + ... + (d4-2)    <= 4

    Any tuple with d1 > 6 already violates every hypothesis, so d_max = 60
    covers all hypothesis-satisfying tuples with a wide margin.
    """
    if d_max < 3:
        raise CrossboundError("d_max must be >= 3")
    return (
        _enumerate_part(3, Fraction(1, 2), 2, 10, d_max)
        and _enumerate_part(4, Fraction(1), 3, 5, d_max)
        and _enumerate_part(5, Fraction(3, 2), 4, 4, d_max)
    )


def is_k_crossing_critical(
    g: Graph, k: int, max_k: int = DEFAULT_MAX_K, max_edges: int = DEFAULT_MAX_EDGES
) -> bool:
    """cr(g) >= k and cr(g minus e) <= k - 1 for every edge e."""
    if k < 1:
        raise CrossboundError("k must be >= 1")
    ok, _ = cr_at_most(g, k - 1, max_k=max_k, max_edges=max_edges)
    if ok:
        return False
    for e in sorted(g.edges()):
        if crossing_number(delete_edge(g, e), max_k=max_k, max_edges=max_edges) > k - 1:
            return False
    return True


@dataclass(frozen=True)
class BoundReport:
    """Every applicable bound for one graph, with the inputs that fed it."""

    n: int
    delta: int
    k: Optional[int]
    cr: Optional[int]
    sk_certificate: SkewnessCertificate
    mu_witness: CycleWitness
    skewness_bound: Fraction
    cycle_bound: Optional[Fraction]
    degree_bound: Optional[BoundValue]
    satisfied: Dict[str, str]


def _verdict(cr: Optional[int], bound) -> str:
    if cr is None:
        return "unknown"
    return "true" if bound >= cr else "false"


def certify_critical_bounds(
    g: Graph,
    k: int,
    max_k: int = DEFAULT_MAX_K,
    max_edges: int = DEFAULT_MAX_EDGES,
    check_critical: bool = True,
) -> BoundReport:
    """Evaluate all bounds for a k-crossing-critical graph and record, per
    bound, whether the exact crossing number respects it."""
    if check_critical and not is_k_crossing_critical(g, k, max_k=max_k, max_edges=max_edges):
        raise CrossboundError(f"graph is not {k}-crossing-critical")
    delta = min_degree(g)
    cr = crossing_number(g, max_k=max_k, max_edges=max_edges)
    cert = skewness_exact(g)
    wit = light_cycle_general(g, cert.removed)
    sk_bound = skewness_crossing_bound(g.n, cert.value)
    cyc_bound = critical_cycle_bound(k, delta, wit.mu, cert.value) if delta >= 3 else None
    deg_bound = critical_degree_bound(k, delta, g.n) if delta >= 3 else None
    satisfied = {"skewness_bound": _verdict(cr, sk_bound)}
    if cyc_bound is not None:
        satisfied["cycle_bound"] = _verdict(cr, cyc_bound)
    if deg_bound is not None:
        satisfied["degree_bound"] = _verdict(cr, deg_bound)
    return BoundReport(
        n=g.n,
        delta=delta,
        k=k,
        cr=cr,
        sk_certificate=cert,
        mu_witness=wit,
        skewness_bound=sk_bound,
        cycle_bound=cyc_bound,
        degree_bound=deg_bound,
        satisfied=satisfied,
    )
