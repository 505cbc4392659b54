"""
Largest induced star and largest balanced induced biclique
"""
from typing import NamedTuple, Optional

from config.settings import EXACT_BICLIQUE_CAP, EXACT_MIS_CAP
from src.errors import CapacityError
from src.graphs.graph import Graph, VertexSet, members, max_independent_set_mask


class StarResult(NamedTuple):
    s: int
    center: Optional[int]  # None when s == 0
    leaves: VertexSet


class BicliqueResult(NamedTuple):
    p: int
    side_a: VertexSet
    side_b: VertexSet


def largest_induced_star(G: Graph, cap: Optional[int] = None) -> StarResult:
    """
    Largest s such that some vertex has s pairwise nonadjacent neighbours

    The center is the smallest vertex attaining s; its leaves are the
    lexicographically smallest maximum independent set of its neighbourhood.

    Raises:
        CapacityError: G.n exceeds the cap (EXACT_MIS_CAP by default)
    """
    cap = EXACT_MIS_CAP if cap is None else cap
    if G.n > cap:
        raise CapacityError("largest_induced_star", G.n, cap)
    best = StarResult(0, None, frozenset())
    for v in range(G.n):
        if G.degree(v) <= best.s:
            continue
        leaves = max_independent_set_mask(G.rows, G.rows[v])
        if leaves.bit_count() > best.s:
            best = StarResult(leaves.bit_count(), v, frozenset(members(leaves)))
    return best


def largest_balanced_induced_biclique(G: Graph, cap: Optional[int] = None) -> BicliqueResult:
    """
    Largest p with disjoint independent p-sets A, B and every A-B pair adjacent

    Depth-first over independent sets A in lexicographic order, tracking the
    common neighbourhood of A; the best B for a given A is a maximum
    independent set of that neighbourhood. A branch dies once the common
    neighbourhood or the room left for A cannot beat the best p.

    Args:
        G: Graph
        cap: Largest vertex count accepted (EXACT_BICLIQUE_CAP by default)

    Returns:
        BicliqueResult with side_a holding the smaller minimum vertex

    Raises:
        CapacityError: G.n exceeds the cap
    """
    cap = EXACT_BICLIQUE_CAP if cap is None else cap
    if G.n > cap:
        raise CapacityError("largest_balanced_induced_biclique", G.n, cap)
    rows = G.rows
    best_p = 0
    best_a, best_b = 0, 0

    def extend(A: int, size: int, common: int, candidates: int):
        nonlocal best_p, best_a, best_b
        if size and min(size, common.bit_count()) > best_p:
            B = max_independent_set_mask(rows, common)
            p = min(size, B.bit_count())
            if p > best_p:
                best_p, best_a, best_b = p, A, B
        while candidates:
            if min(size + candidates.bit_count(), common.bit_count()) <= best_p:
                return
            w = candidates & -candidates
            candidates ^= w
            v = w.bit_length() - 1
            narrowed = common & rows[v]
            if narrowed:
                extend(A | w, size + 1, narrowed, candidates & ~rows[v])

    extend(0, 0, G.full_mask, G.full_mask)
    if best_p == 0:
        return BicliqueResult(0, frozenset(), frozenset())

    side_a = frozenset(sorted(members(best_a))[:best_p])
    side_b = frozenset(sorted(members(best_b))[:best_p])
    if min(side_b) < min(side_a):
        side_a, side_b = side_b, side_a
    return BicliqueResult(best_p, side_a, side_b)


def is_induced_biclique(G: Graph, A, B) -> bool:
    """Independent verifier: A, B disjoint independent sets, complete between"""
    A, B = set(A), set(B)
    if A & B:
        return False
    for side in (A, B):
        if any(G.has_edge(u, v) for u in side for v in side if u < v):
            return False
    return all(G.has_edge(a, b) for a in A for b in B)
