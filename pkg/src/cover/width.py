"""
Bandwidth and clique cover width

bandwidth_exact lays vertices out left to right for increasing b and stops at
the first b that admits a layout. ccw_exact walks every partition of V into
cliques in lexicographic order and asks the bandwidth search whether the
quotient beats the best width found so far.
"""
import math
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from config.settings import EXACT_BANDWIDTH_CAP, EXACT_CCW_CAP
from src.cover.clique_cover import CliqueCover, ordering_bandwidth, quotient_graph
from src.errors import CapacityError
from src.graphs.graph import Graph, bfs_distances, bit, connected_components, lowest, members


# ========================================================================
# BANDWIDTH
# ========================================================================

def bandwidth_lower_bound(G: Graph) -> int:
    """max(ceil(max degree / 2), ceil((|C| - 1) / diam(C)) over components C)"""
    bound = math.ceil(G.max_degree() / 2)
    for component in connected_components(G):
        size = component.bit_count()
        if size < 2:
            continue
        diameter = max(max(bfs_distances(G.rows, v, component).values()) for v in members(component))
        bound = max(bound, math.ceil((size - 1) / diameter))
    return bound


def layout_within(G: Graph, b: int) -> Optional[List[int]]:
    """
    A vertex order of bandwidth <= b, or None

    Vertices are placed left to right, smallest id first. A placement is
    rejected when some placed vertex could no longer fit its unplaced
    neighbours into the b positions that follow it. Dead states are keyed by
    the placed set plus the last b placements, which fix everything the rest
    of the layout depends on.
    """
    n, rows = G.n, G.rows
    if n == 0:
        return []
    if b <= 0:
        return list(range(n)) if G.m == 0 else None

    order: List[int] = []
    position = [-1] * n
    dead = set()

    def fits(placed: int) -> bool:
        p = len(order) - 1
        for q in range(max(0, p - b + 1), p + 1):
            u = order[q]
            waiting = (rows[u] & ~placed).bit_count()
            if waiting > q + b - p:
                return False
        return True

    def place(placed: int) -> bool:
        if placed == G.full_mask:
            return True
        key = (placed, tuple(order[-b:]))
        if key in dead:
            return False
        p = len(order)
        # a vertex with a neighbour at p - b must take this slot
        forced = 0
        if p - b >= 0:
            forced = rows[order[p - b]] & ~placed
            if forced.bit_count() > 1:
                dead.add(key)
                return False
        candidates = forced if forced else G.full_mask & ~placed
        for v in members(candidates):
            if any(position[u] < p - b for u in members(rows[v] & placed)):
                continue
            order.append(v)
            position[v] = p
            if fits(placed | bit(v)) and place(placed | bit(v)):
                return True
            order.pop()
            position[v] = -1
        dead.add(key)
        return False

    return order[:] if place(0) else None


def bandwidth_exact(G: Graph, cap: Optional[int] = None,
                    limit: Optional[int] = None) -> Tuple[int, List[int]]:
    """
    Exact bandwidth by iterative deepening over the layout search

    Args:
        G: Graph
        cap: Largest vertex count accepted (EXACT_BANDWIDTH_CAP by default)
        limit: Stop once b reaches limit; returns (limit, []) when no layout
            narrower than limit exists

    Returns:
        (value, order) with order a witnessing vertex sequence

    Raises:
        CapacityError: G.n exceeds the cap
    """
    cap = EXACT_BANDWIDTH_CAP if cap is None else cap
    if G.n > cap:
        raise CapacityError("bandwidth_exact", G.n, cap)
    if G.m == 0:
        return 0, list(range(G.n))
    top = G.n - 1 if limit is None else min(limit - 1, G.n - 1)
    for b in range(bandwidth_lower_bound(G), top + 1):
        order = layout_within(G, b)
        if order is not None:
            return b, order
    return limit, []


# ========================================================================
# CLIQUE COVER WIDTH
# ========================================================================

def _is_cluster_graph(G: Graph) -> bool:
    for component in connected_components(G):
        for v in members(component):
            if (G.rows[v] | bit(v)) != component:
                return False
    return True


def _cliques_through(rows: Sequence[int], v: int, pool: int):
    """Cliques containing v inside pool, in lexicographic order of their sorted tuples"""
    def grow(clique: int, candidates: int):
        yield clique
        for w in members(candidates):
            yield from grow(clique | bit(w), candidates & rows[w] & ~((bit(w) << 1) - 1))
    yield from grow(bit(v), rows[v] & pool)


class _WidthSearch:
    """Branch-and-bound over clique partitions for ccw_exact"""

    def __init__(self, G: Graph, upper: int):
        self.G = G
        self.best = upper + 1
        self.best_blocks: Optional[List[int]] = None
        self.best_order: Optional[List[int]] = None
        self.floor = 0 if _is_cluster_graph(G) else 1
        self.bandwidth_cache: Dict[Tuple[int, ...], Tuple[int, List[int]]] = {}

    def _partial_bound(self, blocks: List[int], remaining: int) -> int:
        """Lower bound on the quotient's max degree from the finished blocks"""
        rows = self.G.rows
        bound = 0
        for block in blocks:
            reach = 0
            for v in members(block):
                reach |= rows[v]
            adjacent = sum(1 for other in blocks if other is not block and other & reach)
            if reach & remaining:
                adjacent += 1
            bound = max(bound, adjacent)
        return bound

    def _evaluate(self, blocks: List[int]):
        where = [0] * self.G.n
        for i, block in enumerate(blocks):
            for v in members(block):
                where[v] = i
        quotient_rows = [0] * len(blocks)
        for u, v in self.G.edges():
            if where[u] != where[v]:
                quotient_rows[where[u]] |= bit(where[v])
                quotient_rows[where[v]] |= bit(where[u])
        key = tuple(quotient_rows)
        if key not in self.bandwidth_cache:
            Q = Graph(len(blocks), key)
            self.bandwidth_cache[key] = bandwidth_exact(Q, cap=len(blocks), limit=self.best)
        value, order = self.bandwidth_cache[key]
        if value < self.best:
            self.best = value
            self.best_blocks = blocks[:]
            self.best_order = order

    def run(self):
        blocks: List[int] = []

        def extend(remaining: int) -> bool:
            """Returns True once the floor is reached"""
            if not remaining:
                self._evaluate(blocks)
                return self.best <= self.floor
            if math.ceil(self._partial_bound(blocks, remaining) / 2) >= self.best:
                return False
            v = lowest(remaining)
            for clique in _cliques_through(self.G.rows, v, remaining):
                blocks.append(clique)
                done = extend(remaining & ~clique)
                blocks.pop()
                if done:
                    return True
            return False

        extend(self.G.full_mask)


def ccw_exact(G: Graph, cap: Optional[int] = None) -> Tuple[int, CliqueCover]:
    """
    Clique cover width: the least bandwidth of any clique cover graph of G

    Among optimal covers the one with the lexicographically smallest block
    signature wins; it comes back arranged in its optimal order.

    Raises:
        CapacityError: G.n exceeds the cap (EXACT_CCW_CAP by default)
    """
    cap = EXACT_CCW_CAP if cap is None else cap
    if G.n > cap:
        raise CapacityError("ccw_exact", G.n, cap)
    if G.n == 0:
        return 0, CliqueCover(G, ())

    upper, _ = ccw_upper(G)
    search = _WidthSearch(G, upper)
    search.run()
    blocks = [frozenset(members(block)) for block in search.best_blocks]
    return search.best, CliqueCover(G, tuple(blocks[i] for i in search.best_order))


# ========================================================================
# HEURISTIC UPPER BOUND
# ========================================================================

def greedy_clique_partition(G: Graph) -> CliqueCover:
    """Blocks grown from the smallest unassigned vertex by adding the smallest common neighbour"""
    remaining = G.full_mask
    blocks = []
    while remaining:
        v = lowest(remaining)
        clique = bit(v)
        common = G.rows[v] & remaining
        while common:
            w = lowest(common)
            clique |= bit(w)
            common &= G.rows[w]
        blocks.append(frozenset(members(clique)))
        remaining &= ~clique
    return CliqueCover(G, tuple(blocks))


def fiedler_order(Q: Graph) -> List[int]:
    """Vertices sorted by their Fiedler-vector entry (rounded), then by id"""
    if Q.n < 3:
        return list(range(Q.n))
    adjacency = Q.adjacency_matrix().astype(float)
    laplacian = np.diag(adjacency.sum(axis=1)) - adjacency
    _, vectors = np.linalg.eigh(laplacian)
    fiedler = vectors[:, 1]
    # fix the sign so the output does not depend on the eigensolver
    pivot = int(np.argmax(np.round(np.abs(fiedler), 12)))
    if fiedler[pivot] < 0:
        fiedler = -fiedler
    return sorted(range(Q.n), key=lambda v: (round(float(fiedler[v]), 12), v))


def candidate_orders(Q: Graph) -> List[List[int]]:
    """Identity, Cuthill-McKee and spectral arrangements of a quotient"""
    orders = [list(range(Q.n))]
    if Q.n > 1 and Q.m:
        orders.append(list(nx.utils.cuthill_mckee_ordering(Q.to_networkx())))
        orders.append(fiedler_order(Q))
    return orders


def ccw_upper(G: Graph) -> Tuple[int, CliqueCover]:
    """
    Heuristic clique cover width: greedy and singleton covers, each tried in
    identity, Cuthill-McKee and spectral order; the first narrowest wins
    """
    if G.n == 0:
        return 0, CliqueCover(G, ())
    best_value, best_cover = None, None
    for cover in (greedy_clique_partition(G), CliqueCover.singletons(G)):
        Q = quotient_graph(G, cover).graph
        for order in candidate_orders(Q):
            value = ordering_bandwidth(Q, order)
            if best_value is None or value < best_value:
                best_value, best_cover = value, cover.reordered(order)
    return best_value, best_cover
