"""
Immutable simple undirected graph with bitset adjacency rows, and the
primitive operations the rest of the toolkit builds on

Vertex ids are dense integers 0..n-1. Row v is a Python int whose bit u is set
iff uv is an edge. Every routine breaks ties by the smallest vertex id so that
witnesses are reproducible.
"""
import math
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from config.settings import EXACT_MIS_CAP
from src.errors import CapacityError, GraphValidationError

VertexSet = FrozenSet[int]


# ========================================================================
# BITSET HELPERS
# ========================================================================

def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield the set bits of mask in increasing order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# ========================================================================
# GRAPH
# ========================================================================

@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph

    Args:
        n: Number of vertices
        rows: Adjacency bitmask per vertex
        labels: Optional provenance tag per vertex (set by generators)
    """
    n: int
    rows: Tuple[int, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphValidationError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphValidationError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphValidationError(f"expected {self.n} labels, got {len(self.labels)}")

        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise GraphValidationError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if row >> v & 1:
                raise GraphValidationError(f"self-loop at vertex {v}")
            for u in members(row):
                if not self.rows[u] >> v & 1:
                    raise GraphValidationError(f"adjacency is not symmetric on edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> "Graph":
        """
        Build a graph from an edge iterable; duplicate edges collapse

        Raises:
            GraphValidationError: self-loop or vertex out of range
        """
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge {u}-{v} leaves the vertex range [0, {n})")
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @classmethod
    def edgeless(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> List[Tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending"""
        return [(u, v) for u in range(self.n) for v in members(self.rows[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(members(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.rows), default=0)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def check_vertex_set(G: Graph, S: Iterable[int]) -> VertexSet:
    """Validate S against G and return it as a frozenset"""
    vertices = frozenset(S)
    for v in vertices:
        if not (isinstance(v, int) and 0 <= v < G.n):
            raise GraphValidationError(f"vertex {v!r} is not in [0, {G.n})")
    return vertices


# ========================================================================
# PRIMITIVE OPERATIONS
# ========================================================================

def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.rows)), G.labels)


def induced_subgraph(G: Graph, S: Iterable[int]) -> Tuple[Graph, List[int]]:
    """
    Subgraph induced by S

    Returns:
        (H, vertex_map) where vertex i of H is vertex vertex_map[i] of G;
        vertex_map is S in increasing order
    """
    vertex_map = sorted(check_vertex_set(G, S))
    position = {v: i for i, v in enumerate(vertex_map)}
    keep = mask_of(vertex_map)
    rows = tuple(mask_of(position[u] for u in members(G.rows[v] & keep)) for v in vertex_map)
    labels = tuple(G.labels[v] for v in vertex_map) if G.labels is not None else None
    return Graph(len(vertex_map), rows, labels), vertex_map


def closed_neighborhood(G: Graph, x: int) -> Graph:
    """H_x: the subgraph induced by x and its neighbours"""
    check_vertex_set(G, [x])
    H, _ = induced_subgraph(G, members(G.rows[x] | bit(x)))
    return H


def degeneracy(G: Graph) -> Tuple[int, List[int]]:
    """
    Degeneracy via a min-degree elimination order

    Returns:
        (value, order): value is the largest degree seen at removal time
    """
    remaining = G.full_mask
    value = 0
    order = []
    while remaining:
        v = min(members(remaining), key=lambda u: ((G.rows[u] & remaining).bit_count(), u))
        value = max(value, (G.rows[v] & remaining).bit_count())
        order.append(v)
        remaining &= ~bit(v)
    return value, order


def bfs_distances(rows: Sequence[int], source: int, within: int) -> dict:
    """Distances from source inside the vertex mask `within`"""
    distances = {source: 0}
    frontier = bit(source)
    seen = frontier
    depth = 0
    while frontier:
        depth += 1
        reach = 0
        for v in members(frontier):
            reach |= rows[v]
        frontier = reach & within & ~seen
        seen |= frontier
        for v in members(frontier):
            distances[v] = depth
    return distances


def radius_center_of_mask(rows: Sequence[int], mask: int) -> Tuple[float, Optional[int]]:
    """Radius and smallest-id center of the subgraph induced by a nonempty mask"""
    size = mask.bit_count()
    best_radius = math.inf
    best_center = None
    for c in members(mask):
        distances = bfs_distances(rows, c, mask)
        if len(distances) < size:
            return math.inf, None
        eccentricity = max(distances.values())
        if eccentricity < best_radius:
            best_radius, best_center = eccentricity, c
    return best_radius, best_center


def set_radius_center(G: Graph, S: Iterable[int]) -> Tuple[float, Optional[int]]:
    """
    Radius of G[S] and the center attaining it

    Returns:
        (radius, center); (math.inf, None) when G[S] is disconnected

    Raises:
        GraphValidationError: S is empty or leaves the vertex range
    """
    vertices = check_vertex_set(G, S)
    if not vertices:
        raise GraphValidationError("set_radius_center needs a nonempty vertex set")
    return radius_center_of_mask(G.rows, mask_of(vertices))


def connected_components(G: Graph, within: Optional[int] = None) -> List[int]:
    """Component masks of G[within], ordered by their smallest vertex"""
    remaining = G.full_mask if within is None else within
    components = []
    while remaining:
        v = lowest(remaining)
        component = mask_of(bfs_distances(G.rows, v, remaining))
        components.append(component)
        remaining &= ~component
    return components


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(connected_components(G)) == 1


# ========================================================================
# MAXIMUM INDEPENDENT SET
# ========================================================================

def _clique_partition_bound(rows: Sequence[int], candidates: int) -> int:
    """Greedy partition of the candidates into cliques; bounds any independent subset"""
    count = 0
    while candidates:
        v = lowest(candidates)
        clique = bit(v)
        common = rows[v] & candidates
        while common:
            w = lowest(common)
            clique |= bit(w)
            common &= rows[w]
        candidates &= ~clique
        count += 1
    return count


def max_independent_set_mask(rows: Sequence[int], candidates: int) -> int:
    """
    Lexicographically smallest maximum independent set inside a vertex mask

    Branches on the lowest candidate, include-first, so the first optimum
    reached is the lexicographically smallest one.
    """
    best_size = -1
    best_mask = 0

    def expand(chosen: int, size: int, cand: int):
        nonlocal best_size, best_mask
        if not cand:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        if size + cand.bit_count() <= best_size:
            return
        if size + _clique_partition_bound(rows, cand) <= best_size:
            return
        v = lowest(cand)
        expand(chosen | bit(v), size + 1, cand & ~rows[v] & ~bit(v))
        expand(chosen, size, cand & ~bit(v))

    expand(0, 0, candidates)
    return best_mask


def max_independent_set(G: Graph, cap: Optional[int] = None) -> VertexSet:
    """
    Exact maximum independent set by branch-and-bound

    Raises:
        CapacityError: G.n exceeds the cap (EXACT_MIS_CAP by default)
    """
    cap = EXACT_MIS_CAP if cap is None else cap
    if G.n > cap:
        raise CapacityError("max_independent_set", G.n, cap)
    return frozenset(members(max_independent_set_mask(G.rows, G.full_mask)))
