"""
Chordal graphs: lexicographic BFS, perfect elimination orders, chordless
cycle witnesses and clique trees
"""
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from src.errors import GraphValidationError
from src.graphs.graph import Graph, VertexSet, bit, connected_components, members


class ChordalityResult(NamedTuple):
    chordal: bool
    peo: Optional[List[int]]
    hole: Optional[List[int]]  # chordless cycle, length >= 4, when not chordal


def lexbfs(G: Graph) -> List[int]:
    """Lexicographic BFS visit order; the smallest id wins ties between equal labels"""
    labels: List[List[int]] = [[] for _ in range(G.n)]
    unvisited = set(range(G.n))
    order = []
    for step in range(G.n):
        v = max(unvisited, key=lambda u: (labels[u], -u))
        unvisited.remove(v)
        order.append(v)
        for u in members(G.rows[v]):
            if u in unvisited:
                labels[u].append(G.n - step)
    return order


def verify_peo(G: Graph, order: Sequence[int]) -> bool:
    """True iff order is a permutation of V whose every vertex has a clique of later neighbours"""
    if sorted(order) != list(range(G.n)):
        return False
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in range(G.n) if G.has_edge(u, v) and position[u] > position[v]]
        for i, a in enumerate(later):
            for b in later[i + 1:]:
                if not G.has_edge(a, b):
                    return False
    return True


def _path_avoiding(G: Graph, u: int, w: int, blocked: int) -> Optional[List[int]]:
    """Shortest u-w path whose inner vertices avoid the blocked mask"""
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in members(G.rows[x]):
            if y in parent or (y != w and blocked >> y & 1):
                continue
            parent[y] = x
            if y == w:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(y)
    return None


def _hole_through(G: Graph, v: int, u: int, w: int) -> Optional[List[int]]:
    """Chordless cycle v-u-...-w-v for nonadjacent neighbours u, w of v"""
    blocked = (G.rows[v] | bit(v)) & ~bit(u) & ~bit(w)
    path = _path_avoiding(G, u, w, blocked)
    return [v] + path if path else None


def _find_hole(G: Graph, v: int, u: int, w: int) -> List[int]:
    hole = _hole_through(G, v, u, w)
    if hole:
        return hole
    for x in range(G.n):
        neighbours = list(members(G.rows[x]))
        for i, a in enumerate(neighbours):
            for b in neighbours[i + 1:]:
                if not G.has_edge(a, b):
                    hole = _hole_through(G, x, a, b)
                    if hole:
                        return hole
    raise RuntimeError("elimination order failed but no chordless cycle was found")


def is_chordal(G: Graph) -> ChordalityResult:
    """
    Test the reversed LexBFS order for perfect elimination

    For each vertex v, its earliest later neighbour p must be adjacent to
    every other later neighbour of v. A failure yields nonadjacent neighbours
    u, w of v, closed into a chordless cycle by a shortest u-w path that
    avoids the rest of N[v].
    """
    peo = lexbfs(G)[::-1]
    position = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = sorted((u for u in members(G.rows[v]) if position[u] > position[v]),
                       key=position.__getitem__)
        if not later:
            continue
        p = later[0]
        for w in later[1:]:
            if not G.has_edge(p, w):
                return ChordalityResult(False, None, _find_hole(G, v, p, w))
    return ChordalityResult(True, peo, None)


# ========================================================================
# CLIQUE TREES
# ========================================================================

@dataclass(frozen=True)
class CliqueTree:
    """
    Maximal cliques of a chordal graph joined by tree edges; for a
    disconnected host the edges form a forest, one tree per component

    Args:
        cliques: Maximal cliques, sorted by their sorted vertex tuples
        tree_edges: Pairs (i, j), i < j, of clique indices
    """
    cliques: Tuple[VertexSet, ...]
    tree_edges: Tuple[Tuple[int, int], ...]

    def neighbors(self, i: int) -> List[int]:
        return sorted({b for a, b in self.tree_edges if a == i} | {a for a, b in self.tree_edges if b == i})

    def bfs_order(self, root: int) -> List[int]:
        order, seen = [root], {root}
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in self.neighbors(i):
                if j not in seen:
                    seen.add(j)
                    order.append(j)
                    queue.append(j)
        return order

    def components_without(self, i: int) -> List[List[int]]:
        """Clique-index components of the tree after deleting node i, by smallest index"""
        remaining = set(range(len(self.cliques))) - {i}
        components = []
        while remaining:
            start = min(remaining)
            component, queue = {start}, deque([start])
            while queue:
                a = queue.popleft()
                for b in self.neighbors(a):
                    if b in remaining and b not in component:
                        component.add(b)
                        queue.append(b)
            remaining -= component
            components.append(sorted(component))
        return components

    def has_induced_subtree_property(self) -> bool:
        vertices = set().union(*self.cliques) if self.cliques else set()
        for v in vertices:
            holding = {i for i, c in enumerate(self.cliques) if v in c}
            start = min(holding)
            reached, queue = {start}, deque([start])
            while queue:
                a = queue.popleft()
                for b in self.neighbors(a):
                    if b in holding and b not in reached:
                        reached.add(b)
                        queue.append(b)
            if reached != holding:
                return False
        return True

    def to_json(self) -> Dict[str, list]:
        return {"cliques": [sorted(c) for c in self.cliques], "tree_edges": [list(e) for e in self.tree_edges]}


def maximal_cliques_from_peo(G: Graph, peo: Sequence[int]) -> List[VertexSet]:
    position = {v: i for i, v in enumerate(peo)}
    candidates = []
    for v in peo:
        candidates.append(frozenset([v]) | {u for u in members(G.rows[v]) if position[u] > position[v]})
    maximal = {c for c in candidates if not any(c < other for other in candidates)}
    return sorted(maximal, key=lambda c: tuple(sorted(c)))


def clique_forest(G: Graph) -> CliqueTree:
    """
    Clique forest of a chordal graph: maximum-weight spanning forest of the
    clique intersection graph, weights being intersection sizes

    Raises:
        GraphValidationError: G is not chordal; the certificate is the hole
    """
    result = is_chordal(G)
    if not result.chordal:
        raise GraphValidationError(f"graph is not chordal: chordless cycle {result.hole}",
                                   certificate=result.hole)
    cliques = maximal_cliques_from_peo(G, result.peo)

    intersection = nx.Graph()
    intersection.add_nodes_from(range(len(cliques)))
    for i, a in enumerate(cliques):
        for j in range(i + 1, len(cliques)):
            shared = len(a & cliques[j])
            if shared:
                intersection.add_edge(i, j, weight=shared)
    spanning = nx.maximum_spanning_tree(intersection, algorithm="kruskal")
    tree = CliqueTree(tuple(cliques), tuple(sorted((min(a, b), max(a, b)) for a, b in spanning.edges())))

    if not tree.has_induced_subtree_property():
        raise RuntimeError("clique tree lost the induced-subtree property")
    return tree


def clique_tree(G: Graph) -> CliqueTree:
    """
    Clique tree of a connected chordal graph

    Raises:
        GraphValidationError: G is empty, disconnected or not chordal
    """
    if G.n == 0:
        raise GraphValidationError("clique_tree needs at least one vertex")
    if len(connected_components(G)) > 1:
        raise GraphValidationError("clique_tree needs a connected graph; use clique_forest")
    return clique_forest(G)
