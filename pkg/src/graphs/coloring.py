"""
Exact graph coloring (DSATUR branch-and-bound)

This is the one coloring core of the toolkit: clique cover numbers are
chromatic numbers of complements.
"""
from typing import List, Optional, Sequence, Tuple

from config.settings import EXACT_COLORING_CAP
from src.errors import CapacityError
from src.graphs.graph import Graph, VertexSet, bit, members


def _greedy_clique_size(rows: Sequence[int], n: int) -> int:
    """Lower bound: largest clique found by greedy max-degree extension from each vertex"""
    best = 1 if n else 0
    for v in range(n):
        size = 1
        candidates = rows[v]
        while candidates:
            w = max(members(candidates), key=lambda u: ((rows[u] & candidates).bit_count(), -u))
            size += 1
            candidates &= rows[w]
        best = max(best, size)
    return best


def _pick_vertex(rows: Sequence[int], uncolored: int, classes: List[int]) -> int:
    """DSATUR choice: max saturation, then max uncolored degree, then smallest id"""
    def priority(v):
        saturation = sum(1 for mask in classes if mask & rows[v])
        return saturation, (rows[v] & uncolored).bit_count(), -v
    return max(members(uncolored), key=priority)


def _dsatur_greedy(rows: Sequence[int], n: int) -> List[int]:
    colors = [-1] * n
    classes: List[int] = []
    uncolored = (1 << n) - 1
    while uncolored:
        v = _pick_vertex(rows, uncolored, classes)
        for c, mask in enumerate(classes):
            if not mask & rows[v]:
                classes[c] |= bit(v)
                colors[v] = c
                break
        else:
            classes.append(bit(v))
            colors[v] = len(classes) - 1
        uncolored &= ~bit(v)
    return colors


def _classes_from(colors: List[int]) -> List[VertexSet]:
    groups = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    return sorted((frozenset(group) for group in groups.values()), key=min)


def chromatic_number(G: Graph, cap: Optional[int] = None) -> Tuple[int, List[VertexSet]]:
    """
    Exact chromatic number

    Args:
        G: Graph to color
        cap: Largest vertex count accepted (EXACT_COLORING_CAP by default)

    Returns:
        (k, classes): the color classes are sorted by their smallest vertex

    Raises:
        CapacityError: G.n exceeds the cap
    """
    cap = EXACT_COLORING_CAP if cap is None else cap
    if G.n > cap:
        raise CapacityError("chromatic_number", G.n, cap)
    n, rows = G.n, G.rows
    if n == 0:
        return 0, []

    best_colors = _dsatur_greedy(rows, n)
    best_k = max(best_colors) + 1
    lower = _greedy_clique_size(rows, n)
    if lower == best_k:
        return best_k, _classes_from(best_colors)

    colors = [-1] * n
    classes: List[int] = []

    def search(uncolored: int) -> bool:
        """Returns True once the lower bound is met"""
        nonlocal best_k, best_colors
        if not uncolored:
            if len(classes) < best_k:
                best_k = len(classes)
                best_colors = colors[:]
            return best_k == lower
        if len(classes) >= best_k:
            return False

        v = _pick_vertex(rows, uncolored, classes)
        rest = uncolored & ~bit(v)
        for c in range(len(classes)):
            if classes[c] & rows[v]:
                continue
            classes[c] |= bit(v)
            colors[v] = c
            done = search(rest)
            classes[c] &= ~bit(v)
            if done:
                colors[v] = -1
                return True
        if len(classes) + 1 < best_k:
            classes.append(bit(v))
            colors[v] = len(classes) - 1
            done = search(rest)
            classes.pop()
            if done:
                colors[v] = -1
                return True
        colors[v] = -1
        return False

    search(G.full_mask)
    return best_k, _classes_from(best_colors)
