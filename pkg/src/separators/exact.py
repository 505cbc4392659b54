"""
Exact minimum balanced clique separator of a fixed cover
"""
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Tuple

from config.settings import EXACT_SEPARATOR_CAP
from src.cover.clique_cover import CliqueCover, quotient_graph
from src.errors import CapacityError
from src.graphs.graph import Graph, connected_components, mask_of, members
from src.separators.separation import Separation


class SeparatorSearch(NamedTuple):
    size: Optional[int]  # None when infeasible
    best: Optional[Separation]


def _pack(sizes: List[int], limit: int) -> Optional[Tuple[int, ...]]:
    """
    Components for side A: both sides nonempty and at most `limit`, the larger
    side as small as possible, then A as small as possible
    """
    total = sum(sizes)
    reachable: Dict[int, Tuple[int, ...]] = {0: ()}
    for i, size in enumerate(sizes):
        for value, chosen in list(reachable.items()):
            if value + size not in reachable:
                reachable[value + size] = chosen + (i,)
    feasible = [a for a in reachable if 1 <= a <= limit and 1 <= total - a <= limit]
    if not feasible:
        return None
    a = min(feasible, key=lambda value: (max(value, total - value), value))
    return reachable[a]


def min_balanced_clique_separator(G: Graph, cover: CliqueCover,
                                  cap: Optional[int] = None) -> SeparatorSearch:
    """
    Fewest blocks whose removal splits the rest into two nonempty sides with
    no edge between them, each side holding at most 2|C|/3 blocks

    Separator sizes are tried in increasing order and, within a size, block
    subsets in lexicographic order, so the first hit is optimal. Whether the
    remaining blocks can be split is a subset-sum over the sizes of the
    components they form in the clique cover graph.

    Raises:
        CapacityError: the cover has more blocks than the cap (EXACT_SEPARATOR_CAP by default)
    """
    cap = EXACT_SEPARATOR_CAP if cap is None else cap
    k = len(cover)
    if k > cap:
        raise CapacityError("min_balanced_clique_separator", k, cap)
    if k < 3:
        return SeparatorSearch(None, None)

    Q = quotient_graph(G, cover).graph
    limit = 2 * k // 3
    for size in range(0, k - 1):
        for S in combinations(range(k), size):
            rest = Q.full_mask & ~mask_of(S)
            components = connected_components(Q, within=rest)
            if len(components) < 2:
                continue
            chosen = _pack([c.bit_count() for c in components], limit)
            if chosen is None:
                continue
            side_a = mask_of(v for i in chosen for v in members(components[i]))
            return SeparatorSearch(size, Separation(
                cover,
                A=tuple(members(side_a)),
                S=tuple(S),
                B=tuple(members(rest & ~side_a)),
                widths={"exact": size},
            ))
    return SeparatorSearch(None, None)
