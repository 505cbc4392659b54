"""
Constructive separators: cutting an ordered cover along its arrangement,
and the centroid clique of a chordal graph's clique tree
"""
from typing import List

from src.cover.clique_cover import CliqueCover, max_edge_width
from src.errors import DegenerateInputError, GraphValidationError
from src.graphs.graph import Graph, connected_components
from src.separators.separation import Separation
from src.structure.chordal import CliqueTree, clique_tree, is_chordal


def ccw_separator(G: Graph, cover: CliqueCover) -> Separation:
    """
    Remove w consecutive blocks, w being the widest edge of the arrangement

    No edge spans more than w positions, so the blocks before the removed
    window never touch the blocks after it. The window start m minimizes
    max(|A|, |B|), smallest m on ties.

    Raises:
        DegenerateInputError: fewer than 3 blocks
    """
    if cover.host != G:
        cover = CliqueCover(G, cover.blocks)
    k = len(cover)
    if k < 3:
        raise DegenerateInputError(f"separator meaningless below 3 cliques (cover has {k})")
    w = max_edge_width(cover)
    m = min(range(k - w + 1), key=lambda start: (max(start, k - start - w), start))
    return Separation(
        cover,
        A=tuple(range(m)),
        S=tuple(range(m, m + w)),
        B=tuple(range(m + w, k)),
        widths={"w": w},
    )


def tree_centroid(tree: CliqueTree) -> int:
    """Node whose removal leaves the smallest largest component; smallest index on ties"""
    return min(range(len(tree.cliques)),
               key=lambda i: (max((len(c) for c in tree.components_without(i)), default=0), i))


def _split_components(components: List[List[int]]):
    """Largest component first onto the lighter side (A on ties)"""
    side_a, side_b = [], []
    for component in sorted(components, key=lambda c: (-len(c), c[0])):
        (side_a if len(side_a) <= len(side_b) else side_b).extend(component)
    return sorted(side_a), sorted(side_b)


def chordal_separator(G: Graph) -> Separation:
    """
    One clique separates a chordal graph: the centroid of its clique tree

    Every other clique is claimed in BFS order from the centroid, keeping only
    the vertices no earlier clique took, so the reported cover is a partition.
    The tree components hanging off the centroid go to A or B whole.

    Raises:
        GraphValidationError: G is not chordal (hole as certificate) or is disconnected
        DegenerateInputError: G has a single maximal clique
    """
    result = is_chordal(G)
    if not result.chordal:
        raise GraphValidationError(f"graph is not chordal: chordless cycle {result.hole}",
                                   certificate=result.hole)
    if G.n == 0 or len(connected_components(G)) > 1:
        raise GraphValidationError("chordal_separator needs a connected graph")
    tree = clique_tree(G)
    if len(tree.cliques) < 2:
        raise DegenerateInputError("a single maximal clique has nothing to separate")

    centroid = tree_centroid(tree)
    order = tree.bfs_order(centroid)
    position = {clique: i for i, clique in enumerate(order)}
    claimed = set()
    blocks = []
    for clique in order:
        block = tree.cliques[clique] - claimed
        claimed |= block
        blocks.append(block)

    side_a, side_b = _split_components(tree.components_without(centroid))
    return Separation(
        CliqueCover(G, tuple(blocks)),
        A=tuple(sorted(position[c] for c in side_a)),
        S=(0,),
        B=tuple(sorted(position[c] for c in side_b)),
        widths={"cliques": len(tree.cliques)},
    )
