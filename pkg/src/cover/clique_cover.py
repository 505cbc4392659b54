"""
Clique covers: the clique cover number beta, the neighbourhood clique cover
number, edge widths and clique cover graphs (quotients)
"""
from dataclasses import dataclass, field
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from src.errors import GraphValidationError
from src.graphs.coloring import chromatic_number
from src.graphs.graph import (
    Graph, VertexSet, bit, closed_neighborhood, complement, induced_subgraph, mask_of, members
)


@dataclass(frozen=True)
class CliqueCover:
    """
    Ordered partition of the host's vertices into cliques

    The order of `blocks` is the linear arrangement: widths and separators
    are measured along it.
    """
    host: Graph = field(repr=False, compare=False)
    blocks: Tuple[VertexSet, ...]

    def __post_init__(self):
        blocks = tuple(frozenset(block) for block in self.blocks)
        object.__setattr__(self, "blocks", blocks)

        seen = 0
        for i, block in enumerate(blocks):
            if not block:
                raise GraphValidationError(f"block {i} of the cover is empty")
            for v in block:
                if not (isinstance(v, int) and 0 <= v < self.host.n):
                    raise GraphValidationError(f"block {i} holds {v!r}, outside [0, {self.host.n})")
            mask = mask_of(block)
            if mask & seen:
                raise GraphValidationError(f"block {i} overlaps an earlier block")
            for v in block:
                if (mask & ~bit(v)) & ~self.host.rows[v]:
                    raise GraphValidationError(f"block {i} is not a clique")
            seen |= mask
        if seen != self.host.full_mask:
            missing = sorted(members(self.host.full_mask & ~seen))
            raise GraphValidationError(f"cover misses vertices {missing}")

    @classmethod
    def singletons(cls, host: Graph, order: Optional[Sequence[int]] = None) -> "CliqueCover":
        order = range(host.n) if order is None else order
        return cls(host, tuple(frozenset([v]) for v in order))

    def __len__(self):
        return len(self.blocks)

    def positions(self) -> List[int]:
        """Block index of every host vertex"""
        where = [0] * self.host.n
        for i, block in enumerate(self.blocks):
            for v in block:
                where[v] = i
        return where

    def reordered(self, order: Sequence[int]) -> "CliqueCover":
        """Same blocks, arranged so that new position i holds old block order[i]"""
        return CliqueCover(self.host, tuple(self.blocks[i] for i in order))

    def to_json(self) -> List[List[int]]:
        return [sorted(block) for block in self.blocks]


@dataclass(frozen=True)
class QuotientGraph:
    """Clique cover graph: vertex i is block i of `origin`"""
    graph: Graph
    origin: CliqueCover = field(repr=False)


class NeighborhoodCover(NamedTuple):
    value: int
    witness: int
    cover: CliqueCover  # a cover of H_witness, in H_witness's own ids


class FirstBlockCertificate(NamedTuple):
    """A vertex a of the first block whose H_a is covered by width + 1 cliques"""
    vertex: int
    width: int
    cliques: Tuple[VertexSet, ...]  # host ids; partition N[a]


def clique_cover_number(G: Graph, cap: Optional[int] = None) -> Tuple[int, CliqueCover]:
    """
    beta(G): minimum number of disjoint cliques partitioning V(G), computed as
    the chromatic number of the complement

    Raises:
        GraphValidationError: G has no vertices
        CapacityError: past the coloring cap
    """
    if G.n == 0:
        raise GraphValidationError("clique_cover_number needs at least one vertex")
    beta, classes = chromatic_number(complement(G), cap)
    return beta, CliqueCover(G, tuple(classes))


def neighborhood_clique_cover(G: Graph, cap: Optional[int] = None) -> NeighborhoodCover:
    """
    ~beta(G) = min over x of beta(H_x); the smallest x attaining it is the witness
    """
    if G.n == 0:
        raise GraphValidationError("neighborhood_clique_cover needs at least one vertex")
    best = None
    for x in range(G.n):
        H = closed_neighborhood(G, x)
        value, cover = clique_cover_number(H, cap)
        if best is None or value < best.value:
            best = NeighborhoodCover(value, x, cover)
            if value == 1:
                break
    return best


def _as_cover_of(G: Graph, cover: CliqueCover) -> CliqueCover:
    if cover.host is G or cover.host == G:
        return cover
    return CliqueCover(G, cover.blocks)


def edge_width(cover: CliqueCover, e: Tuple[int, int]) -> int:
    """
    W(e): distance between the positions of the blocks holding e's endpoints;
    0 when both ends share a block

    Raises:
        GraphValidationError: e is not an edge of the cover's host
    """
    u, v = e
    host = cover.host
    if not (0 <= u < host.n and 0 <= v < host.n) or not host.has_edge(u, v):
        raise GraphValidationError(f"{u}-{v} is not an edge of the host graph")
    where = cover.positions()
    return abs(where[u] - where[v])


def max_edge_width(cover: CliqueCover) -> int:
    where = cover.positions()
    return max((abs(where[u] - where[v]) for u, v in cover.host.edges()), default=0)


def quotient_graph(G: Graph, cover: CliqueCover) -> QuotientGraph:
    """
    Contract every block of the cover to a single vertex

    Raises:
        GraphValidationError: the cover is not a valid clique cover of G
    """
    cover = _as_cover_of(G, cover)
    where = cover.positions()
    edges = {(min(where[u], where[v]), max(where[u], where[v]))
             for u, v in G.edges() if where[u] != where[v]}
    return QuotientGraph(Graph.from_edges(len(cover), sorted(edges)), cover)


def ordering_bandwidth(G: Graph, order: Sequence[int]) -> int:
    """Largest positional stretch of an edge under the given vertex order"""
    position = {v: i for i, v in enumerate(order)}
    return max((abs(position[u] - position[v]) for u, v in G.edges()), default=0)


def first_block_neighborhood_cover(G: Graph, cover: CliqueCover) -> FirstBlockCertificate:
    """
    Constructive form of ~beta(H) <= CCW(H) + 1

    Every edge leaving the first block points forward, so for a vertex a of
    the first block, N[a] meets only blocks 0..W where W is the largest width
    of an edge at a. Intersecting N[a] with those blocks covers H_a with at
    most W + 1 cliques. The vertex minimizing W is chosen (smallest id on ties).
    """
    cover = _as_cover_of(G, cover)
    if not cover.blocks:
        raise GraphValidationError("first_block_neighborhood_cover needs a nonempty cover")
    where = cover.positions()
    best_vertex, best_width = None, None
    for a in sorted(cover.blocks[0]):
        width = max((where[b] for b in members(G.rows[a])), default=0)
        if best_width is None or width < best_width:
            best_vertex, best_width = a, width
    closed = frozenset(members(G.rows[best_vertex])) | {best_vertex}
    cliques = tuple(closed & cover.blocks[j] for j in range(best_width + 1)
                    if closed & cover.blocks[j])
    return FirstBlockCertificate(best_vertex, best_width, cliques)


def cover_of_subgraph(G: Graph, cover: CliqueCover, S: Iterable[int]) -> Tuple[Graph, CliqueCover]:
    """Restrict an ordered cover to G[S], dropping blocks that become empty"""
    H, vertex_map = induced_subgraph(G, S)
    position = {v: i for i, v in enumerate(vertex_map)}
    blocks = [frozenset(position[v] for v in block if v in position) for block in cover.blocks]
    return H, CliqueCover(H, tuple(block for block in blocks if block))
