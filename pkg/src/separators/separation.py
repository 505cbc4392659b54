"""
Measure-balanced separations of a clique cover
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.cover.clique_cover import CliqueCover
from src.graphs.graph import Graph


@dataclass(frozen=True)
class Separation:
    """
    Ordered triple (A, S, B) of block-index lists over a clique cover

    Balance is counted in cliques: 3|A| <= 2|C| and 3|B| <= 2|C|.
    """
    cover: CliqueCover = field(repr=False)
    A: Tuple[int, ...]
    S: Tuple[int, ...]
    B: Tuple[int, ...]
    widths: Dict[str, Optional[int]] = field(default_factory=dict, compare=False)

    def vertices(self, side: str) -> List[int]:
        """Host vertices covered by side "A", "S" or "B", ascending"""
        indices = {"A": self.A, "S": self.S, "B": self.B}[side]
        return sorted(v for i in indices for v in self.cover.blocks[i])

    def to_json(self) -> dict:
        return {
            "A": list(self.A),
            "S": list(self.S),
            "B": list(self.B),
            "cover": self.cover.to_json(),
            "widths": dict(self.widths),
            "vertex_counts": {side: len(self.vertices(side)) for side in ("A", "S", "B")},
        }


def verify_separation(G: Graph, separation: Separation) -> List[str]:
    """
    Recheck a separation from scratch against the host adjacency

    Returns:
        Violations found; an empty list means the separation is sound
    """
    problems = []
    blocks = [set(block) for block in separation.cover.blocks]
    k = len(blocks)

    covered = [v for block in blocks for v in block]
    if sorted(covered) != list(range(G.n)):
        problems.append("cover blocks do not partition the host vertices")
    for i, block in enumerate(blocks):
        if any(not G.has_edge(u, v) for u in block for v in block if u < v):
            problems.append(f"block {i} is not a clique")

    indices = list(separation.A) + list(separation.S) + list(separation.B)
    if sorted(indices) != list(range(k)):
        problems.append("A, S and B do not partition the block indices")

    side_a = {v for i in separation.A if 0 <= i < k for v in blocks[i]}
    side_b = {v for i in separation.B if 0 <= i < k for v in blocks[i]}
    crossing = sorted((a, b) for a in side_a for b in side_b if G.has_edge(a, b))
    if crossing:
        problems.append(f"{len(crossing)} edge(s) join A and B, first {crossing[0]}")

    for name, side in (("A", separation.A), ("B", separation.B)):
        if 3 * len(side) > 2 * k:
            problems.append(f"|{name}| = {len(side)} exceeds 2|C|/3 with |C| = {k}")
    return problems
