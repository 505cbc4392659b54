"""
Comparability recognition by implication classes

Edges are oriented one implication class at a time, each class taken in the
graph of the still-unoriented edges. A class that contains some arc together
with its reverse proves that no transitive orientation exists; the forcing
chain leading to the two arcs is the obstruction.
"""
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple

from config.settings import ORIENTATION_CAP
from src.errors import CapacityError
from src.graphs.graph import Graph, bit, complement, members

Arc = Tuple[int, int]


@dataclass(frozen=True)
class Orientation:
    """One direction per host edge; arc (a, b) means a -> b"""
    host: Graph = field(repr=False, compare=False)
    arcs: FrozenSet[Arc]

    def to_json(self) -> List[List[int]]:
        return [list(arc) for arc in sorted(self.arcs)]


class OrientationResult(NamedTuple):
    found: bool
    orientation: Optional[Orientation]
    obstruction: Optional[List[Arc]]  # forcing chain ending in an arc and its reverse


def verify_transitive(G: Graph, orientation: Orientation) -> List[str]:
    """
    Exhaustive check of an orientation against its host

    Returns:
        Violations found (empty when the orientation is transitive)
    """
    problems = []
    arcs = set(orientation.arcs)
    for a, b in arcs:
        if not (0 <= a < G.n and 0 <= b < G.n) or not G.has_edge(a, b):
            problems.append(f"arc {a}->{b} is not a host edge")
        if (b, a) in arcs:
            problems.append(f"edge {a}-{b} is oriented both ways")
    for u, v in G.edges():
        if (u, v) not in arcs and (v, u) not in arcs:
            problems.append(f"edge {u}-{v} is not oriented")
    successors: Dict[int, set] = {}
    for a, b in arcs:
        successors.setdefault(a, set()).add(b)
    for a in sorted(successors):
        for b in sorted(successors[a]):
            for c in sorted(successors.get(b, ())):
                if c not in successors[a]:
                    problems.append(f"{a}->{b}->{c} without {a}->{c}")
    return problems


def _forced_by(rows: List[int], arc: Arc):
    """Arcs forced by `arc` in the graph whose adjacency is `rows`"""
    a, b = arc
    for c in members(rows[a] & ~rows[b] & ~bit(b)):
        yield (a, c)
    for c in members(rows[b] & ~rows[a] & ~bit(a)):
        yield (c, b)


def _chain(parent: Dict[Arc, Optional[Arc]], arc: Arc) -> List[Arc]:
    chain = [arc]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    return chain[::-1]


def transitive_orientation(G: Graph, cap: Optional[int] = None) -> OrientationResult:
    """
    Transitive orientation of G, or the forcing chain that rules one out

    The orientation returned has passed verify_transitive.

    Raises:
        CapacityError: G.n exceeds the cap (ORIENTATION_CAP by default)
    """
    cap = ORIENTATION_CAP if cap is None else cap
    if G.n > cap:
        raise CapacityError("transitive_orientation", G.n, cap)

    rows = list(G.rows)
    oriented = set()
    while True:
        seed = next(((u, v) for u in range(G.n) for v in members(rows[u]) if u < v), None)
        if seed is None:
            break
        parent: Dict[Arc, Optional[Arc]] = {seed: None}
        queue = deque([seed])
        while queue:
            arc = queue.popleft()
            for forced in _forced_by(rows, arc):
                if forced in parent:
                    continue
                parent[forced] = arc
                reverse = (forced[1], forced[0])
                if reverse in parent:
                    return OrientationResult(False, None, _chain(parent, reverse) + _chain(parent, forced))
                queue.append(forced)
        for a, b in parent:
            oriented.add((a, b))
            rows[a] &= ~bit(b)
            rows[b] &= ~bit(a)

    orientation = Orientation(G, frozenset(oriented))
    problems = verify_transitive(G, orientation)
    if problems:
        raise RuntimeError(f"orientation failed its transitivity check: {problems[0]}")
    return OrientationResult(True, orientation, None)


def is_comparability(G: Graph, cap: Optional[int] = None) -> bool:
    return transitive_orientation(G, cap).found


def is_incomparability(G: Graph, cap: Optional[int] = None) -> bool:
    """True iff the complement of G has a transitive orientation"""
    return transitive_orientation(complement(G), cap).found
