"""
t-shallow minor models and their enumeration

A model is a family of disjoint connected branch sets, each with a center
whose eccentricity inside its set is at most t. Vertices outside every
branch set are deleted; contracting every set gives the minor.
"""
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Tuple

sys.path.append(str(Path(__file__).resolve().parent.parent.parent))

from src.errors import GraphValidationError
from src.graphs.graph import (
    Graph, VertexSet, bfs_distances, bit, check_vertex_set, mask_of, members, lowest,
    radius_center_of_mask
)
from src.limits import DEFAULT_CAPS, SearchCaps


@dataclass(frozen=True)
class MinorModel:
    """
    Certificate of a t-shallow minor

    Args:
        host: The graph the minor is taken from
        t: Depth
        branch_sets: Disjoint vertex sets, sorted by their smallest vertex
        centers: One center per branch set
    """
    host: Graph = field(repr=False, compare=False)
    t: int
    branch_sets: Tuple[VertexSet, ...]
    centers: Tuple[int, ...]

    @classmethod
    def from_branch_sets(cls, host: Graph, t: int, branch_sets: Iterable[Iterable[int]]) -> "MinorModel":
        """Model whose centers are the smallest-id centers of minimum radius"""
        sets = sorted((check_vertex_set(host, s) for s in branch_sets), key=lambda s: min(s) if s else -1)
        centers = []
        for s in sets:
            if not s:
                raise GraphValidationError("branch sets must be nonempty")
            _, center = radius_center_of_mask(host.rows, mask_of(s))
            centers.append(center if center is not None else min(s))
        return cls(host, t, tuple(sets), tuple(centers))

    @classmethod
    def identity(cls, host: Graph, t: int = 0) -> "MinorModel":
        """Every vertex its own branch set: the minor is the host itself"""
        return cls(host, t, tuple(frozenset([v]) for v in range(host.n)), tuple(range(host.n)))

    def validate(self) -> "MinorModel":
        """
        Raises:
            GraphValidationError: naming the first violated invariant
        """
        if self.t < 0:
            raise GraphValidationError(f"depth must be nonnegative, got {self.t}")
        if len(self.centers) != len(self.branch_sets):
            raise GraphValidationError("a model needs exactly one center per branch set")
        used = 0
        for i, (s, c) in enumerate(zip(self.branch_sets, self.centers)):
            if not s:
                raise GraphValidationError(f"branch set {i} is empty")
            mask = mask_of(check_vertex_set(self.host, s))
            if mask & used:
                raise GraphValidationError(f"branch set {i} is not disjoint from the earlier sets")
            used |= mask
            if c not in s:
                raise GraphValidationError(f"center {c} does not lie in branch set {i}")
            distances = bfs_distances(self.host.rows, c, mask)
            if len(distances) < len(s):
                raise GraphValidationError(f"branch set {i} is not connected")
            if max(distances.values()) > self.t:
                raise GraphValidationError(
                    f"branch set {i} has eccentricity {max(distances.values())} from center {c}, "
                    f"above depth {self.t}"
                )
        return self

    def vertices(self) -> VertexSet:
        return frozenset().union(*self.branch_sets)

    def sort_key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(s)) for s in self.branch_sets)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "branch_sets": [sorted(s) for s in self.branch_sets],
            "centers": list(self.centers),
        }


def quotient(model: MinorModel, validate: bool = True) -> Graph:
    """
    Contract every branch set; vertex i of the result is branch set i

    Raises:
        GraphValidationError: the model is invalid (only when validate is set)
    """
    if validate:
        model.validate()
    masks = [mask_of(s) for s in model.branch_sets]
    reach = []
    for mask in masks:
        r = 0
        for v in members(mask):
            r |= model.host.rows[v]
        reach.append(r)
    rows = []
    for i, r in enumerate(reach):
        row = 0
        for j, mask in enumerate(masks):
            if i != j and r & mask:
                row |= bit(j)
        rows.append(row)
    return Graph(len(masks), tuple(rows))


# ========================================================================
# ENUMERATION
# ========================================================================

class ModelStream:
    """
    Every t-shallow minor model of G, once per branch-set family

    The search settles the smallest undecided vertex v: first every branch
    set with smallest element v (connected, within distance t of a common
    center), then v deleted. At t = 0 this is exactly the nonempty vertex
    subsets as singleton families.

    After iteration, `exhaustive` is True iff no model was cut off by a cap.
    """

    def __init__(self, G: Graph, t: int, caps: Optional[SearchCaps] = None, self_check: bool = False):
        if t < 0:
            raise GraphValidationError(f"depth must be nonnegative, got {t}")
        self.G = G
        self.t = t
        self.caps = caps or DEFAULT_CAPS
        self.self_check = self_check
        self.emitted = 0
        self.elapsed = 0.0
        self.exhaustive = False
        self.finished = False
        self._balls = [self._ball(v) for v in range(G.n)]

    def _ball(self, v: int) -> int:
        return mask_of(u for u, d in bfs_distances(self.G.rows, v, self.G.full_mask).items() if d <= self.t)

    def branch_sets_from(self, v: int, pool: int) -> Iterator[int]:
        """Connected subsets of pool containing v that have radius <= t, as masks"""
        rows = self.G.rows
        if self.t == 0:
            yield bit(v)
            return

        def grow(S: int, frontier: int, banned: int, centers: int):
            radius, _ = radius_center_of_mask(rows, S)
            if radius <= self.t:
                yield S
            while frontier:
                w = lowest(frontier)
                frontier &= ~bit(w)
                narrowed = centers & self._balls[w]
                if narrowed:
                    grown = S | bit(w)
                    yield from grow(grown, (frontier | rows[w]) & pool & ~grown & ~banned,
                                    banned, narrowed)
                banned |= bit(w)

        yield from grow(bit(v), rows[v] & pool, 0, self._balls[v])

    def _families(self) -> Iterator[List[int]]:
        chosen: List[int] = []

        def settle(undecided: int):
            if not undecided:
                if chosen:
                    yield chosen[:]
                return
            v = lowest(undecided)
            for S in self.branch_sets_from(v, undecided):
                chosen.append(S)
                yield from settle(undecided & ~S)
                chosen.pop()
            yield from settle(undecided & ~bit(v))

        yield from settle(self.G.full_mask)

    def _model(self, family: List[int]) -> MinorModel:
        centers = tuple(radius_center_of_mask(self.G.rows, S)[1] for S in family)
        model = MinorModel(self.G, self.t, tuple(frozenset(members(S)) for S in family), centers)
        if self.self_check:
            model.validate()
        return model

    def __iter__(self) -> Iterator[MinorModel]:
        start = time.perf_counter()
        max_models, max_seconds = self.caps.max_models, self.caps.max_seconds
        for family in self._families():
            self.elapsed = time.perf_counter() - start
            if self.emitted >= max_models or (self.emitted and max_seconds is not None and self.elapsed > max_seconds):
                self.exhaustive = False
                self.finished = True
                return
            self.emitted += 1
            yield self._model(family)
        self.elapsed = time.perf_counter() - start
        self.exhaustive = True
        self.finished = True


def enumerate_models(G: Graph, t: int, caps: Optional[SearchCaps] = None) -> ModelStream:
    """Stream of every t-shallow minor model of G; see ModelStream"""
    return ModelStream(G, t, caps)


if __name__ == "__main__":
    P2 = Graph.from_edges(2, [(0, 1)])
    for depth in (0, 1):
        stream = enumerate_models(P2, depth)
        models = [m.to_json()["branch_sets"] for m in stream]
        print(f"P_2, t={depth}: {len(models)} models, exhaustive={stream.exhaustive}")
        for sets in models:
            print(f"  {sets}")
