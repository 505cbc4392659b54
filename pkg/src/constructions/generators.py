"""
Graph generators

The two lower-bound constructions come with the minor model that contracts
them; every random family is a pure function of its parameters and seed.
"""
import math
from itertools import combinations
from typing import Iterator, List, Tuple

from config.settings import CHORDAL_DENSITY, COMPLEMENT_BIPARTITE_DENSITY, DEFAULT_SEED
from src.constructions.rng import XorShift64Star
from src.errors import GraphValidationError
from src.graphs.graph import Graph, complement
from src.minors.models import MinorModel


def _require(condition: bool, message: str):
    if not condition:
        raise GraphValidationError(message)


def _check_probability(name: str, p: float):
    _require(0.0 <= p <= 1.0, f"{name} must lie in [0, 1], got {p}")


# ========================================================================
# LOWER-BOUND CONSTRUCTIONS
# ========================================================================

def gen_obs2(n: int, t: int) -> Tuple[Graph, MinorModel]:
    """
    Path x_1..x_n with a pendant s_i on every x_i; contracting x_1..x_t gives
    a minor with an induced star on t + 1 leaves while CCW(G) stays 1

    Vertex ids: x_i is i - 1, s_i is n + i - 1.
    """
    _require(n > t >= 1, f"gen_obs2 needs n > t >= 1, got n={n}, t={t}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, n + i) for i in range(n)]
    labels = [f"x{i + 1}" for i in range(n)] + [f"s{i + 1}" for i in range(n)]
    G = Graph.from_edges(2 * n, edges, labels)

    contracted = frozenset(range(t))
    branch_sets = [contracted] + [frozenset([v]) for v in range(t, 2 * n)]
    centers = [math.ceil(t / 2) - 1] + list(range(t, 2 * n))
    return G, MinorModel(G, t, tuple(branch_sets), tuple(centers))


def gen_obs3(n: int, t: int) -> Tuple[Graph, MinorModel]:
    """
    Independent set A of size t + 1, paths B_1..B_t on t + 1 vertices and a
    cycle B_{t+1} on n vertices, each joined to A by a matching saturating A.
    G has no induced K_{2,2}; contracting every B_i (the cycle only along its
    first t + 1 vertices) yields an induced K_{t+1,t+1}.

    Vertex ids: A is 0..t, B_i occupies the next t + 1 ids per path, the cycle
    comes last. Total (t + 1) + t(t + 1) + n vertices.
    """
    _require(t >= 1, f"gen_obs3 needs t >= 1, got {t}")
    _require(n >= 5, f"gen_obs3 needs n >= 5 so the cycle has no 4-cycle, got {n}")
    _require(n >= t + 1, f"gen_obs3 needs n >= t + 1 to match A into the cycle, got n={n}, t={t}")
    size = t + 1
    paths = [[size + i * size + j for j in range(size)] for i in range(t)]
    base = size + t * size
    cycle = [base + j for j in range(n)]

    edges = []
    for path in paths:
        edges += [(path[j], path[j + 1]) for j in range(size - 1)]
        edges += [(j, path[j]) for j in range(size)]
    edges += [(cycle[j], cycle[(j + 1) % n]) for j in range(n)]
    edges += [(j, cycle[j]) for j in range(size)]

    labels = [f"a{j}" for j in range(size)]
    labels += [f"B{i + 1}[{j}]" for i in range(t) for j in range(size)]
    labels += [f"c{j}" for j in range(n)]
    G = Graph.from_edges(base + n, edges, labels)

    contracted = [frozenset(path) for path in paths] + [frozenset(cycle[:size])]
    singles = [frozenset([v]) for v in list(range(size)) + cycle[size:]]
    branch_sets = sorted(contracted + singles, key=min)
    centers = []
    for s in branch_sets:
        ordered = sorted(s)
        centers.append(ordered[t // 2] if len(ordered) > 1 else ordered[0])
    return G, MinorModel(G, t, tuple(branch_sets), tuple(centers))


# ========================================================================
# NAMED FAMILIES
# ========================================================================

def complete(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, f"complete_bipartite needs both sides >= 1, got {a}, {b}")
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(s: int) -> Graph:
    """Center 0 with leaves 1..s"""
    _require(s >= 1, f"star needs at least one leaf, got {s}")
    return Graph.from_edges(s + 1, [(0, leaf) for leaf in range(1, s + 1)])


def edgeless(n: int) -> Graph:
    _require(n >= 0, f"edgeless needs n >= 0, got {n}")
    return Graph.edgeless(n)


def complement_bipartite(n: int, seed: int = DEFAULT_SEED,
                         density: float = COMPLEMENT_BIPARTITE_DENSITY) -> Graph:
    """Complement of a random bipartite graph with both classes of size n (cliques 0..n-1 and n..2n-1)"""
    _require(n >= 1, f"complement_bipartite needs n >= 1, got {n}")
    _check_probability("density", density)
    rng = XorShift64Star(seed)
    edges = [(u, n + v) for u in range(n) for v in range(n) if rng.bernoulli(density)]
    return complement(Graph.from_edges(2 * n, edges))


NAMED_FAMILIES = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "path": path,
    "cycle": cycle,
    "star": star,
    "edgeless": edgeless,
    "complement_bipartite": complement_bipartite,
}


def gen_named(family: str, **params) -> Graph:
    """
    Args:
        family: One of NAMED_FAMILIES
        params: Keyword parameters of that family (n, a, b, s, seed, density)

    Raises:
        GraphValidationError: unknown family or bad parameters
    """
    if family not in NAMED_FAMILIES:
        raise GraphValidationError(f"unknown family {family!r}; expected one of {sorted(NAMED_FAMILIES)}")
    try:
        return NAMED_FAMILIES[family](**params)
    except TypeError as e:
        raise GraphValidationError(f"bad parameters for {family}: {e}") from None


# ========================================================================
# RANDOM FAMILIES
# ========================================================================

def gen_random_graph(n: int, p: float, seed: int = DEFAULT_SEED) -> Graph:
    """G(n, p), one draw per pair u < v in lexicographic order"""
    _require(n >= 0, f"n must be nonnegative, got {n}")
    _check_probability("p", p)
    rng = XorShift64Star(seed)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.bernoulli(p)])


def gen_random_incomparability(n: int, density: float, seed: int = DEFAULT_SEED) -> Graph:
    """
    Complement of the comparability graph of a random partial order: a
    shuffled linear order, each of its pairs kept with probability `density`,
    then transitively closed
    """
    _require(n >= 0, f"n must be nonnegative, got {n}")
    _check_probability("density", density)
    rng = XorShift64Star(seed)
    order = rng.permutation(n)
    below = [[False] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        if rng.bernoulli(density):
            below[order[i]][order[j]] = True
    for k in range(n):
        for i in range(n):
            if below[i][k]:
                for j in range(n):
                    if below[k][j]:
                        below[i][j] = True
    comparable = [(u, v) for u, v in combinations(range(n), 2) if below[u][v] or below[v][u]]
    return complement(Graph.from_edges(n, comparable))


def gen_random_chordal(n: int, seed: int = DEFAULT_SEED, density: float = CHORDAL_DENSITY) -> Graph:
    """G(n, density) filled in along a shuffled elimination order"""
    _require(n >= 1, f"gen_random_chordal needs n >= 1, got {n}")
    _check_probability("density", density)
    rng = XorShift64Star(seed)
    order = rng.permutation(n)
    adjacency = [set() for _ in range(n)]
    for u, v in combinations(range(n), 2):
        if rng.bernoulli(density):
            adjacency[u].add(v)
            adjacency[v].add(u)
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = sorted(u for u in adjacency[v] if position[u] > position[v])
        for a, b in combinations(later, 2):
            adjacency[a].add(b)
            adjacency[b].add(a)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in adjacency[u] if u < v])


def gen_random_interval(n: int, seed: int = DEFAULT_SEED) -> Graph:
    """Intersection graph of n random closed intervals [l, l + d], l < 2n, d < n"""
    _require(n >= 1, f"gen_random_interval needs n >= 1, got {n}")
    rng = XorShift64Star(seed)
    intervals = []
    for _ in range(n):
        left = rng.randbelow(2 * n)
        intervals.append((left, left + rng.randbelow(n)))
    edges = [(u, v) for u, v in combinations(range(n), 2)
             if intervals[u][0] <= intervals[v][1] and intervals[v][0] <= intervals[u][1]]
    labels = [f"[{left},{right}]" for left, right in intervals]
    return Graph.from_edges(n, edges, labels)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labelled graphs on n vertices; bit i of the index selects pair i"""
    pairs: List[Tuple[int, int]] = list(combinations(range(n), 2))
    for index in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pair for i, pair in enumerate(pairs) if index >> i & 1])
