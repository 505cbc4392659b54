"""
Brute-force reference answers over (n, edges)

Nothing here imports from src; every routine enumerates its search space
outright and is only meant for n <= 7.
"""
from itertools import combinations, permutations, product


def edge_set(G):
    return {frozenset(e) for e in G.edges()}


def adjacent(E, u, v):
    return frozenset((u, v)) in E


def independent(E, S):
    return all(not adjacent(E, u, v) for u, v in combinations(S, 2))


def clique(E, S):
    return all(adjacent(E, u, v) for u, v in combinations(S, 2))


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def clique_partitions(n, E):
    for partition in set_partitions(range(n)):
        if all(clique(E, block) for block in partition):
            yield partition


def mis_size(n, E, within=None):
    pool = list(range(n)) if within is None else list(within)
    for size in range(len(pool), -1, -1):
        if any(independent(E, S) for S in combinations(pool, size)):
            return size
    return 0


def clique_cover_number(n, E):
    return min(len(partition) for partition in clique_partitions(n, E))


def bandwidth(n, E):
    if not E:
        return 0
    best = n
    for order in permutations(range(n)):
        where = {v: i for i, v in enumerate(order)}
        best = min(best, max(abs(where[u] - where[v]) for u, v in map(tuple, E)))
    return best


def ccw(n, E):
    """Every clique partition in every block order"""
    if n == 0:
        return 0
    best = n
    for partition in clique_partitions(n, E):
        block_of = {v: i for i, block in enumerate(partition) for v in block}
        for order in permutations(range(len(partition))):
            where = {b: i for i, b in enumerate(order)}
            width = max((abs(where[block_of[u]] - where[block_of[v]]) for u, v in map(tuple, E)), default=0)
            best = min(best, width)
    return best


def balanced_biclique(n, E):
    """Largest p with disjoint independent p-sets completely joined; 3^n side assignments"""
    best = 0
    for assignment in product((0, 1, 2), repeat=n):
        A = [v for v in range(n) if assignment[v] == 1]
        B = [v for v in range(n) if assignment[v] == 2]
        p = min(len(A), len(B))
        if p <= best:
            continue
        if independent(E, A) and independent(E, B) and all(adjacent(E, a, b) for a in A for b in B):
            best = p
    return best


def induced_star(n, E):
    return max((mis_size(n, E, [u for u in range(n) if adjacent(E, u, v)]) for v in range(n)), default=0)


def has_hole(n, E):
    """Some vertex set of size >= 4 induces a cycle"""
    for size in range(4, n + 1):
        for S in combinations(range(n), size):
            degrees = [sum(adjacent(E, u, v) for v in S if v != u) for u in S]
            if any(d != 2 for d in degrees):
                continue
            seen, stack = {S[0]}, [S[0]]
            while stack:
                u = stack.pop()
                for v in S:
                    if v not in seen and adjacent(E, u, v):
                        seen.add(v)
                        stack.append(v)
            if len(seen) == size:
                return True
    return False


def transitively_orientable(n, E):
    edges = sorted(tuple(sorted(e)) for e in E)
    for flips in product((False, True), repeat=len(edges)):
        arcs = {(v, u) if flip else (u, v) for (u, v), flip in zip(edges, flips)}
        if all((a, c) in arcs for a, b in arcs for b2, c in arcs if b == b2):
            return True
    return False


def complement_edges(n, E):
    return {frozenset(p) for p in combinations(range(n), 2)} - E


def induced_subgraphs(n, E):
    """Every nonempty induced subgraph, relabelled in increasing vertex order"""
    found = []
    for size in range(1, n + 1):
        for S in combinations(range(n), size):
            position = {v: i for i, v in enumerate(S)}
            edges = tuple(sorted((position[u], position[v]) for u, v in combinations(S, 2) if adjacent(E, u, v)))
            found.append((size, edges))
    return sorted(found)


def _radius_at_most(E, block, t):
    for c in block:
        dist, frontier = {c: 0}, [c]
        while frontier:
            nxt = []
            for u in frontier:
                for v in block:
                    if v not in dist and adjacent(E, u, v):
                        dist[v] = dist[u] + 1
                        nxt.append(v)
            frontier = nxt
        if len(dist) == len(block) and max(dist.values()) <= t:
            return True
    return False


def shallow_families(n, E, t):
    """Every family of disjoint connected radius-<=t vertex sets, as sorted tuples"""
    found = []
    for size in range(1, n + 1):
        for U in combinations(range(n), size):
            for partition in set_partitions(U):
                if all(_radius_at_most(E, block, t) for block in partition):
                    found.append(tuple(sorted(tuple(sorted(block)) for block in partition)))
    return sorted(found)
