"""
Edge-list and DIMACS text formats

Edge list: one "u v" pair per line, whitespace separated, '#' starts a comment.
A line holding a single id declares that vertex (used for isolated vertices at
the top of the range). The vertex count is the largest id plus one.

DIMACS: "c" comments, one "p edge N M" (or "p col N M") header, "e u v" lines
with 1-based ids. Read only.
"""
from typing import Set, Tuple

from src.errors import GraphParseError, GraphValidationError
from src.graphs.graph import Graph

EDGE_LIST = "edge-list"
DIMACS = "dimacs"
FORMATS = (EDGE_LIST, DIMACS)


def _vertex_id(token: str, line_number: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphParseError(f"expected a vertex id, got {token!r}", line_number) from None
    if value < 0:
        raise GraphParseError(f"vertex ids are nonnegative, got {value}", line_number)
    return value


def _parse_edge_list(text: str) -> Graph:
    edges: Set[Tuple[int, int]] = set()
    top = -1
    for line_number, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) > 2:
            raise GraphParseError(f"expected 'u v' or a single vertex id, got {len(tokens)} fields",
                                  line_number)
        ids = [_vertex_id(token, line_number) for token in tokens]
        top = max(top, *ids)
        if len(ids) == 2:
            u, v = ids
            if u == v:
                raise GraphValidationError(f"line {line_number}: self-loop at vertex {u}")
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(top + 1, sorted(edges))


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges: Set[Tuple[int, int]] = set()
    line_number = 0
    for line_number, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise GraphParseError("second problem line", line_number)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphParseError("expected 'p edge N M'", line_number)
            n = _vertex_id(tokens[2], line_number)
            _vertex_id(tokens[3], line_number)
        elif kind == "e":
            if n is None:
                raise GraphParseError("edge line before the problem line", line_number)
            if len(tokens) != 3:
                raise GraphParseError("expected 'e u v'", line_number)
            u, v = (_vertex_id(token, line_number) for token in tokens[1:])
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"edge {u}-{v} leaves the vertex range 1..{n}", line_number)
            if u == v:
                raise GraphValidationError(f"line {line_number}: self-loop at vertex {u}")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise GraphParseError(f"unknown line type {kind!r}", line_number)
    if n is None:
        raise GraphParseError("missing 'p edge N M' problem line", max(line_number, 1))
    return Graph.from_edges(n, sorted(edges))


def parse_graph(text: str, fmt: str = EDGE_LIST) -> Graph:
    """
    Parse graph text

    Args:
        text: File contents
        fmt: "edge-list" or "dimacs"

    Raises:
        GraphParseError: malformed line (carries the line number)
        GraphValidationError: self-loop
    """
    if fmt == EDGE_LIST:
        return _parse_edge_list(text)
    if fmt == DIMACS:
        return _parse_dimacs(text)
    raise GraphValidationError(f"unknown graph format {fmt!r}; expected one of {FORMATS}")


def serialize_graph(G: Graph) -> str:
    """Canonical edge list: sorted u<v pairs, byte-stable"""
    edges = G.edges()
    lines = [f"# n={G.n} m={len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    top = max((v for _, v in edges), default=-1)
    if G.n and top < G.n - 1:
        lines.append(str(G.n - 1))
    return "\n".join(lines) + "\n"
