import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs
from src.constructions.generators import complete, cycle, edgeless, path, star
from src.cover.clique_cover import (
    CliqueCover, clique_cover_number, cover_of_subgraph, edge_width, first_block_neighborhood_cover,
    max_edge_width, neighborhood_clique_cover, ordering_bandwidth, quotient_graph
)
from src.cover.width import bandwidth_exact, ccw_exact, ccw_upper, layout_within
from src.errors import CapacityError, GraphValidationError
from src.graphs.graph import Graph, closed_neighborhood, degeneracy, induced_subgraph, members


# -- covers ------------------------------------------------------------------------

def test_cover_rejects_non_clique_block():
    with pytest.raises(GraphValidationError):
        CliqueCover(path(3), (frozenset({0, 2}), frozenset({1})))


def test_cover_rejects_missing_vertex():
    with pytest.raises(GraphValidationError):
        CliqueCover(path(3), (frozenset({0, 1}),))


def test_cover_rejects_overlap():
    with pytest.raises(GraphValidationError):
        CliqueCover(path(3), (frozenset({0, 1}), frozenset({1, 2})))


def test_clique_cover_number_examples():
    assert clique_cover_number(complete(5))[0] == 1
    assert clique_cover_number(edgeless(4))[0] == 4
    assert clique_cover_number(cycle(5))[0] == 3


def test_clique_cover_number_needs_a_vertex():
    with pytest.raises(GraphValidationError):
        clique_cover_number(edgeless(0))


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_clique_cover_number_matches_oracle(G):
    value, cover = clique_cover_number(G)
    assert len(cover) == value
    assert value == oracles.clique_cover_number(G.n, oracles.edge_set(G))


def test_neighborhood_clique_cover_examples(named):
    assert neighborhood_clique_cover(named["K5"]).value == 1
    assert neighborhood_clique_cover(named["K33"]).value == 3
    result = neighborhood_clique_cover(named["C5"])
    assert (result.value, result.witness) == (2, 0)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_local_cover_bounded_by_degree(G):
    for x in range(G.n):
        value, _ = clique_cover_number(closed_neighborhood(G, x))
        assert value <= max(G.degree(x), 1)
    assert neighborhood_clique_cover(G).value <= max(degeneracy(G)[0], 1)


# -- widths and quotients ----------------------------------------------------------

def test_edge_width_examples(named):
    P3 = named["P3"]
    singletons = CliqueCover.singletons(P3)
    assert edge_width(singletons, (1, 2)) == 1
    assert edge_width(CliqueCover(P3, ({0, 1}, {2})), (0, 1)) == 0

    K14 = named["K14"]
    cover = CliqueCover(K14, ({0, 1}, {2}, {3}, {4}))
    assert edge_width(cover, (0, 4)) == 3
    assert max_edge_width(cover) == 3


def test_edge_width_rejects_non_edge(named):
    with pytest.raises(GraphValidationError):
        edge_width(CliqueCover.singletons(named["P3"]), (0, 2))


def test_quotient_examples(named):
    Q = quotient_graph(complete(4), CliqueCover(complete(4), (range(4),))).graph
    assert (Q.n, Q.m) == (1, 0)

    C6 = named["C6"]
    Q = quotient_graph(C6, CliqueCover(C6, ({0, 1}, {2, 3}, {4, 5}))).graph
    assert Q == complete(3)

    assert quotient_graph(named["P4"], CliqueCover.singletons(named["P4"])).graph == path(4)


@settings(deadline=None)
@given(graphs())
def test_max_edge_width_is_quotient_bandwidth(G):
    _, cover = clique_cover_number(G)
    Q = quotient_graph(G, cover).graph
    assert max_edge_width(cover) == ordering_bandwidth(Q, range(Q.n))


def test_cover_of_subgraph_drops_empty_blocks(named):
    P4 = named["P4"]
    cover = CliqueCover(P4, ({0, 1}, {2, 3}))
    H, restricted = cover_of_subgraph(P4, cover, [2, 3])
    assert H.n == 2
    assert restricted.to_json() == [[0, 1]]


# -- bandwidth ---------------------------------------------------------------------

@pytest.mark.parametrize("G, expected", [(path(5), 1), (cycle(6), 2), (complete(4), 3), (edgeless(3), 0)])
def test_bandwidth_examples(G, expected):
    value, order = bandwidth_exact(G)
    assert value == expected
    assert sorted(order) == list(range(G.n))
    assert ordering_bandwidth(G, order) == value


def test_bandwidth_limit():
    assert bandwidth_exact(complete(4), limit=2) == (2, [])


def test_layout_within_rejects_too_narrow():
    assert layout_within(star(4), 1) is None
    assert layout_within(star(4), 2) is not None


def test_bandwidth_cap():
    with pytest.raises(CapacityError):
        bandwidth_exact(path(5), cap=4)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_bandwidth_matches_oracle(G):
    assert bandwidth_exact(G)[0] == oracles.bandwidth(G.n, oracles.edge_set(G))


# -- clique cover width --------------------------------------------------------------

@pytest.mark.parametrize("G, expected", [
    (complete(5), 0), (cycle(5), 2), (star(4), 2), (path(4), 1), (edgeless(3), 0), (star(3), 1),
])
def test_ccw_examples(G, expected):
    value, cover = ccw_exact(G)
    assert value == expected
    assert max_edge_width(cover) == value


def test_ccw_empty_graph():
    value, cover = ccw_exact(edgeless(0))
    assert (value, len(cover)) == (0, 0)


def test_ccw_cap():
    with pytest.raises(CapacityError):
        ccw_exact(path(6), cap=5)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_ccw_matches_oracle(G):
    value, cover = ccw_exact(G)
    assert value == oracles.ccw(G.n, oracles.edge_set(G))
    assert max_edge_width(cover) == value


def test_ccw_deterministic_witness():
    G = cycle(6)
    assert ccw_exact(G)[1].to_json() == ccw_exact(G)[1].to_json()


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_ccw_monotone_under_vertex_deletion(G):
    H, _ = induced_subgraph(G, range(1, G.n))
    assert ccw_exact(H)[0] <= ccw_exact(G)[0]


def test_ccw_upper_examples():
    assert ccw_upper(complete(6))[0] == 0
    assert ccw_upper(path(50))[0] == 1
    assert ccw_upper(cycle(6))[0] in (2, 3)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_ccw_upper_dominates_exact(G):
    upper, cover = ccw_upper(G)
    assert max_edge_width(cover) == upper
    assert upper >= ccw_exact(G)[0]


# -- first-block certificate ----------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(graphs())
def test_first_block_certificate(G):
    value, cover = ccw_exact(G)
    certificate = first_block_neighborhood_cover(G, cover)
    a = certificate.vertex
    assert a in cover.blocks[0]
    covered = sorted(v for c in certificate.cliques for v in c)
    assert covered == sorted(set(members(G.rows[a])) | {a})
    assert all(G.has_edge(u, v) for c in certificate.cliques for u in c for v in c if u < v)
    assert len(certificate.cliques) <= certificate.width + 1 <= value + 1
    assert neighborhood_clique_cover(G).value <= value + 1


def test_first_block_certificate_on_star():
    G = star(4)
    cover = CliqueCover(G, ({2}, {0, 1}, {3}, {4}))
    certificate = first_block_neighborhood_cover(G, cover)
    assert (certificate.vertex, certificate.width) == (2, 1)
    assert [sorted(c) for c in certificate.cliques] == [[2], [0]]


def test_first_block_needs_blocks():
    G = Graph.edgeless(0)
    with pytest.raises(GraphValidationError):
        first_block_neighborhood_cover(G, CliqueCover(G, ()))
