import networkx as nx
import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs
from src.constructions.generators import (
    complete, complete_bipartite, cycle, edgeless, gen_random_chordal, gen_random_incomparability,
    gen_random_interval, path, star
)
from src.errors import CapacityError, GraphValidationError
from src.graphs.graph import Graph, complement
from src.structure.chordal import clique_forest, clique_tree, is_chordal, lexbfs, verify_peo
from src.structure.comparability import (
    Orientation, is_comparability, is_incomparability, transitive_orientation, verify_transitive
)
from src.structure.extremal import is_induced_biclique, largest_balanced_induced_biclique, largest_induced_star


def assert_hole(G, hole):
    assert len(hole) >= 4
    assert len(set(hole)) == len(hole)
    for i, v in enumerate(hole):
        for j in range(i + 1, len(hole)):
            consecutive = j == i + 1 or (i == 0 and j == len(hole) - 1)
            assert G.has_edge(v, hole[j]) == consecutive


# -- chordal -----------------------------------------------------------------------

def test_lexbfs_is_a_permutation():
    assert sorted(lexbfs(cycle(6))) == list(range(6))
    assert lexbfs(path(4)) == [0, 1, 2, 3]


@pytest.mark.parametrize("G", [complete(5), path(6), star(4), edgeless(3), Graph.edgeless(0)])
def test_chordal_examples(G):
    result = is_chordal(G)
    assert result.chordal
    assert verify_peo(G, result.peo)


@pytest.mark.parametrize("G", [cycle(4), cycle(5), cycle(7), complete_bipartite(2, 3)])
def test_non_chordal_examples(G):
    result = is_chordal(G)
    assert not result.chordal
    assert_hole(G, result.hole)


def test_verify_peo_rejects_bad_orders():
    assert not verify_peo(path(3), [1, 0, 2])
    assert not verify_peo(path(3), [0, 1])


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_chordality_matches_oracle(G):
    result = is_chordal(G)
    assert result.chordal == (not oracles.has_hole(G.n, oracles.edge_set(G)))
    assert result.chordal == nx.is_chordal(G.to_networkx())
    if result.chordal:
        assert verify_peo(G, result.peo)
    else:
        assert_hole(G, result.hole)


def test_clique_tree_of_path():
    tree = clique_tree(path(4))
    assert tree.to_json() == {"cliques": [[0, 1], [1, 2], [2, 3]], "tree_edges": [[0, 1], [1, 2]]}
    assert tree.components_without(1) == [[0], [2]]
    assert tree.bfs_order(1) == [1, 0, 2]


def test_clique_tree_rejects_non_chordal():
    with pytest.raises(GraphValidationError) as info:
        clique_tree(cycle(4))
    assert_hole(cycle(4), info.value.certificate)


def test_clique_tree_rejects_disconnected():
    with pytest.raises(GraphValidationError):
        clique_tree(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_clique_forest_of_disconnected_graph():
    forest = clique_forest(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert forest.to_json() == {"cliques": [[0, 1], [2, 3]], "tree_edges": []}


@pytest.mark.parametrize("seed", range(6))
def test_random_chordal_clique_trees(seed):
    G = gen_random_chordal(9, seed)
    assert is_chordal(G).chordal
    forest = clique_forest(G)
    assert forest.has_induced_subtree_property()
    expected = sorted(sorted(c) for c in nx.find_cliques(G.to_networkx()))
    assert sorted(sorted(c) for c in forest.cliques) == expected


# -- comparability -----------------------------------------------------------------

@pytest.mark.parametrize("G, expected", [
    (cycle(4), True),
    (cycle(6), True),
    (complete_bipartite(3, 3), True),
    (complete(4), True),
    (path(5), True),
    (cycle(5), False),
    (cycle(7), False),
])
def test_comparability_examples(G, expected):
    result = transitive_orientation(G)
    assert result.found == expected
    if expected:
        assert verify_transitive(G, result.orientation) == []
    else:
        last = result.obstruction[-1]
        assert (last[1], last[0]) in result.obstruction


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=5))
def test_comparability_matches_oracle(G):
    assert is_comparability(G) == oracles.transitively_orientable(G.n, oracles.edge_set(G))


def test_verify_transitive_reports_violations():
    P3 = path(3)
    assert verify_transitive(P3, Orientation(P3, frozenset({(1, 0), (1, 2)}))) == []
    assert verify_transitive(P3, Orientation(P3, frozenset({(0, 1), (1, 2)})))
    assert verify_transitive(P3, Orientation(P3, frozenset({(0, 1)})))


def test_orientation_cap():
    with pytest.raises(CapacityError):
        transitive_orientation(path(5), cap=4)


@pytest.mark.parametrize("seed", range(5))
def test_generated_families_are_incomparability_graphs(seed):
    assert is_incomparability(gen_random_incomparability(8, 0.5, seed))
    assert is_incomparability(gen_random_interval(8, seed))


def test_c5_is_not_an_incomparability_graph():
    assert not is_incomparability(cycle(5))
    assert is_comparability(complement(path(4)))


# -- stars and bicliques -------------------------------------------------------------

def test_star_examples():
    assert largest_induced_star(star(4)) == (4, 0, frozenset({1, 2, 3, 4}))
    assert largest_induced_star(edgeless(3)) == (0, None, frozenset())
    assert largest_induced_star(complete(4)) == (1, 0, frozenset({1}))
    assert largest_induced_star(cycle(5)).s == 2


def test_star_cap():
    with pytest.raises(CapacityError):
        largest_induced_star(path(5), cap=4)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_star_matches_oracle(G):
    result = largest_induced_star(G)
    assert result.s == oracles.induced_star(G.n, oracles.edge_set(G))
    if result.s:
        assert all(G.has_edge(result.center, leaf) for leaf in result.leaves)
        assert oracles.independent(oracles.edge_set(G), result.leaves)


def test_biclique_examples():
    result = largest_balanced_induced_biclique(complete_bipartite(3, 3))
    assert result == (3, frozenset({0, 1, 2}), frozenset({3, 4, 5}))
    assert largest_balanced_induced_biclique(cycle(4)) == (2, frozenset({0, 2}), frozenset({1, 3}))
    assert largest_balanced_induced_biclique(complete(5)).p == 1
    assert largest_balanced_induced_biclique(edgeless(4)).p == 0


def test_biclique_cap():
    with pytest.raises(CapacityError):
        largest_balanced_induced_biclique(path(5), cap=4)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_biclique_matches_oracle(G):
    result = largest_balanced_induced_biclique(G)
    assert result.p == oracles.balanced_biclique(G.n, oracles.edge_set(G))
    assert len(result.side_a) == len(result.side_b) == result.p
    assert is_induced_biclique(G, result.side_a, result.side_b)
