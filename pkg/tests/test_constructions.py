import pytest

from src.constructions.generators import (
    all_labeled_graphs, complement_bipartite, gen_named, gen_obs2, gen_obs3, gen_random_chordal,
    gen_random_graph, gen_random_incomparability, gen_random_interval
)
from src.constructions.registry import DETERMINISTIC, build_construction
from src.constructions.rng import XorShift64Star, splitmix64
from src.cover.width import ccw_exact
from src.errors import GraphValidationError
from src.graphs.graph import induced_subgraph
from src.minors.models import quotient
from src.structure.chordal import is_chordal
from src.structure.extremal import is_induced_biclique, largest_balanced_induced_biclique, largest_induced_star


# -- rng ---------------------------------------------------------------------------

def test_splitmix64_reference_value():
    assert splitmix64(0) == 0xE220A8397B1DCDAF


def test_rng_streams_depend_only_on_seed():
    a, b = XorShift64Star(42), XorShift64Star(42)
    assert [a.next64() for _ in range(5)] == [b.next64() for _ in range(5)]
    assert XorShift64Star(-1).seed == XorShift64Star(2**64 - 1).seed


def test_rng_helpers():
    rng = XorShift64Star(7)
    assert all(0 <= rng.randbelow(3) < 3 for _ in range(100))
    assert not any(rng.bernoulli(0.0) for _ in range(50))
    assert all(rng.bernoulli(1.0) for _ in range(50))
    assert sorted(rng.permutation(10)) == list(range(10))
    with pytest.raises(ValueError):
        rng.randbelow(0)


@pytest.mark.parametrize("generate", [
    lambda seed: gen_random_graph(8, 0.5, seed),
    lambda seed: gen_random_incomparability(8, 0.5, seed),
    lambda seed: gen_random_chordal(8, seed),
    lambda seed: gen_random_interval(8, seed),
    lambda seed: complement_bipartite(4, seed),
])
def test_random_families_are_reproducible(generate):
    assert generate(3) == generate(3)
    assert len({generate(seed).rows for seed in range(6)}) > 1


def test_random_graph_extremes():
    assert gen_random_graph(5, 0.0).m == 0
    assert gen_random_graph(5, 1.0).m == 10
    with pytest.raises(GraphValidationError):
        gen_random_graph(5, 1.5)


def test_random_chordal_is_chordal():
    assert all(is_chordal(gen_random_chordal(10, seed)).chordal for seed in range(10))


def test_complement_bipartite_has_two_cliques():
    G = complement_bipartite(4, seed=1)
    for side in (range(4), range(4, 8)):
        H, _ = induced_subgraph(G, side)
        assert H.m == 6


def test_interval_labels():
    G = gen_random_interval(5, seed=2)
    assert len(G.labels) == 5
    assert all(label.startswith("[") for label in G.labels)


def test_all_labeled_graphs():
    graphs = list(all_labeled_graphs(3))
    assert len(graphs) == 8
    assert len({G.rows for G in graphs}) == 8


# -- lower-bound constructions --------------------------------------------------------

def test_obs2_shape():
    G, model = gen_obs2(4, 2)
    assert (G.n, G.m) == (8, 7)
    assert G.label(0) == "x1" and G.label(4) == "s1"
    model.validate()
    assert model.to_json()["branch_sets"][0] == [0, 1]


def test_obs2_host_is_narrow_but_minor_has_big_star():
    G, model = gen_obs2(4, 2)
    assert ccw_exact(G)[0] == 1
    assert largest_induced_star(quotient(model)).s == 3


@pytest.mark.parametrize("t", [1, 2, 3, 5])
def test_obs2_star_size(t):
    _, model = gen_obs2(t + 2, t)
    assert largest_induced_star(quotient(model)).s >= t + 1


@pytest.mark.parametrize("n, t", [(3, 3), (2, 0), (4, 5)])
def test_obs2_rejects_bad_parameters(n, t):
    with pytest.raises(GraphValidationError):
        gen_obs2(n, t)


@pytest.mark.parametrize("n, t", [(5, 1), (6, 2), (5, 3), (7, 4)])
def test_obs3_contracts_to_biclique(n, t):
    G, model = gen_obs3(n, t)
    assert G.n == (t + 1) + t * (t + 1) + n
    model.validate()
    Q = quotient(model)
    A = [i for i, s in enumerate(model.branch_sets) if max(s) <= t]
    B = [i for i, s in enumerate(model.branch_sets) if len(s) == t + 1]
    assert len(A) == len(B) == t + 1
    assert is_induced_biclique(Q, A, B)


@pytest.mark.parametrize("n, t", [(5, 1), (6, 2)])
def test_obs3_host_has_no_square(n, t):
    G, _ = gen_obs3(n, t)
    assert largest_balanced_induced_biclique(G).p == 1


@pytest.mark.parametrize("n, t", [(4, 1), (5, 0), (5, 5)])
def test_obs3_rejects_bad_parameters(n, t):
    with pytest.raises(GraphValidationError):
        gen_obs3(n, t)


# -- registry ------------------------------------------------------------------------

def test_registry_provenance():
    built = build_construction("obs2", {"t": 3, "n": 6}, seed=9)
    assert built.provenance == {"family": "obs2", "params": {"n": 6, "t": 3}, "seed": None}
    assert built.model is not None

    built = build_construction("random", {"n": 6, "p": 0.3}, seed=9)
    assert built.provenance["seed"] == 9
    assert built.model is None
    assert built.graph == gen_random_graph(6, 0.3, 9)


def test_registry_default_seed():
    assert build_construction("chordal", {"n": 6}).provenance["seed"] == 0


def test_registry_named_families():
    assert build_construction("cycle", {"n": 5}).graph.m == 5
    assert build_construction("complement_bipartite", {"n": 3}, seed=4).graph == complement_bipartite(3, 4)
    assert "cycle" in DETERMINISTIC and "complement_bipartite" not in DETERMINISTIC


@pytest.mark.parametrize("family, params", [
    ("hypercube", {"n": 3}),
    ("obs2", {"n": 6}),
    ("cycle", {"n": 2}),
    ("cycle", {"k": 5}),
])
def test_registry_rejects_bad_requests(family, params):
    with pytest.raises(GraphValidationError):
        build_construction(family, params)


def test_gen_named_unknown():
    with pytest.raises(GraphValidationError):
        gen_named("petersen")
