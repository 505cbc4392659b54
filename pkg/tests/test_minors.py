from fractions import Fraction

import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs
from src.constructions.generators import complete, complete_bipartite, cycle, edgeless, gen_obs2, path
from src.cover.clique_cover import neighborhood_clique_cover
from src.errors import GraphValidationError
from src.graphs.graph import Graph, degeneracy
from src.limits import DEFAULT_CAPS
from src.minors.models import MinorModel, ModelStream, enumerate_models, quotient
from src.minors.parameters import (
    MINOR_PARAMETERS, beta_hat, grad, max_ccw_over_minors, maximize_parameters, p_t, s_t
)
from src.structure.extremal import largest_induced_star


# -- models ------------------------------------------------------------------------

def test_from_branch_sets_sorts_and_picks_centers():
    model = MinorModel.from_branch_sets(path(5), 2, [[3, 4], [0, 1, 2]])
    assert model.to_json() == {"t": 2, "branch_sets": [[0, 1, 2], [3, 4]], "centers": [1, 3]}
    model.validate()


def test_validate_rejects_disconnected_set():
    model = MinorModel(path(4), 3, (frozenset({0, 2}),), (0,))
    with pytest.raises(GraphValidationError, match="not connected"):
        model.validate()


def test_validate_rejects_deep_set():
    with pytest.raises(GraphValidationError, match="eccentricity"):
        MinorModel.from_branch_sets(path(3), 0, [[0, 1]]).validate()


def test_validate_rejects_overlap():
    model = MinorModel(path(3), 1, (frozenset({0, 1}), frozenset({1, 2})), (0, 1))
    with pytest.raises(GraphValidationError, match="disjoint"):
        model.validate()


def test_validate_rejects_foreign_center():
    model = MinorModel(path(3), 1, (frozenset({0, 1}),), (2,))
    with pytest.raises(GraphValidationError, match="center"):
        model.validate()


def test_quotient_examples(named):
    assert quotient(MinorModel.identity(named["P4"])) == path(4)
    assert quotient(MinorModel.from_branch_sets(named["P3"], 1, [[0, 1, 2]])) == Graph.edgeless(1)

    # {0,1}, {2}, {3,4}, {5} around the hexagon close up into a 4-cycle
    C6 = named["C6"]
    Q = quotient(MinorModel.from_branch_sets(C6, 1, [[0, 1], [3, 4], [2], [5]]))
    assert Q == cycle(4)


# -- enumeration -------------------------------------------------------------------

@pytest.mark.parametrize("G, t, expected", [
    (Graph.edgeless(1), 0, 1),
    (path(2), 0, 3),
    (path(2), 1, 4),
    (complete(4), 1, 51),
])
def test_model_counts(G, t, expected):
    stream = enumerate_models(G, t)
    assert sum(1 for _ in stream) == expected
    assert stream.exhaustive
    assert stream.emitted == expected


def test_negative_depth_rejected():
    with pytest.raises(GraphValidationError):
        ModelStream(path(3), -1)


def test_cap_cuts_the_stream():
    stream = ModelStream(complete(4), 1, DEFAULT_CAPS.with_overrides(max_models=5))
    assert len(list(stream)) == 5
    assert not stream.exhaustive


def test_cap_equal_to_model_count_is_exhaustive():
    stream = ModelStream(path(2), 0, DEFAULT_CAPS.with_overrides(max_models=3))
    assert len(list(stream)) == 3
    assert stream.exhaustive


@pytest.mark.parametrize("overrides", [{"max_models": 0}, {"max_models": -2}, {"max_seconds": 0}])
def test_caps_reject_empty_budget(overrides):
    with pytest.raises(GraphValidationError, match="cap must be"):
        DEFAULT_CAPS.with_overrides(**overrides)


def test_tiny_time_cap_still_yields_a_witness():
    result = grad(complete(4), 1, DEFAULT_CAPS.with_overrides(max_seconds=1e-9))
    assert result.models_examined >= 1
    assert result.value >= Fraction(0)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5))
def test_depth_zero_quotients_are_induced_subgraphs(G):
    found = sorted((Q.n, tuple(Q.edges())) for Q in (quotient(m) for m in enumerate_models(G, 0)))
    assert found == oracles.induced_subgraphs(G.n, oracles.edge_set(G))


@pytest.mark.parametrize("t", [1, 2])
@settings(max_examples=40, deadline=None)
@given(G=graphs(max_n=5))
def test_stream_matches_brute_force_families(t, G):
    stream = ModelStream(G, t, self_check=True)
    keys = [model.sort_key() for model in stream]
    assert len(keys) == len(set(keys))
    assert sorted(keys) == oracles.shallow_families(G.n, oracles.edge_set(G), t)


# -- parameters --------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 3, 5])
@pytest.mark.parametrize("t", [0, 1, 2])
def test_beta_hat_of_complete_is_one(n, t):
    assert beta_hat(complete(n), t).value == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_beta_hat_of_biclique_at_depth_zero(n):
    assert beta_hat(complete_bipartite(n, n), 0).value == n


def test_beta_hat_of_c5(named):
    assert beta_hat(named["C5"], 0).value == 2
    assert beta_hat(named["C5"], 1).value == 2


@pytest.mark.parametrize("n", [1, 2, 4, 6])
@pytest.mark.parametrize("t", [0, 1])
def test_grad_of_complete(n, t):
    result = grad(complete(n), t)
    assert result.value == Fraction(n - 1, 2)
    assert result.exhaustive


def test_grad_examples(named):
    assert grad(named["P3"], 0).value == Fraction(2, 3)
    assert grad(Graph.edgeless(1), 3).value == 0


def test_grad_witness_on_k4():
    result = grad(complete(4), 1)
    assert result.witness.to_json() == {"t": 1, "branch_sets": [[0], [1], [2], [3]], "centers": [0, 1, 2, 3]}
    assert result.certificate is None
    assert (result.models_examined, result.bound) == (51, "exact")


def test_witness_is_smallest_among_ties():
    result = beta_hat(complete(3), 0)
    assert result.value == 1
    assert result.witness.sort_key() == ((0,),)


@pytest.mark.parametrize("n", [2, 4])
def test_k_t_of_complete_is_zero(n):
    assert max_ccw_over_minors(complete(n), 1).value == 0


def test_k_t_of_p4():
    assert max_ccw_over_minors(path(4), 0).value == 1


def test_p_t_examples(named):
    assert p_t(named["K33"], 0).value == 3
    assert p_t(named["C6"], 0).value == 1
    result = p_t(named["C6"], 1)
    assert result.value == 2
    assert len(result.certificate["side_a"]) == len(result.certificate["side_b"]) == 2


def test_s_t_examples(named):
    result = s_t(named["K14"], 0)
    assert result.value == 4
    assert result.certificate == {"center": 0, "leaves": [1, 2, 3, 4]}
    assert s_t(complete(4), 1).value == 1
    assert s_t(named["P5"], 1).value == 2


def test_obs2_witness_carries_large_star():
    G, model = gen_obs2(6, 3)
    assert largest_induced_star(quotient(model)).s >= 4


def test_capped_parameter_is_a_lower_bound():
    result = grad(complete(4), 1, DEFAULT_CAPS.with_overrides(max_models=5))
    assert not result.exhaustive
    assert result.bound == "lower-bound"
    assert result.models_examined == 5


def test_unknown_parameter_rejected():
    with pytest.raises(GraphValidationError):
        maximize_parameters(path(3), 0, ["chromatic"])


def test_empty_graph_rejected():
    with pytest.raises(GraphValidationError):
        grad(edgeless(0), 0)


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=5))
def test_shared_pass_matches_single_parameters(G):
    shared = maximize_parameters(G, 1, list(MINOR_PARAMETERS))
    for name, compute in MINOR_PARAMETERS.items():
        single = compute(G, 1)
        assert shared[name].value == single.value
        assert shared[name].witness.sort_key() == single.witness.sort_key()


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=5))
def test_depth_bounds_hold(G):
    low = maximize_parameters(G, 0, list(MINOR_PARAMETERS))
    high = maximize_parameters(G, 1, list(MINOR_PARAMETERS))
    for name in MINOR_PARAMETERS:
        assert low[name].value <= high[name].value
    for profile in (low, high):
        assert profile["beta_hat"].value <= profile["k_t"].value + 1
        assert profile["grad"].value >= Fraction(degeneracy(G)[0], 2)
    assert low["beta_hat"].value >= neighborhood_clique_cover(G).value
    assert low["s_t"].value == largest_induced_star(G).s


@pytest.mark.slow
@pytest.mark.parametrize("n, t", [(4, 2), (5, 3)])
def test_obs2_star_grows_with_depth(n, t):
    G, _ = gen_obs2(n, t)
    assert s_t(G, t).value >= t + 1
    assert s_t(G, 0).value == 3
