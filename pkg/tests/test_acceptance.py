"""
Corpus-scale batteries; run with `pytest -m slow`
"""
from math import ceil

import pytest

import oracles
from src.constructions.generators import (
    all_labeled_graphs, gen_obs2, gen_obs3, gen_random_chordal, gen_random_graph, gen_random_incomparability
)
from src.cover.clique_cover import clique_cover_number
from src.cover.width import ccw_exact
from src.graphs.graph import max_independent_set
from src.harness.conjectures import ceil_sqrt, cmd_conjecture1, cmd_conjecture2
from src.harness.corpora import CorpusItem, resolve_corpus
from src.harness.reports import write_csv
from src.harness.verify import cmd_verify
from src.limits import DEFAULT_CAPS
from src.minors.models import quotient
from src.minors.parameters import beta_hat, maximize_parameters
from src.structure.comparability import is_incomparability
from src.structure.extremal import largest_balanced_induced_biclique, largest_induced_star

pytestmark = pytest.mark.slow


@pytest.mark.parametrize("t", [0, 1])
def test_sandwich_on_every_five_vertex_graph(t):
    for G in all_labeled_graphs(5):
        profile = maximize_parameters(G, t, ["p_t", "beta_hat", "k_t"])
        assert all(result.exhaustive for result in profile.values())
        assert profile["p_t"].value <= profile["beta_hat"].value <= profile["k_t"].value + 1


@pytest.mark.parametrize("seed", range(20))
def test_chordal_graphs_collapse(seed):
    G = gen_random_chordal(5 + seed % 5, seed)
    for t in (0, 1, 2):
        result = beta_hat(G, t)
        assert result.exhaustive
        assert result.value == 1


@pytest.mark.parametrize("n", range(2, 11))
def test_obs2_bounds(n):
    cap = DEFAULT_CAPS.with_overrides(ccw=2 * n).ccw
    for t in range(1, min(4, n - 1) + 1):
        G, model = gen_obs2(n, t)
        Q = quotient(model)
        assert ccw_exact(G, cap)[0] == 1
        assert largest_induced_star(Q).s >= t
        assert ceil(t / 2) <= ccw_exact(Q, cap)[0] <= t
        assert largest_balanced_induced_biclique(G).p <= 1
        assert largest_balanced_induced_biclique(Q).p <= 1


@pytest.mark.parametrize("t", [1, 2])
def test_obs3_bounds(t):
    G, model = gen_obs3(7, t)
    assert largest_balanced_induced_biclique(G).p <= 1
    assert largest_balanced_induced_biclique(quotient(model)).p >= t + 1


@pytest.mark.parametrize("seed", range(50))
def test_incomparability_width_band(seed):
    G = gen_random_incomparability(6 + seed % 5, 0.5, seed)
    assert is_incomparability(G)
    s, width = largest_induced_star(G).s, ccw_exact(G)[0]
    assert ceil((s - 1) / 2) <= width <= s


def test_verify_battery_on_all_four_vertex_graphs():
    items = [CorpusItem(f"g{i}", G, {"family": "all", "params": {"n": 4, "index": i}, "seed": None})
             for i, G in enumerate(all_labeled_graphs(4))]
    report = cmd_verify(items, [0, 1], verbose=False)
    assert report.failures == []


def small_graphs():
    """Every labeled graph on at most five vertices, then 200 seeded graphs on 2..7 vertices"""
    for n in range(1, 6):
        yield from all_labeled_graphs(n)
    densities = (0.2, 0.4, 0.6, 0.8)
    for seed in range(200):
        yield gen_random_graph(2 + seed % 6, densities[seed % 4], seed)


def test_exact_solvers_agree_with_brute_force():
    for G in small_graphs():
        E = oracles.edge_set(G)

        S = max_independent_set(G)
        assert oracles.independent(E, S)
        assert len(S) == oracles.mis_size(G.n, E), G.edges()

        value, cover = clique_cover_number(G)
        assert value == len(cover) == oracles.clique_cover_number(G.n, E), G.edges()

        assert ccw_exact(G)[0] == oracles.ccw(G.n, E), G.edges()

        result = largest_balanced_induced_biclique(G)
        assert result.p == oracles.balanced_biclique(G.n, E), G.edges()


def run_twice(tmp_path, name, run):
    outputs = []
    for attempt in range(2):
        table = run()
        path = tmp_path / f"{name}-{attempt}.csv"
        write_csv(table.rows, table.columns, str(path))
        outputs.append((path.read_bytes(), table.to_json()))
    assert outputs[0] == outputs[1]
    return table


def test_default_conjecture1_corpus_is_reproducible(tmp_path):
    items = resolve_corpus(["conjecture1"])
    table = run_twice(tmp_path, "conjecture1", lambda: cmd_conjecture1(items, [1, 2], verbose=False))
    assert len(table.rows) == 2 * len(items)


def test_default_conjecture2_corpus_is_reproducible(tmp_path):
    items = resolve_corpus(["conjecture2"])
    table = run_twice(tmp_path, "conjecture2", lambda: cmd_conjecture2(items, p=2, t=1, verbose=False))
    interval_rows = [row for row in table.rows if row["graph_id"].startswith("interval") and row["feasible"]]
    assert interval_rows
    for row in interval_rows:
        assert row["min_separator"] <= ceil_sqrt(row["cliques"]), row
