"""
Construction registry: one entry point for every family, returning the
graph, the minor model when the family has one, and a provenance record
"""
from typing import Any, Callable, Dict, NamedTuple, Optional

from config.settings import CHORDAL_DENSITY, DEFAULT_SEED
from src.constructions import generators
from src.errors import GraphValidationError
from src.graphs.graph import Graph
from src.minors.models import MinorModel


class Construction(NamedTuple):
    graph: Graph
    model: Optional[MinorModel]
    provenance: Dict[str, Any]


def _obs2(params, seed):
    return generators.gen_obs2(params["n"], params["t"])


def _obs3(params, seed):
    return generators.gen_obs3(params["n"], params["t"])


def _incomparability(params, seed):
    return generators.gen_random_incomparability(params["n"], params.get("density", 0.5), seed), None


def _chordal(params, seed):
    return generators.gen_random_chordal(params["n"], seed, params.get("density", CHORDAL_DENSITY)), None


def _interval(params, seed):
    return generators.gen_random_interval(params["n"], seed), None


def _random(params, seed):
    return generators.gen_random_graph(params["n"], params.get("p", 0.5), seed), None


def _named(family):
    def build(params, seed):
        kwargs = dict(params)
        if family == "complement_bipartite":
            kwargs["seed"] = seed
        return generators.gen_named(family, **kwargs), None
    return build


BUILDERS: Dict[str, Callable] = {
    "obs2": _obs2,
    "obs3": _obs3,
    "incomparability": _incomparability,
    "chordal": _chordal,
    "interval": _interval,
    "random": _random,
}
BUILDERS.update({family: _named(family) for family in generators.NAMED_FAMILIES})

# families whose output does not depend on the seed
DETERMINISTIC = {"obs2", "obs3", "complete", "complete_bipartite", "path", "cycle", "star", "edgeless"}


def build_construction(family: str, params: Dict[str, Any], seed: Optional[int] = None) -> Construction:
    """
    Args:
        family: Registry key (see BUILDERS)
        params: Family parameters, e.g. {"n": 6, "t": 3}
        seed: RNG seed for random families (DEFAULT_SEED when omitted)

    Raises:
        GraphValidationError: unknown family, missing or bad parameters
    """
    if family not in BUILDERS:
        raise GraphValidationError(f"unknown construction {family!r}; expected one of {sorted(BUILDERS)}")
    seed = DEFAULT_SEED if seed is None else seed
    try:
        graph, model = BUILDERS[family](params, seed)
    except KeyError as e:
        raise GraphValidationError(f"construction {family} is missing parameter {e.args[0]!r}") from None
    provenance = {
        "family": family,
        "params": dict(sorted(params.items())),
        "seed": None if family in DETERMINISTIC else seed,
    }
    return Construction(graph, model, provenance)
