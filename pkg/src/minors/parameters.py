"""
Parameters maximized over t-shallow minors: beta_hat_t, grad_t, k_t, p_t, s_t

Several parameters can share one pass over the model stream
(maximize_parameters); the single-parameter functions are thin wrappers.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Optional, Tuple, Union

from src.cover.clique_cover import neighborhood_clique_cover
from src.cover.width import ccw_exact
from src.errors import GraphValidationError
from src.graphs.graph import Graph
from src.limits import DEFAULT_CAPS, SearchCaps
from src.minors.models import MinorModel, ModelStream, quotient
from src.structure.extremal import largest_balanced_induced_biclique, largest_induced_star

Value = Union[int, Fraction]
Evaluator = Callable[[Graph], Tuple[Value, Any]]


@dataclass(frozen=True)
class MinorParameter:
    """
    Result of maximizing a parameter over the models of one stream

    When `exhaustive` is False the value is a lower bound: some models were
    cut off by the model or time cap.
    """
    name: str
    t: int
    value: Value
    witness: MinorModel
    exhaustive: bool
    models_examined: int
    certificate: Any = None  # inner witness on quotient(witness)

    @property
    def bound(self) -> str:
        return "exact" if self.exhaustive else "lower-bound"


def _nbr_beta(caps: SearchCaps) -> Evaluator:
    def evaluate(Q):
        result = neighborhood_clique_cover(Q, caps.coloring)
        return result.value, {"vertex": result.witness, "cover": result.cover.to_json()}
    return evaluate


def _density(caps: SearchCaps) -> Evaluator:
    return lambda Q: (Fraction(Q.m, Q.n), None)


def _ccw(caps: SearchCaps) -> Evaluator:
    def evaluate(Q):
        value, cover = ccw_exact(Q, caps.ccw)
        return value, {"cover": cover.to_json()}
    return evaluate


def _biclique(caps: SearchCaps) -> Evaluator:
    def evaluate(Q):
        result = largest_balanced_induced_biclique(Q, caps.biclique)
        return result.p, {"side_a": sorted(result.side_a), "side_b": sorted(result.side_b)}
    return evaluate


def _star(caps: SearchCaps) -> Evaluator:
    def evaluate(Q):
        result = largest_induced_star(Q, caps.mis)
        return result.s, {"center": result.center, "leaves": sorted(result.leaves)}
    return evaluate


EVALUATORS: Dict[str, Callable[[SearchCaps], Evaluator]] = {
    "beta_hat": _nbr_beta,
    "grad": _density,
    "k_t": _ccw,
    "p_t": _biclique,
    "s_t": _star,
}


def maximize_parameters(G: Graph, t: int, names: Iterable[str],
                        caps: Optional[SearchCaps] = None) -> Dict[str, MinorParameter]:
    """
    Maximize every named parameter over one pass of the model stream

    For each parameter the witness is the model with the smallest sort key
    among those attaining the maximum, whatever order the models arrive in.
    Quotients are memoized on their adjacency rows.

    Raises:
        GraphValidationError: G has no vertices, or an unknown name
        CapacityError: an inner exact solver ran past its cap
    """
    names = list(names)
    unknown = [name for name in names if name not in EVALUATORS]
    if unknown:
        raise GraphValidationError(f"unknown minor parameter(s) {unknown}; expected {sorted(EVALUATORS)}")
    if G.n == 0:
        raise GraphValidationError(f"{', '.join(names)} need(s) at least one vertex")
    caps = caps or DEFAULT_CAPS
    evaluators = {name: EVALUATORS[name](caps) for name in names}
    cache: Dict[Tuple[str, Tuple[int, ...]], Tuple[Value, Any]] = {}
    best: Dict[str, Tuple[Value, MinorModel, Any]] = {}

    stream = ModelStream(G, t, caps)
    for model in stream:
        Q = quotient(model, validate=False)
        for name, evaluate in evaluators.items():
            key = (name, Q.rows)
            if key not in cache:
                cache[key] = evaluate(Q)
            value, certificate = cache[key]
            current = best.get(name)
            if (current is None or value > current[0]
                    or (value == current[0] and model.sort_key() < current[1].sort_key())):
                best[name] = (value, model, certificate)

    return {
        name: MinorParameter(name, t, value, model, stream.exhaustive, stream.emitted, certificate)
        for name, (value, model, certificate) in best.items()
    }


def beta_hat(G: Graph, t: int, caps: Optional[SearchCaps] = None) -> MinorParameter:
    """Largest neighbourhood clique cover number of a t-shallow minor"""
    return maximize_parameters(G, t, ["beta_hat"], caps)["beta_hat"]


def grad(G: Graph, t: int, caps: Optional[SearchCaps] = None) -> MinorParameter:
    """Greatest reduced average density |E(H)| / |V(H)|, kept as an exact Fraction"""
    return maximize_parameters(G, t, ["grad"], caps)["grad"]


def max_ccw_over_minors(G: Graph, t: int, caps: Optional[SearchCaps] = None) -> MinorParameter:
    """k_t: the largest clique cover width of a t-shallow minor"""
    return maximize_parameters(G, t, ["k_t"], caps)["k_t"]


def p_t(G: Graph, t: int, caps: Optional[SearchCaps] = None) -> MinorParameter:
    """Largest p such that some t-shallow minor has an induced K_{p,p}"""
    return maximize_parameters(G, t, ["p_t"], caps)["p_t"]


def s_t(G: Graph, t: int, caps: Optional[SearchCaps] = None) -> MinorParameter:
    """Leaf count of the largest induced star in a t-shallow minor"""
    return maximize_parameters(G, t, ["s_t"], caps)["s_t"]


MINOR_PARAMETERS = {
    "beta_hat": beta_hat,
    "grad": grad,
    "k_t": max_ccw_over_minors,
    "p_t": p_t,
    "s_t": s_t,
}
