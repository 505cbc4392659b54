"""
Parameter computation behind `experiments.py compute`
"""
import time
from typing import Any, Dict, List, Optional

from config.settings import COMPUTABLE_PARAMS, REPORT_INCLUDE_TIMINGS
from src.cover.clique_cover import clique_cover_number, neighborhood_clique_cover
from src.cover.width import ccw_exact, ccw_upper
from src.errors import CapacityError, GraphValidationError
from src.graphs.graph import Graph, degeneracy, members
from src.harness.reports import ParamReport, encode_value
from src.limits import DEFAULT_CAPS, SearchCaps
from src.minors.parameters import MINOR_PARAMETERS, MinorParameter
from src.structure.extremal import largest_balanced_induced_biclique, largest_induced_star


def _exact(value, witness) -> Dict[str, Any]:
    return {"value": encode_value(value), "bound": "exact", "exhaustive": True, "witness": witness}


def minor_entry(result: MinorParameter) -> Dict[str, Any]:
    return {
        "value": encode_value(result.value),
        "bound": result.bound,
        "exhaustive": result.exhaustive,
        "models_examined": result.models_examined,
        "witness": {"model": result.witness.to_json(), "certificate": result.certificate},
    }


def compute_param(G: Graph, name: str, t: int, caps: SearchCaps) -> Dict[str, Any]:
    """
    One report entry: value, bound label, exhaustive flag and witness

    Raises:
        GraphValidationError: unknown parameter or invalid input
        CapacityError: an exact search ran past its cap
    """
    if name == "beta":
        value, cover = clique_cover_number(G, caps.coloring)
        return _exact(value, {"cover": cover.to_json()})
    if name == "nbr_beta":
        result = neighborhood_clique_cover(G, caps.coloring)
        # vertex i of H_x is the i-th smallest vertex of N[x]
        local = sorted(list(members(G.rows[result.witness])) + [result.witness])
        cover = [sorted(local[v] for v in block) for block in result.cover.blocks]
        return _exact(result.value, {"vertex": result.witness, "cover": sorted(cover)})
    if name == "ccw":
        if G.n <= caps.ccw:
            value, cover = ccw_exact(G, caps.ccw)
            return _exact(value, {"cover": cover.to_json()})
        value, cover = ccw_upper(G)
        return {"value": value, "bound": "upper-bound", "exhaustive": False, "witness": {"cover": cover.to_json()}}
    if name == "s":
        result = largest_induced_star(G, caps.mis)
        return _exact(result.s, {"center": result.center, "leaves": sorted(result.leaves)})
    if name == "p":
        result = largest_balanced_induced_biclique(G, caps.biclique)
        return _exact(result.p, {"side_a": sorted(result.side_a), "side_b": sorted(result.side_b)})
    if name == "degeneracy":
        value, order = degeneracy(G)
        return _exact(value, {"order": order})
    if name in MINOR_PARAMETERS:
        return minor_entry(MINOR_PARAMETERS[name](G, t, caps))
    raise GraphValidationError(f"unknown parameter {name!r}; expected one of {COMPUTABLE_PARAMS}")


def cmd_compute(G: Graph, params: List[str], t: int = 0, caps: Optional[SearchCaps] = None,
                descriptor: Optional[Dict[str, Any]] = None, graph_id: str = "input",
                timings: bool = REPORT_INCLUDE_TIMINGS) -> ParamReport:
    """
    Run the requested computations; per-parameter failures land in the
    report's error list and the rest still run
    """
    caps = caps or DEFAULT_CAPS
    report = ParamReport(graph_id, descriptor or {}, G.n, G.m, t, caps, list(params))
    for name in params:
        start = time.perf_counter()
        try:
            entry = compute_param(G, name, t, caps)
        except GraphValidationError as e:
            report.errors.append({"param": name, "kind": "validation", "message": str(e)})
            continue
        except CapacityError as e:
            report.errors.append({"param": name, "kind": "capacity", "message": str(e)})
            continue
        if timings:
            entry["seconds"] = round(time.perf_counter() - start, 6)
        report.results[name] = entry
    return report
