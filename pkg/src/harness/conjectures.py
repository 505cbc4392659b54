"""
Conjecture harnesses: induced stars in shallow minors of incomparability
graphs, and small balanced clique separators under an excluded biclique

Both commands only tabulate; neither conjecture can be settled by a finite
corpus, so no verdict is attached.
"""
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Any, Dict, List, Optional, Sequence

from config.settings import REPORT_SCHEMA_VERSION, TOOLKIT_VERSION
from src.cover.clique_cover import clique_cover_number
from src.cover.width import ccw_exact
from src.errors import CapacityError
from src.harness.corpora import CorpusItem
from src.harness.reports import dump_json
from src.harness.runner import run_ordered
from src.limits import DEFAULT_CAPS, SearchCaps
from src.minors.parameters import maximize_parameters, p_t
from src.separators.exact import min_balanced_clique_separator
from src.structure.extremal import largest_induced_star

CONJECTURE1_COLUMNS = ["graph_id", "n", "seed", "s", "t", "s_t", "exhaustive", "ratio", "p_t", "ts_over_p_t"]
CONJECTURE2_COLUMNS = ["graph_id", "n", "seed", "p_t", "hypothesis_exhaustive", "cover_source",
                       "cliques", "min_separator", "feasible", "sqrt_bound", "status"]

UNDEFINED = "undefined"


def ceil_sqrt(k: int) -> int:
    return 0 if k <= 0 else isqrt(k - 1) + 1


def _ratio(numerator: int, denominator: int) -> Optional[Fraction]:
    return Fraction(numerator, denominator) if denominator else None


def _text(value: Optional[Fraction]) -> str:
    return UNDEFINED if value is None else str(value)


@dataclass
class ConjectureTable:
    command: str
    columns: List[str]
    caps: SearchCaps
    settings: Dict[str, Any]
    rows: List[Dict[str, Any]] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "toolkit_version": TOOLKIT_VERSION,
            "command": self.command,
            "settings": self.settings,
            "caps": asdict(self.caps),
            "summary": self.summary,
            "rows": self.rows,
        }

    def to_json(self) -> str:
        return dump_json(self.to_dict())


# ========================================================================
# CONJECTURE 1: s_t = O(t * s) on incomparability graphs
# ========================================================================

class _StarJob:
    def __init__(self, t_values: Sequence[int], caps: SearchCaps):
        self.t_values = list(t_values)
        self.caps = caps

    def __call__(self, item: CorpusItem) -> List[Dict[str, Any]]:
        G = item.graph
        s = largest_induced_star(G, self.caps.mis).s
        rows = []
        for t in self.t_values:
            profile = maximize_parameters(G, t, ["s_t", "p_t"], self.caps)
            star, biclique = profile["s_t"], profile["p_t"]
            rows.append({
                "graph_id": item.graph_id,
                "n": G.n,
                "seed": item.provenance.get("seed"),
                "s": s,
                "t": t,
                "s_t": star.value,
                "exhaustive": star.exhaustive and biclique.exhaustive,
                "ratio": _text(_ratio(star.value, t * s)),
                "p_t": biclique.value,
                "ts_over_p_t": _text(_ratio(t * s, biclique.value)),
            })
        return rows


def _row_order(row: Dict[str, Any]):
    seed = row.get("seed")
    return row["n"], -1 if seed is None else seed


def cmd_conjecture1(items: Sequence[CorpusItem], t_values: Sequence[int], caps: Optional[SearchCaps] = None,
                    workers: int = 1, verbose: bool = True) -> ConjectureTable:
    """
    Tabulate s, s_t and s_t / (t * s) per (graph, t)

    Rows are sorted by (n, seed, t). A row whose minor enumeration was capped
    has exhaustive=False and its s_t is a lower bound. When t * s is zero the
    ratio is "undefined".
    """
    caps = caps or DEFAULT_CAPS
    t_values = sorted(set(t_values))
    table = ConjectureTable("conjecture1", CONJECTURE1_COLUMNS, caps, {"t": t_values})
    rows = [row for batch in run_ordered(_StarJob(t_values, caps), list(items), workers,
                                         desc="Conjecture 1", verbose=verbose)
            for row in batch]
    table.rows = sorted(rows, key=lambda row: (*_row_order(row), row["t"]))

    defined = [(Fraction(row["ratio"]), row) for row in table.rows if row["ratio"] != UNDEFINED]
    best = max(defined, key=lambda pair: pair[0], default=None)
    table.summary = {
        "rows": len(table.rows),
        "undefined_ratio_rows": len(table.rows) - len(defined),
        "lower_bound_rows": sum(not row["exhaustive"] for row in table.rows),
        "max_ratio": None if best is None else str(best[0]),
        "max_ratio_graph": None if best is None else best[1]["graph_id"],
        "max_ratio_t": None if best is None else best[1]["t"],
    }
    return table


# ========================================================================
# CONJECTURE 2: O(sqrt|C|) cliques separate K_{p,p}-minor-free graphs
# ========================================================================

class _SeparatorJob:
    def __init__(self, p: int, t: int, caps: SearchCaps, with_ccw_cover: bool):
        self.p = p
        self.t = t
        self.caps = caps
        self.with_ccw_cover = with_ccw_cover

    def _row(self, item: CorpusItem, hypothesis, source: str, cover) -> Dict[str, Any]:
        k = len(cover)
        row = {
            "graph_id": item.graph_id,
            "n": item.graph.n,
            "seed": item.provenance.get("seed"),
            "p_t": hypothesis.value,
            "hypothesis_exhaustive": hypothesis.exhaustive,
            "cover_source": source,
            "cliques": k,
            "min_separator": None,
            "feasible": False,
            "sqrt_bound": ceil_sqrt(k),
            "status": "infeasible",
        }
        try:
            search = min_balanced_clique_separator(item.graph, cover, self.caps.separator)
        except CapacityError:
            row["status"] = "skipped"
            return row
        if search.size is not None:
            row.update(min_separator=search.size, feasible=True, status="ok")
        return row

    def __call__(self, item: CorpusItem) -> Optional[List[Dict[str, Any]]]:
        """None when the instance contains K_{p,p} as a t-shallow minor"""
        G = item.graph
        if G.n == 0:
            return []
        hypothesis = p_t(G, self.t, self.caps)
        if hypothesis.value >= self.p:
            return None
        _, cover = clique_cover_number(G, self.caps.coloring)
        rows = [self._row(item, hypothesis, "clique_cover_number", cover)]
        if self.with_ccw_cover:
            if G.n <= self.caps.ccw:
                _, width_cover = ccw_exact(G, self.caps.ccw)
                rows.append(self._row(item, hypothesis, "ccw_exact", width_cover))
            else:
                rows.append({**rows[0], "cover_source": "ccw_exact", "cliques": None,
                             "min_separator": None, "feasible": False, "sqrt_bound": None,
                             "status": "skipped"})
        return rows


def cmd_conjecture2(items: Sequence[CorpusItem], p: int, t: int, caps: Optional[SearchCaps] = None,
                    with_ccw_cover: bool = False, workers: int = 1, verbose: bool = True) -> ConjectureTable:
    """
    Smallest balanced clique separator against ceil(sqrt(|C|)) on every
    instance without a K_{p,p} t-shallow minor

    Args:
        items: Corpus in order
        p: Excluded biclique size; instances with p_t >= p are filtered out
        t: Minor depth for the hypothesis
        with_ccw_cover: Also separate the optimal cover from ccw_exact
    """
    caps = caps or DEFAULT_CAPS
    table = ConjectureTable("conjecture2", CONJECTURE2_COLUMNS, caps,
                            {"p": p, "t": t, "with_ccw_cover": with_ccw_cover})
    filtered = []
    rows = []
    job = _SeparatorJob(p, t, caps, with_ccw_cover)
    for item, batch in zip(items, run_ordered(job, list(items), workers, desc="Conjecture 2", verbose=verbose)):
        if batch is None:
            filtered.append(item.graph_id)
        else:
            rows.extend(batch)
    table.rows = sorted(rows, key=_row_order)

    feasible = [row for row in table.rows if row["feasible"]]
    table.summary = {
        "rows": len(table.rows),
        "filtered_by_hypothesis": len(filtered),
        "filtered": filtered,
        "infeasible_rows": sum(row["status"] == "infeasible" for row in table.rows),
        "skipped_rows": sum(row["status"] == "skipped" for row in table.rows),
        "rows_above_sqrt_bound": sum(row["min_separator"] > row["sqrt_bound"] for row in feasible),
        "max_separator": max((row["min_separator"] for row in feasible), default=None),
    }
    return table
