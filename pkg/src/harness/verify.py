"""
Verification battery behind `experiments.py verify`

Every assertable inequality is evaluated per (graph, t) and reported as
pass / fail / skipped / info. A check whose inputs were capped is skipped,
never failed.
"""
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import ceil
from typing import Any, Callable, Dict, List, Optional, Sequence

from config.settings import REPORT_SCHEMA_VERSION, TOOLKIT_VERSION
from src.cover.clique_cover import (
    clique_cover_number, first_block_neighborhood_cover, max_edge_width, neighborhood_clique_cover
)
from src.cover.width import ccw_exact, ccw_upper
from src.errors import CapacityError
from src.graphs.graph import Graph, closed_neighborhood, complement, degeneracy, is_connected, members
from src.harness.corpora import CorpusItem
from src.harness.reports import EXIT_OK, EXIT_VERIFICATION, dump_json
from src.harness.runner import run_ordered
from src.limits import DEFAULT_CAPS, SearchCaps
from src.minors.models import quotient
from src.minors.parameters import MinorParameter, maximize_parameters
from src.separators.constructive import ccw_separator, chordal_separator
from src.separators.exact import min_balanced_clique_separator
from src.separators.separation import verify_separation
from src.structure.chordal import is_chordal, verify_peo
from src.structure.comparability import is_incomparability, transitive_orientation, verify_transitive
from src.structure.extremal import largest_balanced_induced_biclique, largest_induced_star

VERIFY_CSV_COLUMNS = ["graph_id", "t", "check", "status", "detail"]

PASS, FAIL, SKIPPED, INFO = "pass", "fail", "skipped", "info"

MONOTONE_PARAMS = ["beta_hat", "grad", "k_t", "p_t", "s_t"]


def _is_hole(G: Graph, cycle: Sequence[int]) -> bool:
    """Chordless cycle on at least 4 distinct vertices"""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if G.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


class GraphChecks:
    """
    Runs the battery on one corpus item, caching the expensive exact values
    so that every check reuses them
    """

    def __init__(self, item: CorpusItem, t_values: Sequence[int], caps: SearchCaps):
        self.item = item
        self.G = item.graph
        self.t_values = sorted(set(t_values))
        self.caps = caps
        self.rows: List[Dict[str, Any]] = []
        self._cache: Dict[str, Any] = {}
        self._profiles: Dict[int, Dict[str, MinorParameter]] = {}

    # -- bookkeeping ----------------------------------------------------------

    def record(self, check: str, status: str, detail: str = "", t: Optional[int] = None):
        self.rows.append({
            "graph_id": self.item.graph_id,
            "t": t,
            "check": check,
            "status": status,
            "detail": detail,
        })

    def expect(self, check: str, holds: bool, detail: str, t: Optional[int] = None):
        self.record(check, PASS if holds else FAIL, detail, t)

    def attempt(self, check: str, body: Callable[[], None], t: Optional[int] = None):
        """Run one check; a capped computation turns into a skipped row"""
        try:
            body()
        except CapacityError as e:
            self.record(check, SKIPPED, str(e), t)

    def cached(self, key: str, compute: Callable[[], Any]) -> Any:
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    # -- shared exact values ----------------------------------------------------

    @property
    def ccw(self):
        """(value, optimal ordered cover), or None past the ccw cap"""
        if self.G.n > self.caps.ccw:
            return None
        return self.cached("ccw", lambda: ccw_exact(self.G, self.caps.ccw))

    @property
    def chordality(self):
        return self.cached("chordal", lambda: is_chordal(self.G))

    @property
    def incomparability(self) -> Optional[bool]:
        if self.G.n > self.caps.orientation:
            return None
        return self.cached("incomparability", lambda: is_incomparability(self.G, self.caps.orientation))

    @property
    def star(self):
        return self.cached("star", lambda: largest_induced_star(self.G, self.caps.mis))

    def profile(self, t: int) -> Dict[str, MinorParameter]:
        if t not in self._profiles:
            names = ["beta_hat", "grad", "p_t", "s_t"]
            if self.G.n <= self.caps.ccw:
                names.append("k_t")
            self._profiles[t] = maximize_parameters(self.G, t, names, self.caps)
        return self._profiles[t]

    # -- graph-level checks -------------------------------------------------------

    def check_neighborhood_cover(self):
        G = self.G
        value = neighborhood_clique_cover(G, self.caps.coloring).value
        delta, _ = degeneracy(G)
        self.expect("nbr_beta_le_degeneracy", value <= max(delta, 1),
                    f"~beta={value}, degeneracy={delta}")

    def check_local_covers(self):
        G = self.G
        for x in range(G.n):
            value, _ = clique_cover_number(closed_neighborhood(G, x), self.caps.coloring)
            if value > max(G.degree(x), 1):
                self.expect("local_cover_le_degree", False,
                            f"vertex {x}: beta(H_x)={value} > deg={G.degree(x)}")
                return
        self.expect("local_cover_le_degree", True, f"all {G.n} vertices")

    def check_first_block(self):
        if self.ccw is None:
            self.record("first_block_certificate", SKIPPED, f"n={self.G.n} above ccw cap {self.caps.ccw}")
            return
        G = self.G
        value, cover = self.ccw
        certificate = first_block_neighborhood_cover(G, cover)
        a = certificate.vertex
        closed = set(members(G.rows[a])) | {a}
        covered = [v for clique in certificate.cliques for v in clique]
        problems = []
        if sorted(covered) != sorted(closed):
            problems.append("cliques do not partition N[a]")
        if any(not G.has_edge(u, v) for clique in certificate.cliques
               for u in clique for v in clique if u < v):
            problems.append("a listed set is not a clique")
        if len(certificate.cliques) > certificate.width + 1:
            problems.append(f"{len(certificate.cliques)} cliques > W+1={certificate.width + 1}")
        if certificate.width > value:
            problems.append(f"W={certificate.width} > CCW={value}")
        self.expect("first_block_certificate", not problems,
                    "; ".join(problems) or f"a={a}, W={certificate.width}, cliques={len(certificate.cliques)}")

        nbr_beta = neighborhood_clique_cover(G, self.caps.coloring).value
        self.expect("nbr_beta_le_ccw_plus_one", nbr_beta <= value + 1, f"~beta={nbr_beta}, CCW={value}")

    def check_ccw_upper(self):
        upper, cover = ccw_upper(self.G)
        self.expect("ccw_upper_witness", max_edge_width(cover) == upper,
                    f"reported {upper}, witness width {max_edge_width(cover)}")
        if self.ccw is None:
            self.record("ccw_upper_ge_exact", SKIPPED, f"n={self.G.n} above ccw cap {self.caps.ccw}")
            return
        exact = self.ccw[0]
        self.expect("ccw_upper_ge_exact", upper >= exact, f"upper={upper}, exact={exact}")

    def check_separators(self):
        if self.ccw is None:
            self.record("ccw_separator", SKIPPED, f"n={self.G.n} above ccw cap {self.caps.ccw}")
            return
        G = self.G
        value, cover = self.ccw
        k = len(cover)
        if k < 3:
            self.record("ccw_separator", SKIPPED, f"cover has {k} clique(s)")
            return
        separation = ccw_separator(G, cover)
        problems = verify_separation(G, separation)
        if len(separation.S) > value:
            problems.append(f"|S|={len(separation.S)} > CCW={value}")
        self.expect("ccw_separator", not problems,
                    "; ".join(problems) or f"|A|={len(separation.A)}, |S|={len(separation.S)}, |B|={len(separation.B)}, |C|={k}")

        def exact_separator():
            search = min_balanced_clique_separator(G, cover, self.caps.separator)
            if search.best is not None:
                problems = verify_separation(G, search.best)
                if problems:
                    self.expect("min_separator_le_ccw_separator", False, "; ".join(problems))
                    return
            if separation.A and separation.B:
                holds = search.size is not None and search.size <= len(separation.S)
                self.expect("min_separator_le_ccw_separator", holds,
                            f"min={search.size}, constructive |S|={len(separation.S)}")
            else:
                self.record("min_separator_le_ccw_separator", INFO,
                            f"min={search.size}; constructive split leaves a side empty")

        self.attempt("min_separator_le_ccw_separator", exact_separator)

    def check_chordal(self):
        G = self.G
        result = self.chordality
        if not result.chordal:
            self.expect("hole_certificate", _is_hole(G, result.hole), f"hole {result.hole}")
            return
        self.expect("peo_certificate", verify_peo(G, result.peo), f"order {result.peo}")
        if G.n == 0 or G.m == G.n * (G.n - 1) // 2:
            self.record("chordal_separator", SKIPPED, "single clique")
            return
        if not is_connected(G):
            self.record("chordal_separator", SKIPPED, "disconnected host")
            return
        separation = chordal_separator(G)
        problems = verify_separation(G, separation)
        if len(separation.S) != 1:
            problems.append(f"|S|={len(separation.S)}, expected one clique")
        self.expect("chordal_separator", not problems,
                    "; ".join(problems) or f"|A|={len(separation.A)}, |B|={len(separation.B)}, |C|={len(separation.cover)}")

    def check_incomparability(self):
        G = self.G
        if self.incomparability is None:
            self.record("orientation_certificate", SKIPPED, f"n={G.n} above orientation cap")
            return
        if not self.incomparability:
            return
        H = complement(G)
        result = transitive_orientation(H, self.caps.orientation)
        problems = verify_transitive(H, result.orientation)
        self.expect("orientation_certificate", not problems, "; ".join(problems) or f"{len(result.orientation.arcs)} arcs")
        if self.ccw is None:
            self.record("incomparability_star_bound", SKIPPED, f"n={G.n} above ccw cap {self.caps.ccw}")
            return
        s, value = self.star.s, self.ccw[0]
        # the s - 1 leaves outside the centre's block need distinct blocks within CCW of it
        lower = max(0, ceil((s - 1) / 2))
        self.expect("incomparability_star_bound", lower <= value <= s, f"s={s}, CCW={value}")
        self.record("incomparability_half_star", INFO,
                    f"s/2 <= CCW {'holds' if Fraction(s, 2) <= value else 'fails'} (s={s}, CCW={value})")

    # -- per-depth checks -------------------------------------------------------

    def check_depth(self, t: int):
        profile = self.profile(t)
        complete = {name: result for name, result in profile.items() if result.exhaustive}
        capped = "model cap reached"

        if {"p_t", "beta_hat", "k_t"} <= set(complete):
            p, b, k = complete["p_t"].value, complete["beta_hat"].value, complete["k_t"].value
            self.expect("cover_sandwich", p <= b <= k + 1, f"p_t={p}, beta_hat={b}, k_t={k}", t)
        else:
            self.record("cover_sandwich", SKIPPED, capped if "k_t" in profile else "k_t above ccw cap", t)

        if "grad" not in complete:
            self.record("grad_ge_half_degeneracy", SKIPPED, capped, t)
        else:
            delta, _ = degeneracy(self.G)
            value = complete["grad"].value
            self.expect("grad_ge_half_degeneracy", Fraction(delta, 2) <= value, f"degeneracy={delta}, grad={value}", t)

        chordal = self.chordality.chordal
        incomparability = self.incomparability
        if chordal:
            if "beta_hat" in complete:
                self.expect("chordal_beta_hat_one", complete["beta_hat"].value == 1,
                            f"beta_hat={complete['beta_hat'].value}", t)
            else:
                self.record("chordal_beta_hat_one", SKIPPED, capped, t)
        if incomparability:
            if {"beta_hat", "s_t"} <= set(complete):
                b, s = complete["beta_hat"].value, complete["s_t"].value
                self.expect("incomparability_star_minor", b <= max(s, 1), f"beta_hat={b}, s_t={s}", t)
            else:
                self.record("incomparability_star_minor", SKIPPED, capped, t)
        if chordal and incomparability:
            if "p_t" in complete:
                self.expect("interval_no_k22_minor", complete["p_t"].value <= 1, f"p_t={complete['p_t'].value}", t)
            else:
                self.record("interval_no_k22_minor", SKIPPED, capped, t)

    def check_monotone(self):
        for lower, upper in zip(self.t_values, self.t_values[1:]):
            a, b = self.profile(lower), self.profile(upper)
            names = [name for name in MONOTONE_PARAMS if name in a and name in b]
            if not all(a[name].exhaustive and b[name].exhaustive for name in names):
                self.record("monotone_in_depth", SKIPPED, f"t={lower}->{upper}: model cap reached", upper)
                continue
            broken = [f"{name} {a[name].value}->{b[name].value}" for name in names if a[name].value > b[name].value]
            self.expect("monotone_in_depth", not broken, "; ".join(broken) or f"t={lower}->{upper}", upper)

    # -- family checks ------------------------------------------------------------

    def check_complement_bipartite(self):
        G = self.G
        part = self.item.provenance["params"]["n"]
        connected = is_connected(G)
        for t in self.t_values:
            profile = self.profile(t)
            if connected:
                result = profile["beta_hat"]
                if result.exhaustive:
                    self.expect("complement_bipartite_beta_hat", result.value <= 2, f"beta_hat={result.value}", t)
                else:
                    self.record("complement_bipartite_beta_hat", SKIPPED, "model cap reached", t)
            # G itself is a t-minor, so this also holds for capped runs
            value = profile["grad"].value
            self.expect("complement_bipartite_grad", value >= Fraction(part - 1, 2),
                        f"grad={value}, (n-1)/2={Fraction(part - 1, 2)}", t)

    def check_obs2(self):
        G, model = self.G, self.item.model
        t = model.t
        Q = quotient(model)

        def orientable():
            cap = self.caps.orientation
            self.expect("obs2_incomparability", is_incomparability(G, cap) and is_incomparability(Q, cap),
                        "G and quotient(H)")

        self.attempt("obs2_incomparability", orientable)

        def host_width():
            value, _ = ccw_exact(G, self.caps.ccw)
            self.expect("obs2_ccw_one", value == 1, f"CCW(G)={value}")

        self.attempt("obs2_ccw_one", host_width)

        def quotient_star():
            s = largest_induced_star(Q, self.caps.mis).s
            self.expect("obs2_star", s >= t, f"quotient star has {s} leaves, t={t}", t)

        self.attempt("obs2_star", quotient_star, t)

        def minor_width():
            value, _ = ccw_exact(Q, self.caps.ccw)
            self.expect("obs2_minor_ccw", ceil(t / 2) <= value <= t, f"CCW(H)={value}, t={t}", t)

        self.attempt("obs2_minor_ccw", minor_width, t)

        def no_k22():
            p_g = largest_balanced_induced_biclique(G, self.caps.biclique).p
            p_q = largest_balanced_induced_biclique(Q, self.caps.biclique).p
            self.expect("obs2_no_k22", p_g <= 1 and p_q <= 1, f"p(G)={p_g}, p(H)={p_q}", t)

        self.attempt("obs2_no_k22", no_k22, t)

    def check_obs3(self):
        G, model = self.G, self.item.model
        t = model.t
        Q = quotient(model)

        def bicliques():
            p_g = largest_balanced_induced_biclique(G, self.caps.biclique).p
            self.expect("obs3_no_k22", p_g <= 1, f"p(G)={p_g}", t)
            p_q = largest_balanced_induced_biclique(Q, self.caps.biclique).p
            self.expect("obs3_minor_biclique", p_q >= t + 1, f"p(H)={p_q}, t+1={t + 1}", t)

        self.attempt("obs3_bicliques", bicliques, t)
        n = self.item.provenance["params"]["n"]
        if G.n <= self.caps.ccw:
            value, bound = ccw_exact(G, self.caps.ccw)[0], "exact"
        else:
            value, bound = ccw_upper(G)[0], "upper-bound"
        self.record("obs3_ccw", INFO, f"CCW(G)={value} ({bound}), n/2={Fraction(n, 2)}", t)

    # -- driver ---------------------------------------------------------------------

    def run(self) -> List[Dict[str, Any]]:
        if self.G.n == 0:
            self.record("graph", SKIPPED, "empty graph")
            return self.rows
        for check in (self.check_neighborhood_cover, self.check_local_covers, self.check_first_block,
                      self.check_ccw_upper, self.check_separators, self.check_chordal,
                      self.check_incomparability):
            self.attempt(check.__name__.replace("check_", ""), check)
        for t in self.t_values:
            self.attempt("depth", lambda: self.check_depth(t), t)
        self.attempt("monotone_in_depth", self.check_monotone)

        family = self.item.provenance.get("family")
        if family == "complement_bipartite":
            self.attempt("complement_bipartite", self.check_complement_bipartite)
        elif family == "obs2" and self.item.model is not None:
            self.check_obs2()
        elif family == "obs3" and self.item.model is not None:
            self.check_obs3()
        return self.rows


def verify_item(item: CorpusItem, t_values: Sequence[int], caps: SearchCaps) -> List[Dict[str, Any]]:
    return GraphChecks(item, t_values, caps).run()


@dataclass
class VerificationReport:
    t_values: List[int]
    caps: SearchCaps
    rows: List[Dict[str, Any]] = field(default_factory=list)

    def counts(self) -> Dict[str, int]:
        totals = {PASS: 0, FAIL: 0, SKIPPED: 0, INFO: 0}
        for row in self.rows:
            totals[row["status"]] += 1
        return totals

    @property
    def failures(self) -> List[Dict[str, Any]]:
        return [row for row in self.rows if row["status"] == FAIL]

    @property
    def exit_code(self) -> int:
        return EXIT_VERIFICATION if self.failures else EXIT_OK

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "toolkit_version": TOOLKIT_VERSION,
            "command": "verify",
            "t": list(self.t_values),
            "caps": asdict(self.caps),
            "summary": self.counts(),
            "rows": self.rows,
        }

    def to_json(self) -> str:
        return dump_json(self.to_dict())


class _VerifyJob:
    """Picklable per-item callable for the process pool"""

    def __init__(self, t_values: Sequence[int], caps: SearchCaps):
        self.t_values = list(t_values)
        self.caps = caps

    def __call__(self, item: CorpusItem) -> List[Dict[str, Any]]:
        return verify_item(item, self.t_values, self.caps)


def cmd_verify(items: Sequence[CorpusItem], t_values: Sequence[int], caps: Optional[SearchCaps] = None,
               workers: int = 1, verbose: bool = True) -> VerificationReport:
    """
    Args:
        items: Corpus in order; rows come back in the same order
        t_values: Depths for the minor checks
        caps: Search limits
        workers: Process count for the corpus loop
    """
    caps = caps or DEFAULT_CAPS
    report = VerificationReport(sorted(set(t_values)), caps)
    for rows in run_ordered(_VerifyJob(t_values, caps), list(items), workers, desc="Verifying", verbose=verbose):
        report.rows.extend(rows)
    return report
