"""Desk-scale regression checks for each theorem, producing ``TheoremReport``s."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from oddsum import families as fam
from oddsum.chios import odd_sum_chromatic, oracle_odd_sum_chromatic, validate_odd_sum_coloring
from oddsum.coloring import chromatic_number, chromatic_number_induced
from oddsum.corpus import DEFAULT_SEED, connected_catalog, random_graphs, random_sparse_graphs
from oddsum.domination import (
    brute_force_odd_dominating_sets,
    count_odd_dominating_sets,
    enumerate_odd_dominating_sets,
    forced_excluded_vertices,
    is_odd_dominating,
    solve_odd_domination,
)
from oddsum.graph import (
    Graph,
    VertexSet,
    build_graph,
    girth,
    is_biconnected,
    is_bipartite,
    iter_bits,
    path_graph,
    planarity_necessary,
    popcount,
)
from oddsum.surfaces import (
    chios_surface_lower_bound,
    gap_divergence_table,
    heawood_number,
    product_genus_bound,
)


@dataclass
class Claim:
    claim: str
    expected: Any
    observed: Any
    passed: bool


@dataclass
class TheoremReport:
    theorem: str
    params: dict[str, Any]
    claims: list[Claim] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def check(self, claim: str, expected: Any, observed: Any, passed: bool | None = None) -> bool:
        ok = expected == observed if passed is None else passed
        self.claims.append(Claim(claim, expected, observed, bool(ok)))
        return bool(ok)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "passed": self.passed,
            "wall_time": round(self.wall_time, 3),
            "claims": [
                {"claim": c.claim, "expected": repr(c.expected), "observed": repr(c.observed), "passed": c.passed}
                for c in self.claims
            ],
        }

    def render(self) -> str:
        head = f"{self.theorem} {self.params}: {'PASS' if self.passed else 'FAIL'} ({self.wall_time:.2f}s)"
        lines = [head]
        for c in self.claims:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.claim}: expected {c.expected!r}, observed {c.observed!r}")
        return "\n".join(lines)


def universal_bounds_hold(g: Graph, chios: int) -> bool:
    """chi_os <= 2 chi, and chi_os <= 4 for bipartite graphs."""
    chi = chromatic_number(g)[0]
    if chios > 2 * chi:
        return False
    return is_bipartite(g) is None or chios <= 4


def _chios_claims(report: TheoremReport, g: Graph, expected: int, label: str = "chi_os") -> None:
    cert = odd_sum_chromatic(g)
    report.check(label, expected, cert.chios)
    ok, _ = validate_odd_sum_coloring(g, cert.coloring)
    report.check(f"{label} certificate is a valid odd-sum coloring", True, ok)
    report.check(f"{label} certificate uses {cert.chios} colors", cert.chios, len(set(cert.coloring)))
    report.check("chi_os <= 2 chi (and <= 4 if bipartite)", True, universal_bounds_hold(g, cert.chios))


# -- Proposition A and the GF(2) solver ------------------------------------


def small_graph_corpus(max_n: int = 8, samples: int = 200, seed: int = DEFAULT_SEED) -> list[Graph]:
    """Connected catalog up to min(max_n, 6) vertices, plus random graphs on 7..max_n vertices."""
    graphs = list(connected_catalog(min(max_n, 6)))
    if max_n >= 7:
        graphs += random_graphs(seed, samples, 7, max_n)
    return graphs


def verify_propA(max_n: int = 8, samples: int = 200, seed: int = DEFAULT_SEED) -> TheoremReport:
    report = TheoremReport("propA", {"max_n": max_n, "samples": samples, "seed": seed})
    corpus = small_graph_corpus(max_n, samples, seed)
    mismatches, bound_failures, gf2_mismatches, empty = [], 0, [], 0
    for i, g in enumerate(corpus):
        solver = odd_sum_chromatic(g).chios
        if solver != oracle_odd_sum_chromatic(g):
            mismatches.append(i)
        if not universal_bounds_hold(g, solver):
            bound_failures += 1
        brute = brute_force_odd_dominating_sets(g)
        if not brute:
            empty += 1
        if {s.bits for s in enumerate_odd_dominating_sets(g)} != {s.bits for s in brute}:
            gf2_mismatches.append(i)
    report.check(f"solver equals exhaustive oracle on {len(corpus)} graphs", [], mismatches)
    report.check("GF(2) solutions equal brute force", [], gf2_mismatches)
    report.check("every graph has an odd-dominating set", 0, empty)
    report.check("chi_os <= 2 chi (and <= 4 if bipartite)", 0, bound_failures)
    return report


# -- Lemma 2: path gadgets --------------------------------------------------


def interior_odd_subsets(g: Graph, interior: int) -> list[int]:
    """All subsets (bitmasks) with odd |N[x] & S| for every x in ``interior``."""
    closed = [g.closed_mask(v) for v in range(g.n)]
    targets = [closed[x] for x in iter_bits(interior)]
    return [s for s in range(1 << g.n) if all(popcount(c & s) & 1 for c in targets)]


def brute_path_extension(length: int, v_in: bool, w_in: bool) -> list[tuple[int, ...]]:
    """Interior patterns of a v,w-path that make every interior vertex odd."""
    p = path_graph(length + 1)
    interior = ((1 << length) - 1) ^ 1
    out = []
    for s in interior_odd_subsets(p, interior):
        if bool(s & 1) == v_in and bool(s >> length & 1) == w_in:
            out.append(tuple(i for i in range(1, length) if s >> i & 1))
    return out


def lemma2_endpoint_forcing(a: int, b: int, k: int, brute_limit: int = 20) -> bool:
    """Every set odd at all interior vertices of G_{a,b,k} is odd at v and w too.

    Interior constraints never couple two paths, so each path is solved on its
    own for every endpoint choice; graphs small enough are also checked whole.
    """
    g = fam.build_G_abk(a, b, k)
    v, w = g.find("v"), g.find("w")
    lengths = [3 * k + 1] * a + [3 * k + 2] * b
    for v_in in (False, True):
        for w_in in (False, True):
            at_v, at_w = int(v_in), int(w_in)
            for length in lengths:
                pats = brute_path_extension(length, v_in, w_in)
                if len(pats) != 1:
                    return False
                at_v += 1 in pats[0]
                at_w += (length - 1) in pats[0]
            if at_v % 2 == 0 or at_w % 2 == 0:
                return False
    if g.n <= brute_limit:
        interior = ((1 << g.n) - 1) ^ (1 << v) ^ (1 << w)
        for s in interior_odd_subsets(g, interior):
            if not is_odd_dominating(g, VertexSet(g.n, s))[0]:
                return False
    return True


FIGURE2_ROWS = {
    # (length, v_in, w_in) -> interior positions in D
    (7, False, False): (2, 5),
    (7, True, False): (3, 6),
    (7, True, True): (1, 2, 3, 4, 5, 6),
    (8, False, False): (1, 4, 7),
    (8, True, False): (3, 6),
    (8, True, True): (1, 2, 3, 4, 5, 6, 7),
}
FIGURE4_ROWS = {
    (4, False, False): (2,),
    (4, True, False): (3,),
    (4, True, True): (1, 2, 3),
}


def verify_lemma2(k: int = 1) -> TheoremReport:
    report = TheoremReport("lemma2", {"k": k})
    for a in (1, 3):
        for b in (1, 3):
            report.check(f"G_{{{a},{b},{k}}} interior oddness forces v and w", True,
                         lemma2_endpoint_forcing(a, b, k))
    for rows, name in ((FIGURE2_ROWS, "path gadget"), (FIGURE4_ROWS, "triple subdivision")):
        for (length, v_in, w_in), expected in rows.items():
            got = fam.path_gadget_extension(length % 3, v_in, w_in, length)
            report.check(f"{name} length {length} v_in={v_in} w_in={w_in}", expected, got)
    for length in range(4, 15):
        if length % 3 == 0:
            continue
        for v_in in (False, True):
            for w_in in (False, True):
                got = fam.path_gadget_extension(length % 3, v_in, w_in, length)
                brute = brute_path_extension(length, v_in, w_in)
                report.check(f"extension rule matches brute force, length {length} ({v_in},{w_in})",
                             [got], brute)
    return report


# -- Theorem 1 and its odd-degree variant ----------------------------------


def verify_thm1(delta: int = 4, k: int = 1) -> TheoremReport:
    report = TheoremReport("thm1", {"delta": delta, "k": k})
    g = fam.build_J(delta, k) if delta % 2 == 0 else fam.build_J_odd(delta, k)
    report.check("girth", 4 * k + 1, girth(g))
    report.check("max degree", delta, g.max_degree())
    report.check("planarity edge bound", True, planarity_necessary(g))
    system = solve_odd_domination(g)
    report.check("nullity", 0, system.nullity)
    leaves = {v for v in range(g.n) if g.labels[v].endswith(("left", "right"))}
    expected_d = VertexSet.of(g.n, (v for v in range(g.n) if v not in leaves))
    report.check("unique odd-dominating set is every non-leaf vertex", True,
                 system.particular == expected_d)
    report.check("chi(G[D])", 3, chromatic_number_induced(g, expected_d))
    report.check("chi(G - D)", 3, chromatic_number_induced(g, expected_d.complement()))
    _chios_claims(report, g, 6)
    return report


# -- Theorem 3 ----------------------------------------------------------------


def verify_thm3(delta: int = 4, g: int = 6, samples: int = 100, seed: int = DEFAULT_SEED) -> TheoremReport:
    report = TheoremReport("thm3", {"delta": delta, "g": g, "samples": samples, "seed": seed})
    graph = fam.build_bipartite_family(delta, g)
    report.check("bipartite", True, is_bipartite(graph) is not None)
    gam = girth(graph)
    report.check(f"girth >= {g}", True, gam, passed=gam >= g)
    report.check("max degree", delta, graph.max_degree())
    report.check("planarity edge bound", True, planarity_necessary(graph))
    _chios_claims(report, graph, 4)
    bad_ods, bad_indep = subdivision_invariance_failures(samples, seed)
    report.check("triple subdivision preserves ods (brute force)", [], bad_ods)
    report.check("triple subdivision keeps D and V-D non-independent", [], bad_indep)
    report.check("parallel paths preserve ods (brute force)", [], parallel_path_failures(samples, seed))
    return report


def _neither_independent(g: Graph) -> bool:
    for d in enumerate_odd_dominating_sets(g):
        for part in (d, d.complement()):
            if not any(g.adj[v] & part.bits for v in part):
                return False
    return True


def subdivision_invariance_failures(samples: int = 100, seed: int = DEFAULT_SEED) -> tuple[list[int], list[int]]:
    # keep n + 3m <= 18 so both sides stay brute-forceable
    graphs = random_sparse_graphs(seed, samples, 2, 6, lambda n: (18 - n) // 3)
    bad_ods, bad_indep = [], []
    for i, g in enumerate(graphs):
        h = fam.subdivide_edges(g, 3)
        if len(brute_force_odd_dominating_sets(h)) != len(brute_force_odd_dominating_sets(g)):
            bad_ods.append(i)
        if _neither_independent(g) and not _neither_independent(h):
            bad_indep.append(i)
    return bad_ods, bad_indep


def parallel_path_failures(samples: int = 100, seed: int = DEFAULT_SEED) -> list[int]:
    graphs = random_graphs(seed + 1, samples, 2, 8)
    bad = []
    for i, g in enumerate(graphs):
        for length in (4, 5):
            h = fam.add_parallel_paths(g, 0, 1, 2, length)
            if h.n > 18:
                continue
            if len(brute_force_odd_dominating_sets(h)) != len(brute_force_odd_dominating_sets(g)):
                bad.append(i)
    return bad


# -- Observation 5 and Theorem 4 -------------------------------------------


def theorem4_H() -> Graph:
    """The 8-vertex graph: K4 on v1..v4, w12, w34, and pendant x1, x3."""
    labels = ["v1", "v2", "v3", "v4", "w12", "w34", "x1", "x3"]
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1), (5, 2), (5, 3), (6, 0), (7, 2)]
    return build_graph(8, edges, labels)


def verify_obs5(samples: int = 200, seed: int = DEFAULT_SEED) -> TheoremReport:
    report = TheoremReport("obs5", {"samples": samples, "seed": seed})
    h = theorem4_H()
    forced = forced_excluded_vertices(h)
    report.check("x1, x3 forced out of H's odd-dominating sets", True,
                 {h.find("x1"), h.find("x3")} <= set(forced))
    core = VertexSet.of(8, (h.find(x) for x in ("v1", "v2", "v3", "v4", "w12", "w34")))
    report.check("{v1..v4, w12, w34} is odd-dominating in H", True, is_odd_dominating(h, core)[0])
    report.check("H has exactly that odd-dominating set", [core.bits],
                 [s.bits for s in brute_force_odd_dominating_sets(h)])
    eb = fam.extended_bowtie()
    report.check("extended bowtie leaves are forced out", True,
                 set(eb.find_all("leaf")) <= set(forced_excluded_vertices(eb)))
    unsound = []
    for i, g in enumerate(small_graph_corpus(8, samples, seed)):
        forced = forced_excluded_vertices(g).bits
        if any(s.bits & forced for s in brute_force_odd_dominating_sets(g)):
            unsound.append(i)
    report.check("forced exclusions are sound against brute force", [], unsound)
    return report


def verify_thm4() -> TheoremReport:
    report = TheoremReport("thm4", {})
    g = fam.build_theorem4_graph()
    report.check("vertex count", 36, g.n)
    report.check("max degree", 5, g.max_degree())
    report.check("2-connected", True, is_biconnected(g))
    report.check("planarity edge bound", True, planarity_necessary(g))
    report.check("odd-dominating sets", 1, count_odd_dominating_sets(g))
    d = solve_odd_domination(g).particular
    report.check("D = V minus {x1, x3, leaves}", fam.theorem4_core(g).to_list(), d.to_list())
    report.check("|D|", 26, len(d))
    report.check("chi(G[D])", 4, chromatic_number_induced(g, d))
    report.check("chi(G - D)", 4, chromatic_number_induced(g, d.complement()))
    _chios_claims(report, g, 8)
    return report


# -- Lemma 6 and Theorem 7 ----------------------------------------------------


def verify_lemma6(samples: int = 100, seed: int = DEFAULT_SEED, chios_samples: int = 30) -> TheoremReport:
    report = TheoremReport("lemma6", {"samples": samples, "seed": seed})
    graphs = random_graphs(seed + 2, samples, 1, 8)
    bad_count, bad_chios = [], []
    for i, g in enumerate(graphs):
        v = i % g.n
        gb = fam.attach_bowtie(g, v)
        if len(brute_force_odd_dominating_sets(gb)) != 4 * len(brute_force_odd_dominating_sets(g)):
            bad_count.append(i)
        if i < chios_samples and odd_sum_chromatic(gb).chios < odd_sum_chromatic(g).chios:
            bad_chios.append(i)
    report.check("ods(G^B_v) = 4 ods(G) (brute force)", [], bad_count)
    report.check("chi_os(G^B_v) >= chi_os(G)", [], bad_chios)
    k1 = fam.attach_bowtie(build_graph(1, []), 0)
    report.check("K1 plus bowtie has 4 odd-dominating sets", 4, len(brute_force_odd_dominating_sets(k1)))
    return report


def verify_thm7(t_max: int = 3, chios_t_max: int = 2) -> TheoremReport:
    report = TheoremReport("thm7", {"t_max": t_max, "chios_t_max": chios_t_max})
    for t in range(t_max + 1):
        g = fam.build_Gt(t)
        report.check(f"ods(G_{t})", 4**t, count_odd_dominating_sets(g))
        if t <= chios_t_max:
            _chios_claims(report, g, 8, label=f"chi_os(G_{t})")
    return report


# -- Surfaces -------------------------------------------------------------------


def verify_thm8(g: int = 30, g_max: int = 240, scan_to: int = 5000) -> TheoremReport:
    report = TheoremReport("thm8", {"g": g, "g_max": g_max})
    bound = chios_surface_lower_bound(g)
    h = heawood_number(g)
    report.check(f"bound({g}) exceeds Heawood number {h}", True, bound.bound, passed=bound.bound > h)
    report.check("witness K_2 box K_n certifies the bound", True, bound.consistent)
    rows = gap_divergence_table(g_max)
    gaps = [r[3] for r in rows]
    report.check("gap strictly increasing on sampled genera", True, gaps,
                 passed=all(x < y for x, y in zip(gaps, gaps[1:])))
    below = [x for x in range(30, scan_to + 1) if chios_surface_lower_bound(x).bound <= heawood_number(x)]
    report.check(f"bound > Heawood for every g in 30..{scan_to}", [], below)
    chain = [n for n in range(5, 100, 2) if 2 * n < chios_surface_lower_bound(product_genus_bound(n)).bound]
    report.check("2n >= bound(genus bound of K_2 box K_n) for odd n in 5..99", [], chain)
    return report


def verify_k2kn(ns: tuple[int, ...] = (3, 5)) -> TheoremReport:
    report = TheoremReport("k2kn", {"n": list(ns)})
    for n in ns:
        _chios_claims(report, fam.product_k2_kn(n), 2 * n, label=f"chi_os(K_2 box K_{n})")
    return report


VERIFIERS: dict[str, Callable[..., TheoremReport]] = {
    "propA": verify_propA,
    "lemma2": verify_lemma2,
    "thm1": verify_thm1,
    "thm3": verify_thm3,
    "obs5": verify_obs5,
    "thm4": verify_thm4,
    "lemma6": verify_lemma6,
    "thm7": verify_thm7,
    "thm8": verify_thm8,
    "k2kn": verify_k2kn,
}


def run_verifier(name: str, **params: Any) -> TheoremReport:
    if name not in VERIFIERS:
        raise KeyError(f"unknown theorem id {name!r}; choose from {sorted(VERIFIERS)}")
    start = time.perf_counter()
    report = VERIFIERS[name](**params)
    report.wall_time = time.perf_counter() - start
    return report
