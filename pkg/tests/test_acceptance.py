"""Acceptance criteria 1 to 10, each timed against its limit.

Every test appends one "criterion N: PASS|FAIL" line that the terminal
summary prints in order.
"""

import time
from itertools import combinations
from math import ceil

import networkx as nx
import pytest

from ramsey_lab.arrows import SearchConfig, arrows, ramsey_number
from ramsey_lab.bounds import chvatal_harary_value, goodness_value, triangle_bound
from ramsey_lab.colorings import TwoColoring, burr_coloring, verify_extremal
from ramsey_lab.corpus import run_suite
from ramsey_lab.generate import gen_connected, gen_no_isolated
from ramsey_lab.graph_core import SimpleGraph
from ramsey_lab.lemmas import (
    BipartiteColoring,
    PathExtensionInstance,
    RedMatching,
    complement_clique,
    hall_witness,
    is_independent_set,
    path_extension_witness,
    turan_consistent,
)
from ramsey_lab.trichotomy import (
    TrichotomyParams,
    certificate_problems,
    classify_xyz,
    contract_to_core,
    core_bounds_check,
    prune_leaves,
    trichotomy_certificates,
)

import conftest
from oracles import (
    all_colorings,
    edge_set,
    has_blue_tKm,
    has_red_copy,
    max_end_edge_matching_size,
    max_end_edge_star_size,
    saturating_matching_exists,
    suspended_path_orders,
)

MINUTE = 60.0


class Criterion:
    """Times a criterion body and records its summary line."""

    def __init__(self, number: int, limit: float, charged: float = 0.0):
        self.number, self.limit, self.charged = number, limit, charged
        self.failures: list[str] = []
        self.detail = ""

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start + self.charged
        if exc is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        if elapsed > self.limit:
            self.failures.append(f"over time limit {self.limit:.0f}s")
        verdict = "FAIL" if self.failures else "PASS"
        extra = "; ".join(self.failures[:3]) if self.failures else self.detail
        conftest.ACCEPTANCE_LINES.append(f"criterion {self.number}: {verdict} ({elapsed:.1f}s) {extra}")
        if exc is None:
            assert not self.failures, self.failures
        return False


# -- shared connected corpus for n <= 9 ---------------------------------------

_CORPUS: dict = {}


def connected_corpus() -> tuple[dict[int, list[SimpleGraph]], float]:
    if not _CORPUS:
        start = time.monotonic()
        graphs = {n: list(gen_connected(n)) for n in range(1, 10)}
        _CORPUS["graphs"], _CORPUS["secs"] = graphs, time.monotonic() - start
    return _CORPUS["graphs"], _CORPUS["secs"]


# -- 1 ---------------------------------------------------------------------


def test_criterion_1_goodness_m2():
    with Criterion(1, MINUTE) as cr:
        count = 0
        for n in range(3, 6):
            for g in gen_connected(n):
                complete = g.edge_count() == n * (n - 1) // 2
                expected = n + 2 if complete else n + 1
                value = ramsey_number(g, 2, 2).value
                if value != expected or chvatal_harary_value(g) != expected:
                    cr.failures.append(f"{g.edges()}: got {value}, expected {expected}")
                count += 1
        cr.detail = f"{count} graphs, r(G, 2K_2) exact"


# -- 2 ---------------------------------------------------------------------


def test_criterion_2_star():
    with Criterion(2, 10 * MINUTE) as cr:
        for leaves, t, m, expected in ((3, 2, 2, 5), (4, 2, 2, 6), (3, 2, 3, 8)):
            assert leaves * (m - 1) + t == expected
            cert = ramsey_number(SimpleGraph.star(leaves), t, m)
            if not cert.complete or cert.value != expected:
                cr.failures.append(f"K_1,{leaves} t={t} m={m}: bracket {cert.bracket}")
        cr.detail = "r(K_1,3,2K_2)=5, r(K_1,4,2K_2)=6, r(K_1,3,2K_3)=8 closed"


# -- 3 ---------------------------------------------------------------------


def test_criterion_3_lower_bound():
    with Criterion(3, MINUTE) as cr:
        count = 0
        for n in range(1, 7):
            for g in gen_connected(n):
                for m in (2, 3):
                    for t in (1, 2, 3):
                        N = goodness_value(n, m, t) - 1
                        if n < t or N <= 0:
                            continue
                        c = burr_coloring(n, m, t)
                        red = nx.Graph(c.red_edges())
                        red.add_nodes_from(range(c.N))
                        biggest = max(len(comp) for comp in nx.connected_components(red))
                        ok = c.N == N and verify_extremal(c, n, t, m).passed and biggest < n
                        if not ok:
                            cr.failures.append(f"n={n} m={m} t={t}")
                        count += 1
        cr.detail = f"{count} (G, m, t) instances"


# -- 4 ---------------------------------------------------------------------


def test_criterion_4_triangle():
    with Criterion(4, 10 * MINUTE) as cr:
        count = 0
        for n in range(2, 9):
            for g in gen_no_isolated(n, 4):
                bound = triangle_bound(g.edge_count())
                assert bound == 2 * g.edge_count() + 1 <= 9
                cert = ramsey_number(g, 1, 3, max_N=bound)
                if cert.value is None or cert.value > bound:
                    cr.failures.append(f"{g.edges()}: bracket {cert.bracket} vs {bound}")
                count += 1
        p4 = ramsey_number(SimpleGraph.path(4), 1, 3).value
        if p4 != 7:
            cr.failures.append(f"r(P_4, K_3) = {p4}")
        cr.detail = f"{count} graphs within 2l+1; r(P_4, K_3) = 7"


# -- 5 and 7 -----------------------------------------------------------------


def _sweep_graph(g: SimpleGraph) -> tuple[list[str], bool]:
    """Lemma bounds against oracles, core bounds, and trace replay for one graph."""
    n, k = g.n, g.excess_k()
    e = edge_set(g)
    path = suspended_path_orders(n, e)
    matching = max_end_edge_matching_size(n, e)
    star = max_end_edge_star_size(n, e)
    non_leaves = sum(1 for d in g.degrees() if d >= 2)
    x, y, z = classify_xyz(g)
    trace, replay = None, True
    if len(z) < n:
        gp, origin = prune_leaves(g)
        index = {v: i for i, v in enumerate(origin)}
        trace = contract_to_core(gp, [index[v] for v in z])
        replay = trace.expand() == gp
    failures, pairs = [], []
    for q in range(3, n + 1):
        for ell in range(2, 6):
            params = TrichotomyParams(q, ell, k)
            if not params.non_degenerate:
                continue
            pairs.append((q, ell))
            if path >= q or matching >= ell:
                continue
            if non_leaves > params.alpha or star < ceil((n - params.alpha) / (ell - 1)):
                failures.append(f"{sorted(g.edges())} q={q} ell={ell}: lemma bound")
            if trace is None or not core_bounds_check(trace.core, params, x, y, trace.gp.n).passed:
                failures.append(f"{sorted(g.edges())} q={q} ell={ell}: core bounds")
    for (q, ell), cert in trichotomy_certificates(g, pairs).items():
        if certificate_problems(g, cert, TrichotomyParams(q, ell, k)):
            failures.append(f"{sorted(g.edges())} q={q} ell={ell}: certificate")
    return failures, replay


_SWEEP: dict = {}


def trichotomy_sweep() -> dict:
    if not _SWEEP:
        graphs, gen_secs = connected_corpus()
        start = time.monotonic()
        failures, replay_failures, count = [], [], 0
        for n in range(3, 10):
            for g in graphs[n]:
                if g.excess_k() < 1:
                    continue
                f, replay = _sweep_graph(g)
                failures += f
                if not replay:
                    replay_failures.append(sorted(g.edges()))
                count += 1
        _SWEEP.update(
            failures=failures,
            replay_failures=replay_failures,
            count=count,
            secs=time.monotonic() - start + gen_secs,
        )
    return _SWEEP


def test_criterion_5_trichotomy_soundness():
    sweep = trichotomy_sweep()
    with Criterion(5, 5 * MINUTE, charged=sweep["secs"]) as cr:
        cr.failures += sweep["failures"]
        cr.detail = f"{sweep['count']} graphs with k >= 1, all (q, ell); corpus generation charged"


def test_criterion_7_contraction_replay():
    sweep = trichotomy_sweep()
    with Criterion(7, 5 * MINUTE, charged=sweep["secs"]) as cr:
        cr.failures += [f"replay failed for {e}" for e in sweep["replay_failures"]]
        cr.detail = f"{sweep['count']} traces expand to G'; shares the criterion 5 pass"


# -- 6 ---------------------------------------------------------------------


def test_criterion_6_tree_trichotomy():
    with Criterion(6, MINUTE) as cr:
        rows = run_suite("trees", 12, workers=1)
        cr.failures += [r["key"] for r in rows if not r["passed"]]
        cr.detail = f"{len(rows)} trees, {sum(r['checked'] for r in rows)} (a, b, g) triples"


# -- 8 ---------------------------------------------------------------------


def test_criterion_8_path_extension_and_hall():
    with Criterion(8, 5 * MINUTE) as cr:
        instances = 0
        for a in range(2, 6):
            for b in range(1, 3):
                N = a + b
                spine = [(i, i + 1) for i in range(a - 1)]
                free = [p for p in combinations(range(N), 2) if p not in spine]
                cds = [(c, d) for c in range(1, a + 2) for d in range(1, a + 1) if a >= b * (c - 1) + d]
                for mask in range(1 << len(free)):
                    red = spine + [p for i, p in enumerate(free) if mask >> i & 1]
                    col = TwoColoring.from_red_edges(N, red)
                    for c, d in cds:
                        inst = PathExtensionInstance(col, a, b, c, d)
                        if path_extension_witness(inst).problems(inst):
                            cr.failures.append(f"path a={a} b={b} c={c} d={d} mask={mask}")
                        instances += 1
        colorings = 0
        for a in range(1, 4):
            for b in range(a, 5):
                for code in range(1 << (a * b)):
                    bc = BipartiteColoring.from_bits(a, b, code)
                    out = hall_witness(bc)
                    if out.problems(bc) or isinstance(out, RedMatching) != saturating_matching_exists(a, b, bc.red):
                        cr.failures.append(f"hall a={a} b={b} code={code}")
                    colorings += 1
        cr.detail = f"{instances} path-extension instances, {colorings} bipartite colorings"


# -- 9 ---------------------------------------------------------------------


def test_criterion_9_complement_clique():
    graphs, gen_secs = connected_corpus()
    with Criterion(9, MINUTE, charged=gen_secs) as cr:
        p63 = SimpleGraph.path(63)
        assert p63.excess_k() == 1 <= 63 * 63 / 7
        found = complement_clique(p63, 4)
        if found is None or len(found) != 4 or not is_independent_set(p63, found):
            cr.failures.append(f"P_63: got {found}")
        count = 0
        for n in range(1, 10):
            for g in graphs[n]:
                for size in range(2, n + 1):
                    if not turan_consistent(g, size):
                        cr.failures.append(f"Turan {sorted(g.edges())} size {size}")
                count += 1
        cr.detail = f"P_63 gives {found}; Turan consistent on {count} graphs (generation charged)"


# -- 10 ----------------------------------------------------------------------


def small_graphs() -> list[SimpleGraph]:
    out = []
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= 4:
            out.append(SimpleGraph.from_edges(h.number_of_nodes(), list(h.edges())))
    return out


def test_criterion_10_oracle_equivalence():
    with Criterion(10, 5 * MINUTE) as cr:
        gs = small_graphs()
        assert len(gs) == 1 + 2 + 4 + 11
        tms = [(t, m) for t in (1, 2) for m in (1, 2, 3)]
        checked = 0
        for N in range(1, 6):
            # naive verdicts from one pass over all 2^C(N,2) colorings
            naive = {(i, tm): True for i in range(len(gs)) for tm in tms}
            for red in all_colorings(N):
                blue = {tm for tm in tms if has_blue_tKm(N, red, *tm)}
                for i, g in enumerate(gs):
                    if all(tm in blue for tm in tms):
                        break
                    if has_red_copy(N, red, g.n, g.edges()):
                        continue
                    for tm in tms:
                        if tm not in blue:
                            naive[(i, tm)] = False
            for (i, (t, m)), expected in naive.items():
                got = arrows(N, gs[i], t, m, SearchConfig(symmetry="full")).arrows
                plain = arrows(N, gs[i], t, m, SearchConfig(symmetry="none")).arrows
                if got is not expected or plain is not expected:
                    cr.failures.append(f"N={N} G={gs[i].edges()} t={t} m={m}: {got}/{plain} vs {expected}")
                checked += 1
        cr.detail = f"{checked} (N, G, t, m) verdicts match full enumeration"
