"""Named suites that sweep a generated graph corpus and report per-instance verdicts.

Instances are independent, so they fan out over a process pool; rows are
returned sorted by the SHA-256 digest of the instance key.
"""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import ceil
from typing import Callable, Iterator

from .arrows import ramsey_number
from .bounds import chvatal_harary_value, goodness_value, triangle_bound
from .colorings import burr_coloring, verify_extremal
from .generate import gen_connected, gen_no_isolated, gen_trees
from .graph_core import from_graph6, longest_suspended_path, max_end_edge_matching, max_end_edge_star, to_graph6
from .lemmas import turan_consistent
from .trichotomy import (
    TrichotomyParams,
    TrichotomyViolation,
    classify_xyz,
    contract_to_core,
    core_bounds_check,
    prune_leaves,
    StarWitness,
    trichotomy_certificates,
    tree_trichotomy,
)


def worker_count() -> int:
    env = os.environ.get("RAMSEY_LAB_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("RAMSEY_LAB_THREADS must be positive")
        return n
    return os.cpu_count() or 1


def digest(key: str) -> str:
    return hashlib.sha256(key.encode()).hexdigest()


@dataclass(frozen=True)
class Suite:
    name: str
    default_n: int
    instances: Callable[[int], Iterator[str]]
    run: Callable[[str], dict]
    description: str


# -- goodness for m = 2 -----------------------------------------------------


def _goodness_instances(max_n: int) -> Iterator[str]:
    for n in range(3, max_n + 1):
        for g in gen_connected(n):
            yield to_graph6(g)


def _goodness_run(key: str) -> dict:
    g = from_graph6(key)
    cert = ramsey_number(g, 2, 2)
    expected = chvatal_harary_value(g)
    return {"value": cert.value, "expected": expected, "passed": cert.value == expected}


# -- Burr lower bound -------------------------------------------------------


def _lower_instances(max_n: int) -> Iterator[str]:
    for n in range(1, max_n + 1):
        for g in gen_connected(n):
            for m in (2, 3):
                for t in (1, 2, 3):
                    if n >= t and goodness_value(n, m, t) - 1 > 0:
                        yield f"{to_graph6(g)} {m} {t}"


def _lower_run(key: str) -> dict:
    g6, m, t = key.split()
    g, m, t = from_graph6(g6), int(m), int(t)
    c = burr_coloring(g.n, m, t)
    report = verify_extremal(c, g.n, t, m)
    return {"N": c.N, "passed": report.passed and c.N == goodness_value(g.n, m, t) - 1}


# -- triangle bound ---------------------------------------------------------

TRIANGLE_MAX_EDGES = 4


def _triangle_instances(max_n: int) -> Iterator[str]:
    for n in range(2, min(max_n, 2 * TRIANGLE_MAX_EDGES) + 1):
        for g in gen_no_isolated(n, TRIANGLE_MAX_EDGES):
            yield to_graph6(g)


def _triangle_run(key: str) -> dict:
    g = from_graph6(key)
    bound = triangle_bound(g.edge_count())
    cert = ramsey_number(g, 1, 3, max_N=bound)
    return {"value": cert.value, "bound": bound, "passed": cert.value is not None and cert.value <= bound}


# -- trichotomy sweep -------------------------------------------------------

ELL_RANGE = range(2, 6)


def _trichotomy_instances(max_n: int) -> Iterator[str]:
    for n in range(3, max_n + 1):
        for g in gen_connected(n):
            if g.excess_k() >= 1:
                yield to_graph6(g)


def _trichotomy_run(key: str) -> dict:
    g = from_graph6(key)
    k, n = g.excess_k(), g.n
    path = len(longest_suspended_path(g))
    matching = len(max_end_edge_matching(g))
    star = len(max_end_edge_star(g)[1])
    deg2 = sum(1 for d in g.degrees() if d >= 2)
    x, y, z = classify_xyz(g)
    replay = True
    trace = None
    if len(z) < n:
        gp, origin = prune_leaves(g)
        index = {v: i for i, v in enumerate(origin)}
        trace = contract_to_core(gp, [index[v] for v in z])
        replay = trace.expand() == gp and all(s.vertices_removed == s.edges_removed for s in trace.steps)
    failures = []
    pairs = []
    for q in range(3, n + 1):
        for ell in ELL_RANGE:
            params = TrichotomyParams(q, ell, k)
            if not params.non_degenerate:
                continue
            pairs.append((q, ell))
            if path >= q or matching >= ell:
                continue
            bound = ceil((n - params.alpha) / (ell - 1))
            if deg2 > params.alpha or star < bound:
                failures.append(f"q={q} ell={ell}: lemma bound")
            if trace is None or not core_bounds_check(trace.core, params, x, y, trace.gp.n).passed:
                failures.append(f"q={q} ell={ell}: core bounds")
    try:
        certs = trichotomy_certificates(g, pairs)
    except TrichotomyViolation as exc:
        failures.append(str(exc))
        certs = {}
    star_cases = sum(1 for c in certs.values() if isinstance(c, StarWitness))
    return {
        "star_cases": star_cases,
        "replay": replay,
        "failures": failures,
        "passed": replay and not failures,
    }


# -- tree trichotomy --------------------------------------------------------


def _tree_instances(max_n: int) -> Iterator[str]:
    for n in range(1, max_n + 1):
        for t in gen_trees(n):
            yield to_graph6(t)


def _tree_run(key: str) -> dict:
    t = from_graph6(key)
    checked = 0
    failures = []
    for a in range(1, t.n + 1):
        for b in range(1, t.n // (4 * a) + 1):
            for gamma in range(1, t.n // (4 * a * b) + 1):
                try:
                    tree_trichotomy(t, a, b, gamma)
                except (TrichotomyViolation, ValueError) as exc:
                    failures.append(f"a={a} b={b} g={gamma}: {exc}")
                checked += 1
    return {"checked": checked, "failures": failures, "passed": not failures}


# -- Turan consistency ------------------------------------------------------


def _turan_instances(max_n: int) -> Iterator[str]:
    return _goodness_instances(max_n)


def _turan_run(key: str) -> dict:
    g = from_graph6(key)
    bad = [s for s in range(2, g.n + 1) if not turan_consistent(g, s)]
    return {"failures": bad, "passed": not bad}


SUITES = {
    s.name: s
    for s in (
        Suite("goodness-m2", 5, _goodness_instances, _goodness_run, "r(G, 2K_2) against n+1 / n+2"),
        Suite("lower-bound", 6, _lower_instances, _lower_run, "Burr colorings pass the extremal check"),
        Suite("triangle", 8, _triangle_instances, _triangle_run, "r(G, K_3) <= 2*ell+1 for ell <= 4"),
        Suite("trichotomy", 9, _trichotomy_instances, _trichotomy_run, "star branch bounds and trace replay"),
        Suite("trees", 12, _tree_instances, _tree_run, "tree trichotomy for every n >= 4abg"),
        Suite("turan", 9, _turan_instances, _turan_run, "Turan threshold implies a complement clique"),
    )
}


def _run_chunk(args: tuple[str, list[str]]) -> list[dict]:
    name, keys = args
    run = SUITES[name].run
    return [{"key": key, "digest": digest(key), **run(key)} for key in keys]


def run_suite(name: str, max_n: int | None = None, workers: int | None = None, chunk: int = 256) -> list[dict]:
    """Rows for every instance of suite ``name``, sorted by digest."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    suite = SUITES[name]
    keys = list(suite.instances(suite.default_n if max_n is None else max_n))
    workers = worker_count() if workers is None else workers
    batches = [(name, keys[i : i + chunk]) for i in range(0, len(keys), chunk)]
    if workers <= 1:
        rows = [r for b in batches for r in _run_chunk(b)]
    else:
        with ProcessPoolExecutor(workers) as pool:
            rows = [r for part in pool.map(_run_chunk, batches) for r in part]
    rows.sort(key=lambda r: r["digest"])
    return rows

