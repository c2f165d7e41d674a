"""Re-check JSON certificates without trusting the code path that produced them.

Each document carries a ``kind`` tag. Witnesses are validated directly
against the input; positive arrowing verdicts are re-derived by a search at
a different symmetry level.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .arrows import SearchConfig, arrows
from .bounds import bounds_table
from .colorings import TwoColoring, find_blue_tKm, find_red_subgraph, red_component_sizes
from .graph_core import MultiGraph, SimpleGraph, from_graph6
from .lemmas import (
    BipartiteColoring,
    BlueBiclique,
    BlueClique,
    BlueDominators,
    ExtendedPath,
    PathExtensionInstance,
    RedMatching,
    is_independent_set,
)
from .trichotomy import (
    TrichotomyParams,
    certificate_from_json,
    certificate_problems,
    classify_xyz,
    core_bounds_check,
    prune_leaves,
)

RECHECK_PLAIN_MAX_N = 7


@dataclass
class VerifyReport:
    kind: str
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        return {"kind": self.kind, "passed": self.passed, "problems": self.problems}


def _recheck_config(N: int) -> SearchConfig:
    return SearchConfig(symmetry="none" if N <= RECHECK_PLAIN_MAX_N else "first_vertex", node_budget=None)


def _good_coloring_problems(c: TwoColoring, g: SimpleGraph, t: int, m: int) -> list[str]:
    out = []
    if find_red_subgraph(c, g) is not None:
        out.append(f"coloring of K_{c.N} contains a red copy of the graph")
    if find_blue_tKm(c, t, m) is not None:
        out.append(f"coloring of K_{c.N} contains a blue {t}K_{m}")
    return out


def _check_trichotomy(doc: dict) -> list[str]:
    g = from_graph6(doc["graph"])
    p = doc["params"]
    params = TrichotomyParams(p["q"], p["ell"], g.excess_k())
    out = []
    if params.alpha != p.get("alpha", params.alpha):
        out.append("stored alpha does not match (q, ell, k)")
    cert = certificate_from_json(doc["certificate"])
    out += certificate_problems(g, cert, params)
    trace = doc.get("trace")
    if trace is not None:
        gp, origin = prune_leaves(g)
        edges = [tuple(e) for e in trace["core_edges"]]
        x, y, z = classify_xyz(g)
        index = {v: i for i, v in enumerate(origin)}
        if sorted(trace["core_vertices"]) != sorted(index[v] for v in x | y):
            out.append("core vertex set is not X u Y")
        rebuilt = _replay(edges, trace["steps"], gp.n)
        if rebuilt is None or rebuilt != set(gp.edges()):
            out.append("trace does not expand to the pruned graph")
        core_n = len(trace["core_vertices"])
        pos = {v: i for i, v in enumerate(trace["core_vertices"])}
        core = MultiGraph.from_edges(core_n, [(pos[a], pos[b]) for a, b in edges])
        report = core_bounds_check(core, params, x, y, gp.n)
        out += [f"core bound fails: {c.name}" for c in report.failures()]
    return out


def _replay(core_edges, steps, n) -> set | None:
    edges = Counter((min(a, b), max(a, b)) for a, b in core_edges)
    for step in reversed(steps):
        if step["kind"] == "cycle":
            key, walk = (step["anchor"],) * 2, [step["anchor"], *step["removed"], step["anchor"]]
        else:
            u, w = step["ends"]
            key, walk = (min(u, w), max(u, w)), [u, *step["removed"], w]
        if len(step["removed"]) < 1 or edges[key] < 1:
            return None
        edges[key] -= 1
        for a, b in zip(walk, walk[1:]):
            edges[(min(a, b), max(a, b))] += 1
    if any(c > 1 or (c and (a == b or b >= n)) for (a, b), c in edges.items()):
        return None
    return {e for e, c in edges.items() if c}


def _check_tree(doc: dict) -> list[str]:
    t = from_graph6(doc["graph"])
    a, b, gamma = doc["a"], doc["b"], doc["gamma"]
    out = []
    if not (t.edge_count() == t.n - 1 and len(t.components()) == 1):
        out.append("input is not a tree")
    if t.n < 4 * a * b * gamma:
        out.append("n below 4abg")
    cert = certificate_from_json(doc["certificate"])
    need = {"suspended_path": a, "end_edge_matching": b, "end_edge_star": gamma}[cert.kind]
    return out + cert.problems(t, need)


def _check_arrows(doc: dict) -> list[str]:
    g = from_graph6(doc["graph"])
    N, t, m = doc["N"], doc["t"], doc["m"]
    if doc["arrows"] is None:
        return ["verdict is unknown"]
    if doc["arrows"] is False:
        if doc.get("counterexample") is None:
            return ["negative verdict without a coloring"]
        c = TwoColoring.from_json(doc["counterexample"])
        if c.N != N:
            return [f"coloring has N={c.N}, expected {N}"]
        return _good_coloring_problems(c, g, t, m)
    res = arrows(N, g, t, m, _recheck_config(N))
    return [] if res.arrows else ["re-run search found a good coloring"]


def _check_ramsey(doc: dict) -> list[str]:
    g = from_graph6(doc["graph"])
    t, m, value = doc["t"], doc["m"], doc["value"]
    if value is None:
        return ["value is unknown"]
    out = []
    if value > 1:
        if doc.get("lower_witness") is None:
            return ["no lower witness"]
        c = TwoColoring.from_json(doc["lower_witness"])
        if c.N != value - 1:
            out.append(f"lower witness on K_{c.N}, expected K_{value - 1}")
        out += _good_coloring_problems(c, g, t, m)
    res = arrows(value, g, t, m, _recheck_config(value))
    if not res.arrows:
        out.append(f"re-run search does not confirm K_{value} arrows")
    return out


def _check_extremal(doc: dict) -> list[str]:
    c = TwoColoring.from_json(doc["coloring"])
    n, t, m = doc["n"], doc["t"], doc["m"]
    out = []
    if max(red_component_sizes(c)) >= n:
        out.append(f"a red component has >= {n} vertices")
    if find_blue_tKm(c, t, m) is not None:
        out.append(f"blue {t}K_{m} present")
    if "N" in doc and doc["N"] != c.N:
        out.append("N does not match the coloring")
    return out


def _check_bounds(doc: dict) -> list[str]:
    g = from_graph6(doc["graph"])
    eps = doc.get("epsilon")
    fresh = bounds_table(g, doc["m"], doc["t"], Fraction(eps) if eps is not None else None)
    expected = [r.to_json() for r in fresh]
    return [] if expected == doc["table"] else ["bounds table differs from recomputation"]


def _check_path_extension(doc: dict) -> list[str]:
    inst = PathExtensionInstance(TwoColoring.from_json(doc["coloring"]), doc["a"], doc["b"], doc["c"], doc["d"])
    o = doc["outcome"]
    cls = {"extended_path": ExtendedPath, "blue_clique": BlueClique, "blue_dominators": BlueDominators}[o["kind"]]
    witness = cls(tuple(o["path"] if o["kind"] == "extended_path" else o["vertices"]))
    return witness.problems(inst)


def _check_hall(doc: dict) -> list[str]:
    bc = BipartiteColoring.from_json(doc["coloring"])
    o = doc["outcome"]
    if o["kind"] == "red_matching":
        return RedMatching(tuple(tuple(p) for p in o["pairs"])).problems(bc)
    return BlueBiclique(tuple(o["xs"]), tuple(o["ys"]), o["c"]).problems(bc)


def _check_complement_clique(doc: dict) -> list[str]:
    g = from_graph6(doc["graph"])
    vs = doc["clique"]
    if vs is None:
        return ["no clique recorded"]
    if len(vs) != doc["size"] or not is_independent_set(g, vs):
        return ["recorded set is not a clique of the complement of the requested size"]
    return []


CHECKERS = {
    "trichotomy": _check_trichotomy,
    "tree_trichotomy": _check_tree,
    "arrows": _check_arrows,
    "ramsey": _check_ramsey,
    "extremal": _check_extremal,
    "bounds": _check_bounds,
    "path_extension": _check_path_extension,
    "hall": _check_hall,
    "complement_clique": _check_complement_clique,
}


def verify_document(doc: dict) -> VerifyReport:
    kind = doc.get("kind")
    if kind not in CHECKERS:
        return VerifyReport(str(kind), [f"unknown document kind {kind!r}"])
    try:
        problems = CHECKERS[kind](doc)
    except (KeyError, TypeError, ValueError) as exc:
        problems = [f"malformed document: {type(exc).__name__}: {exc}"]
    return VerifyReport(kind, problems)

