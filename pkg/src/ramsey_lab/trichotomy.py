"""Constructive trichotomy for connected sparse graphs.

A connected graph with n vertices and n+k-2 edges has a suspended path of
order q, or a matching of ``ell`` end-edges, or else few vertices of degree
>= 2 (at most alpha = (q-2)(2 ell + 3k - 8) + 1) and hence a large end-edge star.
The star branch is certified through the leaf-pruned graph G' and its
contracted multigraph core G''.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import ceil

from .graph_core import (
    MultiGraph,
    SimpleGraph,
    bits,
    component_mask,
    end_edge_structure,
    is_connected,
    is_suspended_path,
    longest_suspended_path,
    max_end_edge_matching,
    max_end_edge_star,
)


class DegenerateParameters(ValueError):
    pass


class EmptyPruneError(ValueError):
    """Removing the leaves left nothing (the graph is a single edge)."""


class WholeCycleError(ValueError):
    """The pruned graph is entirely degree-2 vertices, i.e. the graph is a cycle."""


class TrichotomyViolation(RuntimeError):
    """A construction produced a witness that fails its bounds."""


@dataclass(frozen=True)
class TrichotomyParams:
    q: int
    ell: int
    k: int
    alpha: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", (self.q - 2) * (2 * self.ell + 3 * self.k - 8) + 1)

    @property
    def slack(self) -> int:
        """2 ell + 3k - 8, the core edge budget."""
        return 2 * self.ell + 3 * self.k - 8

    @property
    def non_degenerate(self) -> bool:
        return self.slack >= 1

    @property
    def star_bound_for(self):
        return lambda n: ceil((n - self.alpha) / (self.ell - 1))


# -- certificates ---------------------------------------------------------


@dataclass(frozen=True)
class SuspendedPath:
    path: tuple[int, ...]
    kind = "suspended_path"

    def problems(self, g: SimpleGraph, min_order: int) -> list[str]:
        out = []
        if not is_suspended_path(g, self.path):
            out.append("not a suspended path of the graph")
        if len(self.path) < min_order:
            out.append(f"order {len(self.path)} < {min_order}")
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "path": list(self.path)}


@dataclass(frozen=True)
class EndEdgeMatching:
    edges: tuple[tuple[int, int], ...]
    kind = "end_edge_matching"

    def problems(self, g: SimpleGraph, min_size: int) -> list[str]:
        out = []
        seen: set[int] = set()
        for u, v in self.edges:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                out.append(f"({u}, {v}) is not an edge")
                continue
            if g.degree(u) != 1 and g.degree(v) != 1:
                out.append(f"({u}, {v}) is not an end-edge")
            if u in seen or v in seen:
                out.append(f"({u}, {v}) shares a vertex")
            seen |= {u, v}
        if len(self.edges) < min_size:
            out.append(f"size {len(self.edges)} < {min_size}")
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class EndEdgeStar:
    center: int | None
    leaves: tuple[int, ...]
    kind = "end_edge_star"

    def problems(self, g: SimpleGraph, min_size: int) -> list[str]:
        out = []
        if len(set(self.leaves)) != len(self.leaves):
            out.append("repeated leaf")
        for leaf in self.leaves:
            if self.center is None or not g.has_edge(self.center, leaf) or g.degree(leaf) != 1:
                out.append(f"{leaf} is not a leaf at the center")
        if len(self.leaves) < min_size:
            out.append(f"star has {len(self.leaves)} end-edges < {min_size}")
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "center": self.center, "leaves": list(self.leaves)}


@dataclass(frozen=True)
class StarWitness:
    center: int | None
    leaves: tuple[int, ...]
    deg2_count: int
    star_bound: int
    alpha: int
    kind = "star"

    def problems(self, g: SimpleGraph) -> list[str]:
        out = EndEdgeStar(self.center, self.leaves).problems(g, self.star_bound)
        actual = sum(1 for d in g.degrees() if d >= 2)
        if actual != self.deg2_count:
            out.append(f"deg2_count {self.deg2_count} but the graph has {actual}")
        if self.deg2_count > self.alpha:
            out.append(f"deg2_count {self.deg2_count} > alpha {self.alpha}")
        return out

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "center": self.center,
            "leaves": list(self.leaves),
            "deg2_count": self.deg2_count,
            "star_bound": self.star_bound,
            "alpha": self.alpha,
        }


TrichotomyCertificate = SuspendedPath | EndEdgeMatching | StarWitness


def certificate_problems(g: SimpleGraph, cert, params: TrichotomyParams) -> list[str]:
    """Independent re-check of a trichotomy certificate against ``g``."""
    if isinstance(cert, SuspendedPath):
        return cert.problems(g, params.q)
    if isinstance(cert, EndEdgeMatching):
        return cert.problems(g, params.ell)
    if isinstance(cert, StarWitness):
        out = cert.problems(g)
        if cert.alpha != params.alpha:
            out.append("alpha does not match parameters")
        if cert.star_bound != ceil((g.n - params.alpha) / (params.ell - 1)):
            out.append("star bound does not match parameters")
        return out
    return [f"unknown certificate type {type(cert).__name__}"]


def certificate_from_json(obj: dict):
    kind = obj["kind"]
    if kind == "suspended_path":
        return SuspendedPath(tuple(obj["path"]))
    if kind == "end_edge_matching":
        return EndEdgeMatching(tuple(tuple(e) for e in obj["edges"]))
    if kind == "end_edge_star":
        return EndEdgeStar(obj["center"], tuple(obj["leaves"]))
    if kind == "star":
        return StarWitness(obj["center"], tuple(obj["leaves"]), obj["deg2_count"], obj["star_bound"], obj["alpha"])
    raise ValueError(f"unknown certificate kind {kind!r}")


# -- structure ------------------------------------------------------------


def classify_xyz(g: SimpleGraph) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """X: neighbors of leaves; Y: degree >= 3 outside X; Z: the remaining non-leaves
    (all of degree exactly 2)."""
    if g.n < 3:
        raise ValueError("need at least 3 vertices")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    leaves, x = end_edge_structure(g)
    deg = g.degrees()
    y = frozenset(v for v in range(g.n) if deg[v] >= 3 and v not in x)
    z = frozenset(v for v in range(g.n) if deg[v] >= 2 and v not in x and v not in y)
    return x, y, z


def prune_leaves(g: SimpleGraph) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Delete every degree-1 vertex once. Returns (G', origin) with origin[i] the G-vertex."""
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    keep = tuple(v for v in range(g.n) if g.degree(v) != 1)
    if not keep:
        raise EmptyPruneError("pruning a single edge leaves no vertices")
    return g.induced(keep), keep


def prune_leaves_iterated(g: SimpleGraph) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Repeat leaf deletion until none remain (not used by the lemma)."""
    origin = tuple(range(g.n))
    while True:
        keep = [i for i in range(g.n) if g.degree(i) != 1]
        if len(keep) == g.n or not keep:
            return g, origin
        g, origin = g.induced(keep), tuple(origin[i] for i in keep)


@dataclass(frozen=True)
class CycleContraction:
    anchor: int
    removed: tuple[int, ...]
    vertices_removed: int
    edges_removed: int
    kind = "cycle"

    def to_json(self) -> dict:
        return {"kind": self.kind, "anchor": self.anchor, "removed": list(self.removed)}


@dataclass(frozen=True)
class PathContraction:
    ends: tuple[int, int]
    removed: tuple[int, ...]
    vertices_removed: int
    edges_removed: int
    kind = "path"

    def to_json(self) -> dict:
        return {"kind": self.kind, "ends": list(self.ends), "removed": list(self.removed)}


@dataclass
class ContractionTrace:
    """Steps turning G' into the core G''; core vertex ``i`` is G'-vertex ``core_vertices[i]``."""

    gp: SimpleGraph
    steps: list[CycleContraction | PathContraction]
    core: MultiGraph
    core_vertices: tuple[int, ...]

    def expand(self) -> SimpleGraph:
        """Undo every contraction, rebuilding G' from the core."""
        edges: Counter = Counter()
        for a, b in self.core.edge_list():
            u, v = self.core_vertices[a], self.core_vertices[b]
            edges[(min(u, v), max(u, v))] += 1
        for step in reversed(self.steps):
            if isinstance(step, CycleContraction):
                key, walk = (step.anchor, step.anchor), [step.anchor, *step.removed, step.anchor]
            else:
                u, w = step.ends
                key, walk = (min(u, w), max(u, w)), [u, *step.removed, w]
            if edges[key] == 0:
                raise ValueError(f"trace refers to a missing core edge {key}")
            edges[key] -= 1
            for a, b in zip(walk, walk[1:]):
                edges[(min(a, b), max(a, b))] += 1
        if any(c > 1 for c in edges.values()) or any(a == b and c for (a, b), c in edges.items()):
            raise ValueError("expansion is not a simple graph")
        return SimpleGraph.from_edges(self.gp.n, [e for e, c in edges.items() if c])

    def to_json(self) -> dict:
        return {
            "steps": [s.to_json() for s in self.steps],
            "core_vertices": list(self.core_vertices),
            "core_edges": [[self.core_vertices[a], self.core_vertices[b]] for a, b in self.core.edge_list()],
        }


def _z_runs(gp: SimpleGraph, zmask: int) -> list[tuple[list[int], int, int]]:
    """Maximal paths of Z-vertices as (run, outside neighbor of first, of last)."""
    runs = []
    seen = 0
    for v in bits(zmask):
        if seen >> v & 1:
            continue
        comp = component_mask(gp.rows, v, zmask)
        seen |= comp
        ends = [u for u in bits(comp) if (gp.rows[u] & comp).bit_count() < 2]
        if not ends:
            raise WholeCycleError("a cycle made only of degree-2 vertices")
        run, prev, cur = [ends[0]], -1, ends[0]
        while True:
            nxt = [u for u in bits(gp.rows[cur] & comp) if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            run.append(cur)
        if len(run) == 1:
            a, b = gp.neighbors(run[0])
        else:
            (a,) = [u for u in bits(gp.rows[run[0]] & ~comp)]
            (b,) = [u for u in bits(gp.rows[run[-1]] & ~comp)]
        runs.append((run, a, b))
    return runs


def contract_to_core(gp: SimpleGraph, z) -> ContractionTrace:
    """Replace each all-Z cycle through one anchor by a loop, then each Z-path by an edge."""
    zset = frozenset(z)
    if gp.n and len(zset) == gp.n:
        raise WholeCycleError("every vertex of G' is in Z: the graph is a cycle")
    zmask = sum(1 << v for v in zset)
    for v in zset:
        if gp.degree(v) != 2:
            raise ValueError(f"Z-vertex {v} has degree {gp.degree(v)} in G'")
    runs = _z_runs(gp, zmask)
    cycles = sorted((r for r in runs if r[1] == r[2]), key=lambda r: min(r[0]))
    paths = sorted((r for r in runs if r[1] != r[2]), key=lambda r: min(r[0]))

    edges: Counter = Counter((u, v) for u, v in gp.edges())
    vertices = set(range(gp.n))
    steps: list[CycleContraction | PathContraction] = []
    for run, a, b in cycles + paths:
        before_v, before_e = len(vertices), sum(edges.values())
        walk = [a, *run, b]
        for u, v in zip(walk, walk[1:]):
            key = (min(u, v), max(u, v))
            edges[key] -= 1
        edges[(min(a, b), max(a, b))] += 1
        vertices -= set(run)
        dv, de = before_v - len(vertices), before_e - sum(edges.values())
        if a == b:
            steps.append(CycleContraction(a, tuple(run), dv, de))
        else:
            steps.append(PathContraction((a, b), tuple(run), dv, de))
    core_vertices = tuple(sorted(vertices))
    index = {v: i for i, v in enumerate(core_vertices)}
    core_edges = []
    for (u, v), c in edges.items():
        if c < 0:
            raise AssertionError("contraction removed an absent edge")
        if c:
            core_edges += [(index[u], index[v])] * c
    core = MultiGraph.from_edges(len(core_vertices), core_edges)
    return ContractionTrace(gp, steps, core, core_vertices)


# -- bounds -----------------------------------------------------------------


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: int
    relation: str
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs if self.relation == "<=" else self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "relation": self.relation, "rhs": self.rhs, "passed": self.passed}


@dataclass
class CoreBoundsReport:
    params: TrichotomyParams
    checks: list[BoundCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[BoundCheck]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "q": self.params.q,
            "ell": self.params.ell,
            "k": self.params.k,
            "alpha": self.params.alpha,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def core_bounds_check(
    core: MultiGraph, params: TrichotomyParams, x, y, gp_order: int | None = None
) -> CoreBoundsReport:
    """Every intermediate inequality on X, Y, G'' (and G' if its order is given)."""
    if not params.non_degenerate:
        raise DegenerateParameters(
            f"2*ell + 3k - 8 = {params.slack} <= 0: alpha is non-positive and the bound is vacuous"
        )
    q, ell, k = params.q, params.ell, params.k
    e_core = core.edge_count()
    recon = (q - 2) * e_core + 1
    checks = [
        BoundCheck("|X| <= ell-1", len(x), "<=", ell - 1),
        BoundCheck("|Y| <= ell+2k-5", len(y), "<=", ell + 2 * k - 5),
        BoundCheck("|G''| = |X|+|Y|", core.n, "==", len(x) + len(y)),
        BoundCheck("|G''| <= 2ell+2k-6", core.n, "<=", 2 * ell + 2 * k - 6),
        BoundCheck("e(G'') = |G''|+k-2", e_core, "==", core.n + k - 2),
        BoundCheck("e(G'') <= 2ell+3k-8", e_core, "<=", params.slack),
    ]
    if gp_order is not None:
        checks.append(BoundCheck("|G'| <= (q-2)e(G'')+1", gp_order, "<=", recon))
    checks.append(BoundCheck("(q-2)e(G'')+1 <= alpha", recon, "<=", params.alpha))
    return CoreBoundsReport(params, checks)


# -- lemma ------------------------------------------------------------------


def _check_graph(g: SimpleGraph) -> int:
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    k = g.excess_k()
    if k < 1:
        raise ValueError(f"excess k={k} < 1")
    return k


def _check_params(n: int, k: int, q: int, ell: int) -> TrichotomyParams:
    if not 3 <= q <= n:
        raise ValueError(f"need 3 <= q <= n, got q={q}, n={n}")
    if ell < 2:
        raise ValueError("need ell >= 2")
    params = TrichotomyParams(q, ell, k)
    if not params.non_degenerate:
        raise DegenerateParameters(
            f"2*ell + 3k - 8 = {params.slack} <= 0 for ell={ell}, k={k}; "
            "the star K_(1,n-1) already violates alpha <= 0"
        )
    return params


def trichotomy_certificates(g: SimpleGraph, pairs) -> dict[tuple[int, int], object]:
    """Certificates for several (q, ell) at once; the graph structure is computed a single time."""
    k = _check_graph(g)
    params = {(q, ell): _check_params(g.n, k, q, ell) for q, ell in pairs}
    path = longest_suspended_path(g)
    matching = None
    star = deg2 = None
    checked: dict[str, list[str]] = {}
    out = {}
    for (q, ell), p in params.items():
        if len(path) >= q:
            cert = SuspendedPath(tuple(path))
            if "path" not in checked:
                checked["path"] = cert.problems(g, 0)
            problems = checked["path"] + ([] if len(path) >= q else ["path too short"])
        else:
            if matching is None:
                matching = max_end_edge_matching(g)
            if len(matching) >= ell:
                cert = EndEdgeMatching(tuple(matching))
                if "matching" not in checked:
                    checked["matching"] = cert.problems(g, 0)
                problems = list(checked["matching"])
            else:
                if star is None:
                    star = max_end_edge_star(g)
                    deg2 = sum(1 for d in g.degrees() if d >= 2)
                center, leaves = star
                bound = ceil((g.n - p.alpha) / (ell - 1))
                cert = StarWitness(center, tuple(leaves), deg2, bound, p.alpha)
                if "star" not in checked:
                    checked["star"] = EndEdgeStar(center, tuple(leaves)).problems(g, 0)
                problems = list(checked["star"])
                if len(leaves) < bound:
                    problems.append(f"star has {len(leaves)} end-edges < {bound}")
                if deg2 > p.alpha:
                    problems.append(f"deg2_count {deg2} > alpha {p.alpha}")
        if problems:
            raise TrichotomyViolation(f"{cert.kind} certificate fails for q={q}, ell={ell}: {problems}")
        out[(q, ell)] = cert
    return out


def trichotomy_certificate(g: SimpleGraph, q: int, ell: int):
    """Suspended path of order >= q, else end-edge matching of size >= ell, else star witness."""
    cert = trichotomy_certificates(g, [(q, ell)])[(q, ell)]
    problems = certificate_problems(g, cert, TrichotomyParams(q, ell, g.excess_k()))
    if problems:
        raise TrichotomyViolation(f"{cert.kind} certificate fails: {problems}")
    return cert


@dataclass
class TrichotomyAnalysis:
    params: TrichotomyParams
    certificate: object
    xyz: tuple[frozenset[int], frozenset[int], frozenset[int]]
    trace: ContractionTrace | None
    bounds: CoreBoundsReport | None

    def to_json(self) -> dict:
        x, y, z = self.xyz
        return {
            "params": {"q": self.params.q, "ell": self.params.ell, "k": self.params.k, "alpha": self.params.alpha},
            "certificate": self.certificate.to_json(),
            "xyz": {"X": sorted(x), "Y": sorted(y), "Z": sorted(z)},
            "trace": self.trace.to_json() if self.trace else None,
            "core_bounds": self.bounds.to_json() if self.bounds else None,
        }


def trichotomy_analysis(g: SimpleGraph, q: int, ell: int) -> TrichotomyAnalysis:
    """Certificate plus, for the star branch, the contraction trace and bound report."""
    cert = trichotomy_certificate(g, q, ell)
    params = TrichotomyParams(q, ell, g.excess_k())
    xyz = classify_xyz(g)
    trace = bounds = None
    if isinstance(cert, StarWitness):
        gp, origin = prune_leaves(g)
        index = {v: i for i, v in enumerate(origin)}
        trace = contract_to_core(gp, [index[v] for v in xyz[2]])
        bounds = core_bounds_check(trace.core, params, xyz[0], xyz[1], gp.n)
        if not bounds.passed:
            raise TrichotomyViolation(f"core bounds fail: {[c.name for c in bounds.failures()]}")
    return TrichotomyAnalysis(params, cert, xyz, trace, bounds)


def tree_trichotomy(t: SimpleGraph, a: int, b: int, g: int):
    """For a tree with n >= 4abg: a suspended path of order >= a, an end-edge
    matching of size >= b, or an end-edge star of size >= g (checked in that order)."""
    if not (is_connected(t) and t.edge_count() == t.n - 1):
        raise ValueError("not a tree")
    if min(a, b, g) < 1:
        raise ValueError("a, b, g must be positive")
    if t.n < 4 * a * b * g:
        raise ValueError(f"n={t.n} < 4abg={4 * a * b * g}: no guarantee")
    path = longest_suspended_path(t)
    if len(path) >= a:
        cert = SuspendedPath(tuple(path))
        problems = cert.problems(t, a)
    else:
        matching = max_end_edge_matching(t)
        if len(matching) >= b:
            cert = EndEdgeMatching(tuple(matching))
            problems = cert.problems(t, b)
        else:
            center, leaves = max_end_edge_star(t)
            cert = EndEdgeStar(center, tuple(leaves))
            problems = cert.problems(t, g)
    if problems:
        raise TrichotomyViolation(f"tree certificate fails: {problems}")
    return cert
