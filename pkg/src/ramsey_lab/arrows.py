"""Exact decision of K_N -> (G, tK_m) by pruned depth-first search over edge colorings.

Edges are colored in lexicographic order ``(0,1), (0,2), ..., (N-2,N-1)``, so
when row ``i`` is being colored all rows ``< i`` are complete.

Symmetry reduction. Call two vertices ``j, j' > i`` *twins at row i* when they
have the same colors towards ``0..i-1``. Any permutation of ``i+1..N-1`` that
maps twins to twins fixes every completed row, so within each twin class the
red neighbors of ``i`` can be moved to the front. Doing this row by row turns
an arbitrary coloring into one where, for every ``i``, red-to-``i`` forms a
prefix of every twin class. Both target properties (red G, blue tK_m) are
invariant under relabeling, so searching only such colorings is exact.
``first_vertex`` applies the rule to row 0 only; ``full`` to every row.
"""

from __future__ import annotations

import sys
import time
from dataclasses import asdict, dataclass, field

from .bounds import upper_tKm
from .colorings import (
    SubgraphMatcher,
    TwoColoring,
    burr_coloring,
    chromatic_profile,
    cliques,
    disjoint_cliques_graph,
    find_blue_tKm,
    find_disjoint_cliques,
    find_red_subgraph,
    verify_extremal,
)
from .graph_core import SimpleGraph, component_mask, is_connected, to_graph6

DESK_CAP = 16
SYMMETRY_LEVELS = ("none", "first_vertex", "full")
EDGE_ORDERS = ("lex",)


@dataclass(frozen=True)
class SearchConfig:
    edge_order: str = "lex"
    symmetry: str = "full"
    node_budget: int | None = 200_000_000
    time_budget: float | None = None

    def __post_init__(self):
        if self.edge_order not in EDGE_ORDERS:
            raise ValueError(f"unknown edge order {self.edge_order!r}; choose from {EDGE_ORDERS}")
        if self.symmetry not in SYMMETRY_LEVELS:
            raise ValueError(f"unknown symmetry level {self.symmetry!r}; choose from {SYMMETRY_LEVELS}")
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")


@dataclass
class SearchStats:
    nodes: int = 0
    red_prunes: int = 0
    blue_prunes: int = 0
    symmetry_prunes: int = 0
    elapsed: float = 0.0

    @property
    def prunings(self) -> int:
        return self.red_prunes + self.blue_prunes + self.symmetry_prunes


@dataclass
class ArrowsResult:
    N: int
    arrows: bool | None
    counterexample: TwoColoring | None = None
    stats: SearchStats = field(default_factory=SearchStats)
    config: SearchConfig = field(default_factory=SearchConfig)

    @property
    def status(self) -> str:
        return {True: "arrows", False: "good-coloring", None: "unknown"}[self.arrows]

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "arrows": self.arrows,
            "status": self.status,
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
            "stats": {**asdict(self.stats), "prunings": self.stats.prunings},
            "config": asdict(self.config),
        }


class _Found(Exception):
    pass


class _OutOfBudget(Exception):
    pass


class _Search:
    def __init__(self, N: int, g: SimpleGraph, t: int, m: int, cfg: SearchConfig):
        self.N, self.g, self.t, self.m, self.cfg = N, g, t, m, cfg
        self.matcher = SubgraphMatcher(g)
        self.connected = is_connected(g)
        self.g_edges = g.edge_count()
        self.full = (1 << N) - 1
        self.edges = [(i, j) for i in range(N) for j in range(i + 1, N)]
        self.red = [0] * N
        self.blue = [0] * N
        self.prev = [-1] * N
        self.stats = SearchStats()
        self.deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget
        self.sym_rows = {"none": 0, "first_vertex": 1, "full": N}[cfg.symmetry]
        self.red_count = 0

    def red_hit(self, i: int, j: int) -> bool:
        if self.connected:
            if component_mask(self.red, i).bit_count() < self.g.n:
                return False
        elif self.red_count < self.g_edges:
            return False
        return self.matcher.find_through(self.red, i, j) is not None

    def blue_hit(self, i: int, j: int) -> bool:
        blue, m, t = self.blue, self.m, self.t
        ends = (1 << i) | (1 << j)
        for c in cliques(blue, m - 2, blue[i] & blue[j]):
            if t == 1:
                return True
            if find_disjoint_cliques(blue, t - 1, m, self.full & ~(c | ends)) is not None:
                return True
        return False

    def _start_row(self, i: int) -> None:
        low = (1 << i) - 1
        last: dict[int, int] = {}
        for j in range(i + 1, self.N):
            key = self.red[j] & low
            self.prev[j] = last.get(key, -1)
            last[key] = j

    def dfs(self, e: int) -> None:
        st = self.stats
        st.nodes += 1
        if st.nodes & 1023 == 0:
            if self.cfg.node_budget is not None and st.nodes > self.cfg.node_budget:
                raise _OutOfBudget
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise _OutOfBudget
        if e == len(self.edges):
            raise _Found
        i, j = self.edges[e]
        sym = i < self.sym_rows
        if sym and j == i + 1:
            self._start_row(i)
        red, blue = self.red, self.blue
        bi, bj = 1 << i, 1 << j
        p = self.prev[j] if sym else -1
        if p < 0 or red[i] >> p & 1:
            red[i] |= bj
            red[j] |= bi
            self.red_count += 1
            if self.red_hit(i, j):
                st.red_prunes += 1
            else:
                self.dfs(e + 1)
            red[i] ^= bj
            red[j] ^= bi
            self.red_count -= 1
        else:
            st.symmetry_prunes += 1
        blue[i] |= bj
        blue[j] |= bi
        if self.blue_hit(i, j):
            st.blue_prunes += 1
        else:
            self.dfs(e + 1)
        blue[i] ^= bj
        blue[j] ^= bi


def _trivially_arrows(N: int, g: SimpleGraph, t: int, m: int) -> bool:
    """Patterns that need no colored edge at all."""
    return (g.edge_count() == 0 and g.n <= N) or (m == 1 and t <= N)


def arrows(N: int, g: SimpleGraph, t: int, m: int, cfg: SearchConfig | None = None) -> ArrowsResult:
    """Decide whether every red/blue coloring of K_N has a red ``g`` or a blue tK_m."""
    cfg = cfg or SearchConfig()
    if not 1 <= N <= DESK_CAP:
        raise ValueError(f"N={N} outside 1..{DESK_CAP}")
    if t < 1 or m < 1:
        raise ValueError("t and m must be positive")
    if g.n < 1:
        raise ValueError("pattern graph must have a vertex")
    start = time.monotonic()
    if _trivially_arrows(N, g, t, m):
        return ArrowsResult(N, True, None, SearchStats(elapsed=time.monotonic() - start), cfg)
    search = _Search(N, g, t, m, cfg)
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, len(search.edges) * 4 + 1000))
    try:
        search.dfs(0)
        verdict, witness = True, None
    except _Found:
        witness = TwoColoring(N, tuple(search.red))
        if find_red_subgraph(witness, g) is not None or find_blue_tKm(witness, t, m) is not None:
            raise AssertionError("search produced a coloring that fails re-verification")
        verdict = False
    except _OutOfBudget:
        verdict, witness = None, None
    finally:
        sys.setrecursionlimit(old_limit)
    search.stats.elapsed = time.monotonic() - start
    return ArrowsResult(N, verdict, witness, search.stats, cfg)


@dataclass
class RamseyCertificate:
    graph6: str
    t: int
    m: int
    value: int | None
    lower_witness: TwoColoring | None
    lower_source: str
    upper_stats: SearchStats | None
    bracket: tuple[int, int | None]
    config: SearchConfig

    @property
    def complete(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict:
        return {
            "graph": self.graph6,
            "t": self.t,
            "m": self.m,
            "value": self.value,
            "lower_witness": self.lower_witness.to_json() if self.lower_witness else None,
            "lower_source": self.lower_source,
            "upper_stats": asdict(self.upper_stats) if self.upper_stats else None,
            "bracket": list(self.bracket),
            "config": asdict(self.config),
        }


def tkm_profile(t: int, m: int) -> tuple[int, int]:
    """(chi, surplus) of tK_m, computed exactly when small enough."""
    if t * m <= 16:
        prof = chromatic_profile(disjoint_cliques_graph(t, m))
        return prof.chi, prof.surplus
    return m, t


def seeded_lower_witness(g: SimpleGraph, t: int, m: int) -> TwoColoring | None:
    """Burr coloring of K_{goodness-1} for connected ``g``, verified; None if not applicable."""
    chi, s = tkm_profile(t, m)
    if not is_connected(g) or chi < 2 or g.n < s:
        return None
    if (g.n - 1) * (chi - 1) + s - 1 <= 0:
        return None
    c = burr_coloring(g.n, chi, s)
    if not verify_extremal(c, g.n, t, m).passed:
        raise AssertionError("Burr coloring failed verification")
    return c


def ramsey_number(
    g: SimpleGraph, t: int, m: int, cfg: SearchConfig | None = None, max_N: int = DESK_CAP
) -> RamseyCertificate:
    """Smallest N with K_N -> (g, tK_m), searched upward from the Burr lower bound."""
    cfg = cfg or SearchConfig()
    lower = seeded_lower_witness(g, t, m)
    source = "burr" if lower is not None else "none"
    n0 = lower.N + 1 if lower is not None else 1
    hi = upper_tKm(g.edge_count(), m, t) if m >= 3 and g.edge_count() >= 1 and min(g.degrees()) > 0 else None
    N = n0
    while N <= max_N:
        res = arrows(N, g, t, m, cfg)
        if res.arrows is None:
            return RamseyCertificate(to_graph6(g), t, m, None, lower, source, None, (N, hi), cfg)
        if res.arrows:
            return RamseyCertificate(to_graph6(g), t, m, N, lower, source, res.stats, (N, N), cfg)
        lower, source = res.counterexample, "search"
        N += 1
    return RamseyCertificate(to_graph6(g), t, m, None, lower, source, None, (N, hi), cfg)
