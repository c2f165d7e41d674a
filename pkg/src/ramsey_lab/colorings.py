"""Red/blue colorings of complete graphs and color-constrained subgraph search."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .graph_core import Embedding, SimpleGraph, bits, component_mask

CHROMATIC_CAP = 16


@dataclass(frozen=True)
class TwoColoring:
    """Coloring of K_N; ``red[v]`` is the red-neighbor bitmask of ``v``, blue is the rest."""

    N: int
    red: tuple[int, ...]

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("a coloring needs N >= 1")
        # shares SimpleGraph's symmetry/loop validation
        SimpleGraph(self.N, self.red)

    @classmethod
    def from_red_edges(cls, N: int, edges) -> "TwoColoring":
        return cls(N, SimpleGraph.from_edges(N, edges).rows)

    @classmethod
    def all_red(cls, N: int) -> "TwoColoring":
        return cls(N, SimpleGraph.complete(N).rows)

    @classmethod
    def all_blue(cls, N: int) -> "TwoColoring":
        return cls(N, (0,) * N)

    @property
    def blue(self) -> tuple[int, ...]:
        full = (1 << self.N) - 1
        return tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.red))

    def is_red(self, u: int, v: int) -> bool:
        return bool(self.red[u] >> v & 1)

    def red_graph(self) -> SimpleGraph:
        return SimpleGraph(self.N, self.red)

    def blue_graph(self) -> SimpleGraph:
        return SimpleGraph(self.N, self.blue)

    def swap(self) -> "TwoColoring":
        return TwoColoring(self.N, self.blue)

    def red_edges(self) -> list[tuple[int, int]]:
        return self.red_graph().edges()

    def to_json(self) -> dict:
        return {"N": self.N, "red": [list(e) for e in self.red_edges()]}

    @classmethod
    def from_json(cls, obj: dict) -> "TwoColoring":
        return cls.from_red_edges(int(obj["N"]), [tuple(e) for e in obj["red"]])

    def to_hex(self) -> str:
        """``"N:hex"`` with the upper triangle in lexicographic pair order, MSB first."""
        acc = nbits = 0
        for i in range(self.N):
            for j in range(i + 1, self.N):
                acc = (acc << 1) | (self.red[i] >> j & 1)
                nbits += 1
        pad = -nbits % 4
        width = (nbits + pad) // 4
        return f"{self.N}:" + (format(acc << pad, f"0{width}x") if width else "")

    @classmethod
    def from_hex(cls, text: str) -> "TwoColoring":
        head, _, payload = text.partition(":")
        N = int(head)
        nbits = N * (N - 1) // 2
        pad = -nbits % 4
        if len(payload) != (nbits + pad) // 4:
            raise ValueError(f"hex payload length {len(payload)} does not match N={N}")
        acc = int(payload, 16) >> pad if payload else 0
        edges = []
        k = nbits
        for i in range(N):
            for j in range(i + 1, N):
                k -= 1
                if acc >> k & 1:
                    edges.append((i, j))
        return cls.from_red_edges(N, edges)


# -- chromatic profile ----------------------------------------------------


@dataclass(frozen=True)
class ChromaticProfile:
    chi: int
    surplus: int


def _colorable(rows: Sequence[int], n: int, k: int) -> bool:
    colors = [-1] * n

    def go(v: int, used: int) -> bool:
        if v == n:
            return True
        forbidden = {colors[u] for u in bits(rows[v]) if u < v}
        for c in range(min(used + 1, k)):
            if c not in forbidden:
                colors[v] = c
                if go(v + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return go(0, 0)


def chromatic_profile(h: SimpleGraph) -> ChromaticProfile:
    """Exact chromatic number and chromatic surplus by backtracking."""
    n = h.n
    if n < 1:
        raise ValueError("empty graph has no chromatic profile")
    if n > CHROMATIC_CAP:
        raise ValueError(f"|H|={n} above the exact-search cap {CHROMATIC_CAP}")
    chi = next(k for k in range(1, n + 1) if _colorable(h.rows, n, k))
    sizes = [0] * chi
    colors = [-1] * n
    best = n

    def go(v: int, used: int) -> None:
        nonlocal best
        if best == 1 or min(sizes[:used] or [n]) >= best and used == chi:
            return
        if v == n:
            if used == chi:
                best = min(best, min(sizes))
            return
        # not enough vertices left to open the remaining colors
        if chi - used > n - v:
            return
        forbidden = {colors[u] for u in bits(h.rows[v]) if u < v}
        for c in range(min(used + 1, chi)):
            if c not in forbidden:
                colors[v] = c
                sizes[c] += 1
                go(v + 1, max(used, c + 1))
                sizes[c] -= 1
        colors[v] = -1

    go(0, 0)
    return ChromaticProfile(chi, best)


def disjoint_cliques_graph(t: int, m: int) -> SimpleGraph:
    """tK_m as a SimpleGraph."""
    edges = []
    for c in range(t):
        base = c * m
        edges += [(base + i, base + j) for i in range(m) for j in range(i + 1, m)]
    return SimpleGraph.from_edges(t * m, edges)


# -- Burr construction ------------------------------------------------------


def burr_groups(n: int, chi: int, s: int) -> list[int]:
    return [n - 1] * (chi - 1) + [s - 1]


def burr_coloring(n: int, chi: int, s: int) -> TwoColoring:
    """K_{(n-1)(chi-1)+s-1} split into chi-1 red cliques of order n-1 and one of
    order s-1, blue between groups."""
    if not (n >= s >= 1 and chi >= 2):
        raise ValueError(f"need n >= s >= 1 and chi >= 2, got n={n}, chi={chi}, s={s}")
    N = (n - 1) * (chi - 1) + s - 1
    if N <= 0:
        raise ValueError(f"parameters give N={N}; nothing to color")
    red = []
    start = 0
    for size in burr_groups(n, chi, s):
        group = ((1 << size) - 1) << start
        red += [group & ~(1 << v) for v in range(start, start + size)]
        start += size
    return TwoColoring(N, tuple(red))


# -- subgraph search ------------------------------------------------------


AUT_ENUM_CAP = 50_000


def automorphisms(g: SimpleGraph, cap: int = AUT_ENUM_CAP) -> list[tuple[int, ...]] | None:
    """All automorphisms of ``g`` as vertex maps, or None if there are more than ``cap``."""
    n = g.n
    deg = g.degrees()
    image = [-1] * n
    out: list[tuple[int, ...]] = []

    def go(v: int, used: int) -> bool:
        if v == n:
            out.append(tuple(image))
            return len(out) <= cap
        for h in range(n):
            if used >> h & 1 or deg[h] != deg[v]:
                continue
            if all((g.rows[h] >> image[u] & 1) == (g.rows[v] >> u & 1) for u in range(v)):
                image[v] = h
                if not go(v + 1, used | 1 << h):
                    return False
        image[v] = -1
        return True

    return out if go(0, 0) else None


class SubgraphMatcher:
    """Backtracking embedder of a fixed pattern into host adjacency rows.

    Pattern vertices are placed so each new one has as many already-placed
    neighbors as possible; candidates are the common host neighborhood of
    those images, filtered by host degree. Automorphic duplicates are cut with
    stabilizer-chain conditions: ``image(v_i) < image(w)`` for every ``w`` in the
    orbit of ``v_i`` under the automorphisms fixing ``v_0..v_{i-1}``.
    """

    def __init__(self, pattern: SimpleGraph):
        self.pattern = pattern
        self.degs = pattern.degrees()
        self._plans: dict[tuple[int, ...], tuple] = {}
        self.aut = automorphisms(pattern)
        darts = [(a, b) for a, b in pattern.edges()] + [(b, a) for a, b in pattern.edges()]
        if self.aut is None:
            self.dart_reps = sorted(darts)
        else:
            self.dart_reps = sorted({min((s[a], s[b]) for s in self.aut) for a, b in darts})

    def _order(self, start: tuple[int, ...]) -> list[int]:
        p = self.pattern
        order = list(start)
        placed = set(order)
        while len(order) < p.n:
            best = max(
                (v for v in range(p.n) if v not in placed),
                key=lambda v: (sum(1 for u in bits(p.rows[v]) if u in placed), self.degs[v], -v),
            )
            order.append(best)
            placed.add(best)
        return order

    def _plan(self, start: tuple[int, ...]):
        plan = self._plans.get(start)
        if plan is not None:
            return plan
        p = self.pattern
        order = self._order(start)
        pos = {v: i for i, v in enumerate(order)}
        back = tuple(tuple(pos[u] for u in bits(p.rows[v]) if pos[u] < i) for i, v in enumerate(order))
        above: list[list[int]] = [[] for _ in order]
        if self.aut is not None:
            group = [s for s in self.aut if all(s[v] == v for v in start)]
            for i in range(len(start), len(order)):
                v = order[i]
                for w in {s[v] for s in group} - {v}:
                    above[pos[w]].append(i)
                group = [s for s in group if s[v] == v]
        plan = (tuple(order), back, tuple(self.degs[v] for v in order), tuple(map(tuple, above)))
        self._plans[start] = plan
        return plan

    def find(self, host: Sequence[int], fixed: dict[int, int] | None = None) -> Embedding | None:
        p = self.pattern
        N = len(host)
        if p.n > N:
            return None
        fixed = fixed or {}
        order, back, need, above = self._plan(tuple(fixed))
        hdeg = [row.bit_count() for row in host]
        ok_by_deg: dict[int, int] = {}
        for d in set(need):
            ok_by_deg[d] = sum(1 << h for h in range(N) if hdeg[h] >= d)
        image = [0] * p.n
        used = 0
        k = len(fixed)
        for i in range(k):
            h = fixed[order[i]]
            if used >> h & 1 or not ok_by_deg[need[i]] >> h & 1:
                return None
            if any(not host[image[j]] >> h & 1 for j in back[i]):
                return None
            image[i] = h
            used |= 1 << h
        masks = [ok_by_deg[d] for d in need]
        n = p.n

        def go(i: int, used: int) -> bool:
            if i == n:
                return True
            cand = masks[i] & ~used
            for j in back[i]:
                cand &= host[image[j]]
            for j in above[i]:
                cand &= -(2 << image[j])
            while cand:
                low = cand & -cand
                cand ^= low
                image[i] = low.bit_length() - 1
                if go(i + 1, used | low):
                    return True
            return False

        if not go(k, used):
            return None
        out = [0] * n
        for i, v in enumerate(order):
            out[v] = image[i]
        return Embedding(tuple(out))

    def find_through(self, host: Sequence[int], u: int, v: int) -> Embedding | None:
        """An embedding that maps some pattern edge onto host edge ``uv``."""
        for a, b in self.dart_reps:
            emb = self.find(host, {a: u, b: v})
            if emb is not None:
                return emb
        return None


def find_red_subgraph(c: TwoColoring, g: SimpleGraph) -> Embedding | None:
    return SubgraphMatcher(g).find(c.red)


def find_blue_subgraph(c: TwoColoring, g: SimpleGraph) -> Embedding | None:
    return find_red_subgraph(c.swap(), g)


def cliques(rows: Sequence[int], k: int, cand: int) -> Iterator[int]:
    """Masks of all k-cliques inside the vertex mask ``cand``."""
    if k == 0:
        yield 0
        return
    while cand:
        low = cand & -cand
        cand ^= low
        v = low.bit_length() - 1
        if k == 1:
            yield low
            continue
        sub = rows[v] & cand
        if sub.bit_count() < k - 1:
            continue
        for c in cliques(rows, k - 1, sub):
            yield c | low


def find_disjoint_cliques(rows: Sequence[int], t: int, m: int, avail: int) -> list[int] | None:
    """``t`` pairwise disjoint m-cliques inside ``avail`` (exact), or None."""
    if t == 0:
        return []
    if avail.bit_count() < t * m:
        return None
    low = avail & -avail
    v = low.bit_length() - 1
    for c in cliques(rows, m - 1, rows[v] & avail):
        cl = c | low
        rest = find_disjoint_cliques(rows, t - 1, m, avail & ~cl)
        if rest is not None:
            return [cl, *rest]
    return find_disjoint_cliques(rows, t, m, avail & ~low)


def find_blue_tKm(c: TwoColoring, t: int, m: int) -> list[tuple[int, ...]] | None:
    found = find_disjoint_cliques(c.blue, t, m, (1 << c.N) - 1)
    if found is None:
        return None
    return [tuple(bits(mask)) for mask in found]


def red_component_sizes(c: TwoColoring) -> list[int]:
    return [mask.bit_count() for mask in c.red_graph().components()]


@dataclass
class ExtremalReport:
    n: int
    t: int
    m: int
    max_red_component: int
    blue_tKm: list[tuple[int, ...]] | None = field(default=None)

    @property
    def no_red_connected_n(self) -> bool:
        return self.max_red_component < self.n

    @property
    def passed(self) -> bool:
        return self.no_red_connected_n and self.blue_tKm is None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "m": self.m,
            "max_red_component": self.max_red_component,
            "blue_tKm": self.blue_tKm,
            "passed": self.passed,
        }


def verify_extremal(c: TwoColoring, n: int, t: int, m: int) -> ExtremalReport:
    """No red connected graph of order n (all red components < n) and no blue tK_m."""
    return ExtremalReport(n, t, m, max(red_component_sizes(c)), find_blue_tKm(c, t, m))


def red_component_of(red: Sequence[int], v: int) -> int:
    return component_mask(red, v)
