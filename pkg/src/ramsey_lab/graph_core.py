"""Graph representations, structure queries and graph6 I/O.

Vertices are dense 0-based integers. Adjacency is stored as one Python
``int`` per vertex, bit ``j`` of row ``i`` set iff ``ij`` is an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 512


class Graph6Error(ValueError):
    """Base class for graph6 decoding failures."""


class Graph6HeaderError(Graph6Error):
    pass


class Graph6TruncatedError(Graph6Error):
    pass


class Graph6RangeError(Graph6Error):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if self.n > MAX_VERTICES:
            raise ValueError(f"n={self.n} exceeds the cap of {MAX_VERTICES} vertices")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        degs = tuple(row.bit_count() for row in self.rows)
        object.__setattr__(self, "_degs", degs)
        object.__setattr__(self, "_m", sum(degs) // 2)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> "SimpleGraph":
        """K_{1,leaves} with the center at vertex 0."""
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    # -- basic queries -------------------------------------------------

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return list(self._degs)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return self._m

    def excess_k(self) -> int:
        """k such that the graph has n + k - 2 edges."""
        return self.edge_count() - self.n + 2

    def is_complete(self) -> bool:
        return all(row.bit_count() == self.n - 1 for row in self.rows)

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.rows)))

    def induced(self, keep: Sequence[int]) -> "SimpleGraph":
        """Subgraph induced on ``keep``; new vertex ``i`` is old vertex ``keep[i]``."""
        index = {old: new for new, old in enumerate(keep)}
        rows = []
        for old in keep:
            row = 0
            for u in bits(self.rows[old]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return SimpleGraph(len(keep), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return SimpleGraph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = component_mask(self.rows, v)
            seen |= comp
            comps.append(comp)
        return comps

    def __str__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"


def component_mask(rows: Sequence[int], start: int, within: int = -1) -> int:
    """Bitmask of the component containing ``start`` in the graph given by ``rows``."""
    comp = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        frontier = nxt & within & ~comp
        comp |= frontier
    return comp


@dataclass(frozen=True)
class MultiGraph:
    """Graph with parallel edges and loops; a loop counts as one edge."""

    n: int
    multiplicity: tuple[tuple[int, ...], ...]
    loops: tuple[int, ...]

    def __post_init__(self):
        if len(self.multiplicity) != self.n or len(self.loops) != self.n:
            raise ValueError("shape mismatch")
        for i in range(self.n):
            if self.multiplicity[i][i] != 0:
                raise ValueError("loops live in `loops`, not on the diagonal")
            for j in range(self.n):
                if self.multiplicity[i][j] != self.multiplicity[j][i] or self.multiplicity[i][j] < 0:
                    raise ValueError("multiplicities must be symmetric and non-negative")
            if self.loops[i] < 0:
                raise ValueError("negative loop count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "MultiGraph":
        mult = [[0] * n for _ in range(n)]
        loops = [0] * n
        for u, v in edges:
            if u == v:
                loops[u] += 1
            else:
                mult[u][v] += 1
                mult[v][u] += 1
        return cls(n, tuple(map(tuple, mult)), tuple(loops))

    def edge_count(self) -> int:
        return sum(map(sum, self.multiplicity)) // 2 + sum(self.loops)

    def loop_count(self) -> int:
        return sum(self.loops)

    def degree(self, v: int) -> int:
        return sum(self.multiplicity[v]) + 2 * self.loops[v]

    def edge_list(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            out.extend([(u, u)] * self.loops[u])
            for v in range(u + 1, self.n):
                out.extend([(u, v)] * self.multiplicity[u][v])
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        rows = [sum(1 << v for v in range(self.n) if self.multiplicity[u][v]) for u in range(self.n)]
        return component_mask(rows, 0) == (1 << self.n) - 1


@dataclass(frozen=True)
class Embedding:
    """Injective map ``pattern vertex i -> host vertex map[i]``."""

    map: tuple[int, ...]

    def is_valid(self, pattern: SimpleGraph, host_rows: Sequence[int]) -> bool:
        if len(self.map) != pattern.n or len(set(self.map)) != pattern.n:
            return False
        if any(not (0 <= h < len(host_rows)) for h in self.map):
            return False
        return all(host_rows[self.map[u]] >> self.map[v] & 1 for u, v in pattern.edges())


# -- graph6 --------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise Graph6RangeError(f"n={n} too large for graph6")


def to_graph6(g: SimpleGraph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    if any(not (63 <= ord(ch) <= 126) for ch in s):
        raise Graph6HeaderError(f"illegal character in graph6 string {text!r}")
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) >= 2 and s[1] == "~":
        if len(s) < 8:
            raise Graph6HeaderError("truncated 8-byte size header")
        n = 0
        for ch in s[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 8
    else:
        if len(s) < 4:
            raise Graph6HeaderError("truncated 4-byte size header")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n < 63:
            raise Graph6HeaderError(f"non-canonical long size header for n={n}")
        pos = 4
    if n > MAX_VERTICES:
        raise Graph6RangeError(f"n={n} exceeds the cap of {MAX_VERTICES} vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = s[pos:]
    if len(payload) < need:
        raise Graph6TruncatedError(f"payload has {len(payload)} bytes, need {need}")
    if len(payload) > need:
        raise Graph6HeaderError(f"payload has {len(payload) - need} trailing bytes")
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for ch in payload:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k == nbits:
                break
            if val >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return SimpleGraph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[SimpleGraph]:
    """Parse a graph6 stream, skipping blank and ``#`` comment lines."""
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield from_graph6(line)


# -- structure queries ---------------------------------------------------


def degree(g: SimpleGraph, v: int) -> int:
    return g.degree(v)


def is_connected(g: SimpleGraph) -> bool:
    """True iff ``g`` has exactly one component (a single vertex counts as connected)."""
    if g.n == 0:
        return False
    return component_mask(g.rows, 0) == (1 << g.n) - 1


def end_edge_structure(g: SimpleGraph) -> tuple[frozenset[int], frozenset[int]]:
    """(leaves, X): the degree-1 vertices and the union of their neighborhoods."""
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    x = 0
    for v in leaves:
        x |= g.rows[v]
    return frozenset(leaves), frozenset(bits(x))


def max_end_edge_matching(g: SimpleGraph) -> list[tuple[int, int]]:
    """Largest set of pairwise disjoint end-edges.

    For n >= 3 connected, the neighbor of a leaf is never a leaf, so every
    end-edge is pinned to its X-vertex and one private leaf per X-vertex is optimal.
    """
    leaves, xs = end_edge_structure(g)
    if g.n == 2 and len(leaves) == 2:
        return [(0, 1)]
    out = []
    for x in sorted(xs):
        if x in leaves:
            continue
        leaf = min(u for u in bits(g.rows[x]) if u in leaves)
        out.append((x, leaf))
    return out


def max_end_edge_star(g: SimpleGraph) -> tuple[int | None, list[int]]:
    """Vertex with the most leaf neighbors (smallest id on ties) and those leaves.

    Returns ``(None, [])`` when ``g`` has no leaves.
    """
    leaf_mask = 0
    for v in range(g.n):
        if g.degree(v) == 1:
            leaf_mask |= 1 << v
    best, best_leaves = None, 0
    for v in range(g.n):
        c = (g.rows[v] & leaf_mask).bit_count()
        if c > best_leaves:
            best, best_leaves = v, c
    if best is None:
        return None, []
    return best, list(bits(g.rows[best] & leaf_mask))


def _chains(g: SimpleGraph) -> list[list[int]]:
    """Maximal runs of degree-2 vertices, each as an ordered vertex list.

    A run that closes on itself (the graph is a cycle) is returned with its
    first vertex repeated at the end.
    """
    deg2 = 0
    for v in range(g.n):
        if g.degree(v) == 2:
            deg2 |= 1 << v
    out = []
    seen = 0
    for v in bits(deg2):
        if seen >> v & 1:
            continue
        comp = component_mask(g.rows, v, deg2)
        seen |= comp
        # endpoints of a path run have at most one neighbor inside the run
        ends = [u for u in bits(comp) if (g.rows[u] & comp).bit_count() < 2]
        start = ends[0] if ends else v
        seq, prev, cur = [start], -1, start
        while True:
            nxt = [u for u in bits(g.rows[cur] & comp) if u != prev]
            if not nxt or nxt[0] == start:
                if nxt and nxt[0] == start:
                    seq.append(start)
                break
            prev, cur = cur, nxt[0]
            seq.append(cur)
        out.append(seq)
    return out


def longest_suspended_path(g: SimpleGraph) -> list[int]:
    """Maximum-order path whose internal vertices have degree 2 in ``g``.

    Endpoints are unconstrained. Ties go to the lexicographically smallest
    vertex sequence. If ``g`` is a cycle the result is a Hamiltonian path.
    """
    if g.n < 2 or g.edge_count() == 0:
        raise ValueError("need at least one edge")
    candidates: list[list[int]] = []
    for chain in _chains(g):
        if len(chain) > 1 and chain[0] == chain[-1]:
            ring = chain[:-1]
            s = min(ring)
            i = ring.index(s)
            fwd = ring[i:] + ring[:i]
            bwd = [fwd[0]] + fwd[1:][::-1]
            candidates.append(min(fwd, bwd))
            continue
        a = [u for u in bits(g.rows[chain[0]]) if u not in chain[1:2]]
        b = [u for u in bits(g.rows[chain[-1]]) if u not in chain[-2:-1]]
        if len(chain) == 1:
            a, b = g.neighbors(chain[0])[:1], g.neighbors(chain[0])[1:]
        a_end, b_end = a[0], b[0]
        if a_end != b_end:
            p = [a_end, *chain, b_end]
            candidates += [p, p[::-1]]
        else:
            p = [a_end, *chain]
            q = [a_end, *chain[::-1]]
            candidates += [p, p[::-1], q, q[::-1]]
    if not candidates:
        u, v = g.edges()[0]
        return [u, v]
    best = max(len(c) for c in candidates)
    return min(c for c in candidates if len(c) == best)


def is_suspended_path(g: SimpleGraph, path: Sequence[int]) -> bool:
    if len(path) < 2 or len(set(path)) != len(path):
        return False
    if any(not g.has_edge(u, v) for u, v in zip(path, path[1:])):
        return False
    return all(g.degree(v) == 2 for v in path[1:-1])


__all__ = [
    "MAX_VERTICES",
    "Embedding",
    "Graph6Error",
    "Graph6HeaderError",
    "Graph6RangeError",
    "Graph6TruncatedError",
    "MultiGraph",
    "SimpleGraph",
    "bits",
    "component_mask",
    "degree",
    "end_edge_structure",
    "from_graph6",
    "is_connected",
    "is_suspended_path",
    "longest_suspended_path",
    "max_end_edge_matching",
    "max_end_edge_star",
    "popcount",
    "read_graph6_lines",
    "to_graph6",
]
