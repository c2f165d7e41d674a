"""Witness finders for the auxiliary lemmas: path extension, the Hall
dichotomy for bipartite colorings, and cliques in the complement."""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import turan_bound
from .colorings import TwoColoring, cliques
from .graph_core import SimpleGraph, bits

# -- path extension -------------------------------------------------------


@dataclass(frozen=True)
class PathExtensionInstance:
    """K_{a+b} with x_i = vertex i-1 (0 <= i-1 < a) and y_j = vertex a+j-1."""

    coloring: TwoColoring
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a < 2 or self.b < 1 or self.c < 1 or self.d < 1:
            raise ValueError("need a >= 2 and b, c, d >= 1")
        if self.coloring.N != self.a + self.b:
            raise ValueError(f"coloring has N={self.coloring.N}, expected a+b={self.a + self.b}")
        if self.a < self.b * (self.c - 1) + self.d:
            raise ValueError(f"a={self.a} < b(c-1)+d={self.b * (self.c - 1) + self.d}: no guarantee")
        for i in range(self.a - 1):
            if not self.coloring.is_red(i, i + 1):
                raise ValueError(f"spine edge x{i + 1}x{i + 2} is not red")

    @property
    def xs(self) -> range:
        return range(self.a)

    @property
    def ys(self) -> range:
        return range(self.a, self.a + self.b)


@dataclass(frozen=True)
class ExtendedPath:
    path: tuple[int, ...]
    kind = "extended_path"

    def problems(self, inst: PathExtensionInstance) -> list[str]:
        p, c = self.path, inst.coloring
        out = []
        if len(p) != inst.a + 1 or len(set(p)) != len(p):
            out.append("path must have a+1 distinct vertices")
        if not p or p[0] != 0 or p[-1] != inst.a - 1:
            out.append("path must run from x1 to xa")
        if any(not (0 <= v < c.N) for v in p):
            out.append("vertex out of range")
        elif any(not c.is_red(u, v) for u, v in zip(p, p[1:])):
            out.append("path uses a blue edge")
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "path": list(self.path)}


@dataclass(frozen=True)
class BlueClique:
    vertices: tuple[int, ...]
    kind = "blue_clique"

    def problems(self, inst: PathExtensionInstance) -> list[str]:
        vs, c = self.vertices, inst.coloring
        out = []
        if len(set(vs)) != inst.c or len(vs) != inst.c:
            out.append(f"need {inst.c} distinct vertices")
        if any(not (0 <= v < c.N) for v in vs):
            return out + ["vertex out of range"]
        if any(c.is_red(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :]):
            out.append("clique has a red edge")
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class BlueDominators:
    vertices: tuple[int, ...]
    kind = "blue_dominators"

    def problems(self, inst: PathExtensionInstance) -> list[str]:
        vs, c = self.vertices, inst.coloring
        out = []
        if len(set(vs)) != inst.d or len(vs) != inst.d:
            out.append(f"need {inst.d} distinct vertices")
        if any(v not in inst.xs for v in vs):
            return out + ["dominators must lie in X"]
        if any(c.is_red(x, y) for x in vs for y in inst.ys):
            out.append("a dominator has a red edge to Y")
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


PathExtensionOutcome = ExtendedPath | BlueClique | BlueDominators


class LemmaViolation(RuntimeError):
    """No outcome exists although the hypotheses hold."""


def red_path_exact(c: TwoColoring, src: int, dst: int, edges: int) -> tuple[int, ...] | None:
    """A red path src -> dst with exactly ``edges`` edges, by exhaustive DFS."""
    red = c.red
    path = [src]

    def dfs(v: int, used: int) -> bool:
        if len(path) == edges:
            if red[v] >> dst & 1:
                path.append(dst)
                return True
            return False
        for u in bits(red[v] & ~used & ~(1 << dst)):
            path.append(u)
            if dfs(u, used | 1 << u):
                return True
            path.pop()
        return False

    return tuple(path) if dfs(src, 1 << src | 1 << dst) else None


def path_extension_witness(inst: PathExtensionInstance) -> PathExtensionOutcome:
    """First available outcome in the order: extended path, blue K_c, blue dominators."""
    c = inst.coloring
    path = red_path_exact(c, 0, inst.a - 1, inst.a)
    if path is not None:
        return ExtendedPath(path)
    for clique in cliques(c.blue, inst.c, (1 << c.N) - 1):
        return BlueClique(tuple(bits(clique)))
    ymask = sum(1 << y for y in inst.ys)
    doms = [x for x in inst.xs if c.red[x] & ymask == 0]
    if len(doms) >= inst.d:
        return BlueDominators(tuple(doms[: inst.d]))
    raise LemmaViolation("no outcome although a >= b(c-1)+d")


# -- Hall dichotomy -------------------------------------------------------


@dataclass(frozen=True)
class BipartiteColoring:
    """Red/blue K_{a,b}; ``red[i]`` is the bitmask of Y-indices red to x_i."""

    a: int
    b: int
    red: tuple[int, ...]

    def __post_init__(self):
        if len(self.red) != self.a:
            raise ValueError("need one red mask per X vertex")
        if any(r >> self.b for r in self.red):
            raise ValueError("red mask exceeds |Y|")

    def is_red(self, x: int, y: int) -> bool:
        return bool(self.red[x] >> y & 1)

    @classmethod
    def from_bits(cls, a: int, b: int, code: int) -> "BipartiteColoring":
        mask = (1 << b) - 1
        return cls(a, b, tuple(code >> (i * b) & mask for i in range(a)))

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "red": [[x, y] for x in range(self.a) for y in bits(self.red[x])]}

    @classmethod
    def from_json(cls, obj: dict) -> "BipartiteColoring":
        red = [0] * obj["a"]
        for x, y in obj["red"]:
            red[x] |= 1 << y
        return cls(obj["a"], obj["b"], tuple(red))


@dataclass(frozen=True)
class RedMatching:
    pairs: tuple[tuple[int, int], ...]
    kind = "red_matching"

    def problems(self, bc: BipartiteColoring) -> list[str]:
        out = []
        if len(self.pairs) != bc.a:
            out.append(f"matching has {len(self.pairs)} edges, need {bc.a}")
        xs = [x for x, _ in self.pairs]
        ys = [y for _, y in self.pairs]
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            out.append("edges are not disjoint")
        if any(not (0 <= x < bc.a and 0 <= y < bc.b) for x, y in self.pairs):
            return out + ["vertex out of range"]
        if any(not bc.is_red(x, y) for x, y in self.pairs):
            out.append("matching uses a blue edge")
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "pairs": [list(p) for p in self.pairs]}


@dataclass(frozen=True)
class BlueBiclique:
    xs: tuple[int, ...]
    ys: tuple[int, ...]
    c: int
    kind = "blue_biclique"

    def problems(self, bc: BipartiteColoring) -> list[str]:
        out = []
        if not 0 <= self.c <= bc.a - 1:
            out.append(f"c={self.c} outside 0..a-1")
        if len(set(self.xs)) != self.c + 1 or len(self.xs) != self.c + 1:
            out.append("need c+1 distinct X vertices")
        if len(set(self.ys)) != bc.b - self.c or len(self.ys) != bc.b - self.c:
            out.append("need b-c distinct Y vertices")
        if any(not 0 <= x < bc.a for x in self.xs) or any(not 0 <= y < bc.b for y in self.ys):
            return out + ["vertex out of range"]
        if any(bc.is_red(x, y) for x in self.xs for y in self.ys):
            out.append("biclique has a red edge")
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "xs": list(self.xs), "ys": list(self.ys), "c": self.c}


HallOutcome = RedMatching | BlueBiclique


def hall_witness(bc: BipartiteColoring) -> HallOutcome:
    """Red X-saturating matching, or the blue biclique from a Hall-violating set."""
    if bc.a > bc.b:
        raise ValueError("need a <= b")
    match_y = [-1] * bc.b

    def augment(x: int, seen: list[bool]) -> bool:
        for y in bits(bc.red[x]):
            if not seen[y]:
                seen[y] = True
                if match_y[y] < 0 or augment(match_y[y], seen):
                    match_y[y] = x
                    return True
        return False

    for x in range(bc.a):
        seen = [False] * bc.b
        if not augment(x, seen):
            # vertices reachable from x along alternating paths: S in X, N(S) in Y
            s_mask, n_mask, frontier = 1 << x, 0, [x]
            while frontier:
                nxt = []
                for u in frontier:
                    for y in bits(bc.red[u] & ~n_mask):
                        n_mask |= 1 << y
                        w = match_y[y]
                        if w >= 0 and not s_mask >> w & 1:
                            s_mask |= 1 << w
                            nxt.append(w)
                frontier = nxt
            xs = tuple(bits(s_mask))
            ys = tuple(y for y in range(bc.b) if not n_mask >> y & 1)
            return BlueBiclique(xs, ys, len(xs) - 1)
    pairs = sorted((match_y[y], y) for y in range(bc.b) if match_y[y] >= 0)
    return RedMatching(tuple(pairs))


# -- complement clique ----------------------------------------------------


def complement_clique(g: SimpleGraph, size: int) -> tuple[int, ...] | None:
    """A set of ``size`` pairwise non-adjacent vertices of ``g``, or None if none exists."""
    if not 0 <= size <= g.n:
        raise ValueError(f"size {size} outside 0..{g.n}")
    full = (1 << g.n) - 1
    comp = [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)]
    if size == 0:
        return ()
    chosen: list[int] = []

    def grow(cand: int) -> bool:
        if len(chosen) == size:
            return True
        if cand.bit_count() < size - len(chosen):
            return False
        while cand:
            if cand.bit_count() < size - len(chosen):
                return False
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            chosen.append(v)
            if grow(cand & comp[v]):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if grow(full) else None


def turan_forces_clique(g: SimpleGraph, size: int) -> bool:
    """True when the complement has more than the Turan number of edges for K_size."""
    if size < 2:
        return True
    e_comp = g.n * (g.n - 1) // 2 - g.edge_count()
    return e_comp > turan_bound(g.n, size - 1)


def turan_consistent(g: SimpleGraph, size: int) -> bool:
    """Turan's threshold forcing a clique in the complement implies one is found."""
    return not turan_forces_clique(g, size) or complement_clique(g, size) is not None


def is_independent_set(g: SimpleGraph, vs) -> bool:
    vs = list(vs)
    return len(set(vs)) == len(vs) and all(not g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])
