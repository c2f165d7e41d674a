"""Isomorphism-free generation of small connected graphs.

Every connected graph on n vertices has a non-cut vertex, so adding one
vertex (joined to a nonempty subset) to each connected graph on n - 1
vertices reaches every class; duplicates are rejected by canonical form.
Excess never decreases along that augmentation, which lets ``k_max`` prune
parents early.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator

import pynauty

from .graph_core import SimpleGraph, bits, to_graph6

MAX_GEN_VERTICES = 10
MAX_TREE_VERTICES = 16


def _nauty_graph(g: SimpleGraph) -> pynauty.Graph:
    return pynauty.Graph(g.n, adjacency_dict={v: list(bits(g.rows[v])) for v in range(g.n)})


def certificate(g: SimpleGraph) -> bytes:
    """Isomorphism-invariant byte string (nauty canonical adjacency)."""
    if g.n == 0:
        return b""
    return g.n.to_bytes(2, "big") + pynauty.certificate(_nauty_graph(g))


def canonical_order(g: SimpleGraph) -> list[int]:
    """``lab[i]`` is the vertex placed at canonical position ``i``."""
    if g.n <= 1:
        return list(range(g.n))
    return list(pynauty.canon_label(_nauty_graph(g)))


def canonical_relabel(g: SimpleGraph) -> SimpleGraph:
    """Relabel ``g`` into nauty canonical order."""
    if g.n <= 1:
        return g
    lab = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(lab):
        perm[v] = pos
    return g.relabel(perm)


def _code(g: SimpleGraph, order: tuple[int, ...]) -> tuple[int, ...]:
    rows = g.rows
    return tuple(rows[order[i]] >> order[j] & 1 for j in range(1, g.n) for i in range(j))


def canonical_form_bruteforce(g: SimpleGraph) -> tuple[int, ...]:
    """Canonical adjacency code by exhaustive search within degree cells.

    Vertices are pre-partitioned by (degree, sorted neighbor degrees); only
    orderings that list cells in a fixed order are tried. Exponential in cell
    sizes, adequate for n <= 10 outside highly regular graphs.
    """
    deg = g.degrees()
    inv = {v: (deg[v], tuple(sorted(deg[u] for u in bits(g.rows[v])))) for v in range(g.n)}
    keys = sorted(set(inv.values()))
    cells = [[v for v in range(g.n) if inv[v] == key] for key in keys]
    best = None
    for parts in product(*(permutations(c) for c in cells)):
        order = tuple(v for part in parts for v in part)
        code = _code(g, order)
        if best is None or code > best:
            best = code
    return (g.n, *best) if best is not None else (g.n,)


def gen_connected(n: int, k_max: int | None = None) -> Iterator[SimpleGraph]:
    """One representative per isomorphism class of connected graphs on ``n``
    vertices (with excess at most ``k_max`` if given), in canonical labeling,
    sorted by graph6 string."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_GEN_VERTICES:
        raise ValueError(f"n={n} above generation cap {MAX_GEN_VERTICES}")
    yield from _gen(n, k_max)


@lru_cache(maxsize=None)
def _gen(n: int, k_max: int | None) -> tuple[SimpleGraph, ...]:
    if n == 1:
        return (SimpleGraph.empty(1),)
    if n == 2:
        g = SimpleGraph.complete(2)
        return (g,) if k_max is None or g.excess_k() <= k_max else ()
    new = n - 1
    seen: dict[bytes, tuple[SimpleGraph, tuple[int, ...]]] = {}
    for parent in _gen(n - 1, k_max):
        pk = parent.excess_k()
        max_deg = n - 1 if k_max is None else min(n - 1, k_max - pk + 1)
        # pynauty reads undirected adjacency; listing each edge once suffices
        upper = {v: list(bits(parent.rows[v] >> (v + 1) << (v + 1))) for v in range(n - 1)}
        upper[new] = []
        ng = pynauty.Graph(n, adjacency_dict=upper)
        adj = ng._adjacency_dict  # swapped in place: the public setter re-validates every row
        cert_of = pynauty.certificate
        for size in range(1, max_deg + 1):
            for subset in combinations(range(n - 1), size):
                adj[new] = list(subset)
                cert = cert_of(ng)
                if cert not in seen:
                    seen[cert] = (parent, subset)
    reps = []
    for parent, subset in seen.values():
        rows = list(parent.rows) + [0]
        for u in subset:
            rows[u] |= 1 << new
            rows[new] |= 1 << u
        reps.append(canonical_relabel(SimpleGraph(n, tuple(rows))))
    reps.sort(key=to_graph6)
    return tuple(reps)


def gen_trees(n: int) -> Iterator[SimpleGraph]:
    """Non-isomorphic trees; the excess-1 augmentation stays cheap well past the general cap."""
    if not 1 <= n <= MAX_TREE_VERTICES:
        raise ValueError(f"n={n} outside 1..{MAX_TREE_VERTICES}")
    yield from _gen(n, 1)


def gen_no_isolated(n: int, max_edges: int) -> Iterator[SimpleGraph]:
    """All graphs on ``n`` vertices without isolated vertices and at most
    ``max_edges`` edges, one per isomorphism class (brute force; tiny n only)."""
    pairs = list(combinations(range(n), 2))
    seen: dict[bytes, SimpleGraph] = {}
    for e in range(1, max_edges + 1):
        for edges in combinations(pairs, e):
            g = SimpleGraph.from_edges(n, edges)
            if min(g.degrees(), default=1) == 0:
                continue
            seen.setdefault(certificate(g), g)
    yield from sorted((canonical_relabel(g) for g in seen.values()), key=to_graph6)
