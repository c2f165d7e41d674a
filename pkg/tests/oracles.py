"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here calls into the search or structure code under test; graphs are
passed around as (n, edge set) pairs or networkx graphs.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb

import networkx as nx


def edge_set(g) -> frozenset:
    return frozenset(frozenset(e) for e in g.edges())


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# -- graph structure --------------------------------------------------------


def suspended_path_orders(n: int, edges: frozenset) -> int:
    """Largest order of a path whose internal vertices have degree 2 (0 if edgeless).

    Enumerates every simple path by DFS and keeps those with degree-2 interiors.
    """
    adj = {v: set() for v in range(n)}
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    best = 0

    def walk(path):
        nonlocal best
        best = max(best, len(path))
        last = path[-1]
        if len(path) >= 2 and len(adj[last]) != 2:
            return
        for u in adj[last]:
            if u not in path:
                walk(path + [u])

    for v in range(n):
        for u in adj[v]:
            walk([v, u])
    return best


def max_end_edge_matching_size(n: int, edges: frozenset) -> int:
    deg = {v: 0 for v in range(n)}
    for e in edges:
        for v in e:
            deg[v] += 1
    ends = [tuple(e) for e in edges if any(deg[v] == 1 for v in e)]
    for size in range(len(ends), 0, -1):
        for sub in combinations(ends, size):
            verts = [v for e in sub for v in e]
            if len(set(verts)) == len(verts):
                return size
    return 0


def max_end_edge_star_size(n: int, edges: frozenset) -> int:
    deg = {v: 0 for v in range(n)}
    for e in edges:
        for v in e:
            deg[v] += 1
    best = 0
    for c in range(n):
        leaves = sum(1 for e in edges if c in e and deg[next(iter(e - {c}))] == 1)
        best = max(best, leaves)
    return best


def is_suspended_path(n: int, edges: frozenset, path) -> bool:
    if len(path) < 2 or len(set(path)) != len(path):
        return False
    deg = {v: sum(1 for e in edges if v in e) for v in range(n)}
    return all(frozenset(p) in edges for p in zip(path, path[1:])) and all(deg[v] == 2 for v in path[1:-1])


# -- counting and isomorphism -------------------------------------------------


@lru_cache(maxsize=None)
def labeled_connected(n: int) -> int:
    """Number of connected labeled graphs on n vertices."""
    if n <= 1:
        return 1
    total = 2 ** comb(n, 2)
    for k in range(1, n):
        total -= comb(n - 1, k - 1) * labeled_connected(k) * 2 ** comb(n - k, 2)
    return total


def naive_connected_classes(n: int) -> list[nx.Graph]:
    """Enumerate every labeled graph, keep connected ones, dedupe by isomorphism."""
    pairs = list(combinations(range(n), 2))
    reps: dict[tuple, list[nx.Graph]] = {}
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        if n and not nx.is_connected(h):
            continue
        key = (h.number_of_edges(), tuple(sorted(d for _, d in h.degree())))
        bucket = reps.setdefault(key, [])
        if not any(nx.is_isomorphic(h, r) for r in bucket):
            bucket.append(h)
    return [r for bucket in reps.values() for r in bucket]


def automorphism_count(n: int, edges: frozenset) -> int:
    return sum(1 for p in permutations(range(n)) if {frozenset((p[u], p[v])) for u, v in map(tuple, edges)} == edges)


# -- colorings ---------------------------------------------------------------


def all_colorings(N: int):
    """Every red edge set of K_N, as frozensets of pairs."""
    pairs = list(combinations(range(N), 2))
    for mask in range(1 << len(pairs)):
        yield frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)


def has_red_copy(N: int, red: frozenset, n: int, edges) -> bool:
    edges = [tuple(e) for e in edges]
    for image in permutations(range(N), n):
        if all((min(image[u], image[v]), max(image[u], image[v])) in red for u, v in edges):
            return True
    return False


def has_red_copy_through(N: int, red: frozenset, n: int, edges, uv) -> bool:
    edges = [tuple(e) for e in edges]
    target = tuple(sorted(uv))
    for image in permutations(range(N), n):
        imgs = [(min(image[u], image[v]), max(image[u], image[v])) for u, v in edges]
        if target in imgs and all(e in red for e in imgs):
            return True
    return False


def has_blue_tKm(N: int, red: frozenset, t: int, m: int) -> bool:
    def blue_clique(vs):
        return all((u, v) not in red for u, v in combinations(vs, 2))

    def place(avail, left):
        if left == 0:
            return True
        if len(avail) < m * left:
            return False
        first = min(avail)
        # the smallest available vertex is either skipped or in the next clique
        for rest in combinations(sorted(avail - {first}), m - 1):
            vs = (first, *rest)
            if blue_clique(vs) and place(avail - set(vs), left - 1):
                return True
        return place(avail - {first}, left)

    return place(frozenset(range(N)), t)


def naive_arrows(N: int, n: int, edges, t: int, m: int) -> bool:
    return all(has_red_copy(N, red, n, edges) or has_blue_tKm(N, red, t, m) for red in all_colorings(N))


def chromatic_profile_naive(n: int, edges) -> tuple[int, int]:
    """(chi, smallest class size over optimal colorings) by trying every assignment."""
    edges = [tuple(e) for e in edges]
    if n == 0:
        return 0, 0
    for k in range(1, n + 1):
        best = None
        for col in product(range(k), repeat=n):
            if len(set(col)) != k or any(col[u] == col[v] for u, v in edges):
                continue
            small = min(col.count(c) for c in range(k))
            best = small if best is None else min(best, small)
        if best is not None:
            return k, best
    raise AssertionError("unreachable")


# -- bipartite -----------------------------------------------------------------


def saturating_matching_exists(a: int, b: int, red) -> bool:
    """Does the red bipartite graph (masks per X vertex) match all of X?"""
    for ys in permutations(range(b), a):
        if all(red[x] >> ys[x] & 1 for x in range(a)):
            return True
    return False
