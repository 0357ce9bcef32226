"""Shared brute-force oracles for the test suite.

These helpers are deliberately independent of the library's algorithms:
permutation search for Hamiltonicity, subset enumeration for stars and
forbidden subgraphs, relabeling by explicit permutation.  They exist so
expected values in tests are computed by a second route.
"""

from __future__ import annotations

from itertools import combinations, permutations

from splithc.graph import Graph, graph_from_edges


def mk_split(k: int, i_adj) -> Graph:
    """Clique on 0..k-1 plus independent vertices with given neighbors."""
    edges = list(combinations(range(k), 2))
    for j, nbrs in enumerate(i_adj):
        for w in nbrs:
            edges.append((k + j, w))
    return graph_from_edges(k + len(i_adj), edges)


def brute_has_ham_cycle(g: Graph) -> bool:
    """Permutation search; fine for n <= 9."""
    n = g.n
    if n < 3:
        return False
    verts = list(range(1, n))
    for perm in permutations(verts):
        order = (0,) + perm
        if all(g.has_edge(order[i], order[(i + 1) % n]) for i in range(n)):
            return True
    return False


def brute_find_star(g: Graph, s: int):
    """Exhaustive (center, arm-subset) search for an induced K_{1,s}."""
    for center in range(g.n):
        nbrs = [int(w) for w in g.neighbors(center)]
        for arms in combinations(nbrs, s):
            if all(not g.has_edge(a, b) for a, b in combinations(arms, 2)):
                return center, arms
    return None


def brute_is_split(g: Graph) -> bool:
    """No induced C4, C5 or 2K2, by subset enumeration."""
    n = g.n
    # 2K2
    edges = list(g.edges())
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) == 4 and not any(
            g.has_edge(x, y) for x in (a, b) for y in (c, d)
        ):
            return False
    # induced C4 / C5
    for size in (4, 5):
        for sub in combinations(range(n), size):
            internal = [(u, v) for u, v in combinations(sub, 2) if g.has_edge(u, v)]
            if len(internal) != size:
                continue
            deg = {v: 0 for v in sub}
            for u, v in internal:
                deg[u] += 1
                deg[v] += 1
            if all(d == 2 for d in deg.values()) and _connected_subset(g, sub):
                return False
    return True


def _connected_subset(g: Graph, sub) -> bool:
    sub = set(sub)
    start = next(iter(sub))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if int(w) in sub and int(w) not in seen:
                seen.add(int(w))
                stack.append(int(w))
    return seen == sub


def permute_graph(g: Graph, perm: list[int]) -> Graph:
    return graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def canonical_small(g: Graph) -> tuple:
    """Exact canonical form by trying all labelings; n <= 5 only."""
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or key < best:
            best = key
    return (g.n, best)
