"""Reduction from bipartite max-degree-3 Hamiltonicity to split graphs.

From a bipartite instance with parts A and B, build two supergraphs:
h1 adds every edge inside A, h2 every edge inside B.  The source has a
Hamiltonian cycle exactly when both images do: a source cycle survives in
either image, and conversely a cycle of h1 that used an A-internal edge
would visit fewer B vertices than A ones, contradicting |A| = |B| (forced
by both images being Hamiltonian at once).

Both images are split - A (resp. B) is the clique, the other side stays
independent - and contain no induced star with five leaves: a center
would need four independent-side neighbors, i.e. degree 4 in the source.

Planarity of the source is deliberately not validated: the mapping and
its correctness use only bipartiteness and the degree bound.  Planarity
matters solely for the hardness of the source problem.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import DegreeTooHigh, NotBipartite, PremiseViolated, UsesCliqueEdge
from .graph import Graph, HamCycle, graph_from_edges, validate_ham_cycle
from .split import (
    NotSplit,
    SplitPartition,
    StarLevels,
    recognize_split,
    star_free_level,
    upgrade_to_maximum_clique,
)

__all__ = [
    "BipartiteInstance",
    "ReductionOutput",
    "bipartite_from_graph",
    "reduce_to_split",
    "verify_k15_free",
    "map_solution_back",
]

MAX_DEGREE = 3


@dataclass(frozen=True)
class BipartiteInstance:
    """A bipartite graph with declared parts and maximum degree 3."""

    graph: Graph
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]

    def __post_init__(self) -> None:
        g = self.graph
        a, b = set(self.part_a), set(self.part_b)
        if a & b or (a | b) != set(range(g.n)):
            raise NotBipartite(tuple(sorted(a & b)))
        for side in (a, b):
            for u in side:
                for w in g.neighbors(u):
                    if int(w) in side:
                        raise NotBipartite((u, int(w)))
        for v in range(g.n):
            if g.degree(v) > MAX_DEGREE:
                raise DegreeTooHigh(v, g.degree(v), MAX_DEGREE)


def bipartite_from_graph(g: Graph) -> BipartiteInstance:
    """2-color a graph into a BipartiteInstance (component roots go to A).

    Raises ``NotBipartite`` with an odd closed walk when no 2-coloring
    exists, and ``DegreeTooHigh`` past the degree bound.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        dq = deque([root])
        while dq:
            v = dq.popleft()
            for w in g.neighbors(v):
                w = int(w)
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    dq.append(w)
                elif color[w] == color[v]:
                    raise NotBipartite(_odd_walk(parent, v, w))
    part_a = tuple(v for v in range(g.n) if color[v] == 0)
    part_b = tuple(v for v in range(g.n) if color[v] == 1)
    return BipartiteInstance(g, part_a, part_b)


def _odd_walk(parent: list[int], v: int, w: int) -> tuple[int, ...]:
    up_v, up_w = [v], [w]
    seen = {v: 0}
    x = v
    while parent[x] != -1:
        x = parent[x]
        seen[x] = len(up_v)
        up_v.append(x)
    x = w
    while x not in seen:
        x = parent[x]
        up_w.append(x)
    return tuple(up_v[:seen[x] + 1] + up_w[::-1][:len(up_w) - 1])


@dataclass(frozen=True)
class ReductionOutput:
    h1: Graph
    h2: Graph
    partition1: SplitPartition
    partition2: SplitPartition
    source: BipartiteInstance


def _image(b: BipartiteInstance, clique_side: tuple[int, ...]) -> Graph:
    edges = list(b.graph.edges())
    edges.extend(combinations(sorted(clique_side), 2))
    return graph_from_edges(b.graph.n, edges)


def reduce_to_split(b: BipartiteInstance) -> ReductionOutput:
    """Build both split images and run all the asserted validators."""
    h1 = _image(b, b.part_a)
    h2 = _image(b, b.part_b)
    other1 = tuple(v for v in range(b.graph.n) if v not in set(b.part_a))
    other2 = tuple(v for v in range(b.graph.n) if v not in set(b.part_b))
    p1 = upgrade_to_maximum_clique(h1, b.part_a, other1)
    p2 = upgrade_to_maximum_clique(h2, b.part_b, other2)
    for h, p in ((h1, p1), (h2, p2)):
        if isinstance(recognize_split(h), NotSplit):
            raise AssertionError("reduction image failed split recognition")
        check = verify_k15_free(h, p)
        if check is not True:
            raise AssertionError(f"reduction image has an induced 5-star: {check}")
    return ReductionOutput(h1, h2, p1, p2, b)


def verify_k15_free(g: Graph, p: SplitPartition) -> bool | tuple[int, tuple[int, ...]]:
    """True, or a witness (center, arms) of an induced star on 5 leaves."""
    stars: StarLevels = star_free_level(g, p)
    if stars.k15_free:
        return True
    return stars.witness5


def map_solution_back(b: BipartiteInstance, c1: HamCycle, c2: HamCycle) -> HamCycle:
    """Reinterpret a cycle of h1 on the source graph.

    Valid whenever both images are Hamiltonian: the cycle then uses no
    A-internal edge, so it lives entirely in the source.  Raising
    ``UsesCliqueEdge`` therefore flags a validator bug upstream.
    """
    h1 = _image(b, b.part_a)
    h2 = _image(b, b.part_b)
    if not validate_ham_cycle(h1, c1):
        raise PremiseViolated("first certificate is not a cycle of the A-image")
    if not validate_ham_cycle(h2, c2):
        raise PremiseViolated("second certificate is not a cycle of the B-image")
    a = set(b.part_a)
    order = c1.order
    for idx in range(len(order)):
        u, v = order[idx], order[(idx + 1) % len(order)]
        if u in a and v in a:
            raise UsesCliqueEdge((u, v))
    assert validate_ham_cycle(b.graph, c1)
    return c1
