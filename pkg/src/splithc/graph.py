"""Immutable simple undirected graphs and certificate checkers.

Vertices are dense integers ``0..n-1``.  Adjacency is stored in CSR form
(numpy ``indptr``/``indices``) so that dense clique sides of split graphs
with ~10^4 vertices stay cheap to build and query; per-vertex neighbor
rows are sorted, which makes every "pick an arbitrary vertex" step in the
algorithms deterministic (smallest index wins).

The cycle checker ``validate_ham_cycle`` is deliberately primitive - a
length check, a permutation check and one adjacency probe per consecutive
pair - and shares no code with any solver, so it can serve as an
independent certificate validator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import IndexOutOfRange, SelfLoop


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph; no loops, no parallel edges.

    ``indptr`` has length ``n + 1``; ``indices[indptr[v]:indptr[v+1]]`` is
    the sorted neighbor row of ``v``.  Instances are immutable after
    construction and safe to share across threads.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    _nbr_sets: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def m(self) -> int:
        return int(self.indices.shape[0] // 2)

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def neighbor_set(self, v: int) -> frozenset:
        # Memoized; a racing duplicate computation is benign.
        s = self._nbr_sets.get(v)
        if s is None:
            s = frozenset(int(u) for u in self.neighbors(v))
            self._nbr_sets[v] = s
        return s

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        row = self.neighbors(u)
        i = int(np.searchsorted(row, v))
        return i < row.shape[0] and int(row[i]) == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, lexicographically."""
        for u in range(self.n):
            for w in self.neighbors(u):
                if u < w:
                    yield (u, int(w))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class HamCycle:
    """A cyclic vertex ordering; the positive certificate."""

    order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class OrientedPath:
    """A directed traversal of a simple path (>= 1 distinct vertices)."""

    order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    @property
    def head(self) -> int:
        return self.order[0]

    @property
    def tail(self) -> int:
        return self.order[-1]

    def reverse(self) -> "OrientedPath":
        return OrientedPath(self.order[::-1])

    def subpath(self, a: int, b: int) -> "OrientedPath":
        """The contiguous segment from ``a`` to ``b``, either direction."""
        i, j = self.order.index(a), self.order.index(b)
        if i <= j:
            return OrientedPath(self.order[i:j + 1])
        return OrientedPath(self.order[j:i + 1][::-1])

    def is_path_in(self, g: Graph) -> bool:
        o = self.order
        if len(set(o)) != len(o) or not o:
            return False
        return all(g.has_edge(o[i], o[i + 1]) for i in range(len(o) - 1))


def _as_edge_array(n: int, edges: Iterable[tuple[int, int]] | np.ndarray) -> np.ndarray:
    if isinstance(edges, np.ndarray):
        arr = edges.astype(np.int64, copy=False).reshape(-1, 2)
    else:
        flat = [x for uv in edges for x in uv]
        arr = np.asarray(flat, dtype=np.int64).reshape(-1, 2)
    if arr.size:
        if int(arr.min()) < 0 or int(arr.max()) >= n:
            bad = arr[(arr < 0).any(axis=1) | (arr >= n).any(axis=1)][0]
            raise IndexOutOfRange(f"edge {tuple(int(x) for x in bad)} outside [0, {n})")
        loops = arr[:, 0] == arr[:, 1]
        if loops.any():
            v = int(arr[loops][0, 0])
            raise SelfLoop(f"self-loop at vertex {v}")
    return arr


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]] | np.ndarray) -> Graph:
    """Build a graph from an edge list; duplicates are merged.

    Raises ``IndexOutOfRange`` or ``SelfLoop`` on bad input.
    """
    if n < 0:
        raise IndexOutOfRange("vertex count must be nonnegative")
    arr = _as_edge_array(n, edges)
    if arr.size == 0:
        indptr = np.zeros(n + 1, dtype=np.int64)
        return Graph(n, indptr, np.empty(0, dtype=np.int32))
    both = np.concatenate([arr, arr[:, ::-1]])
    keys = np.unique(both[:, 0] * np.int64(n) + both[:, 1])
    src = keys // n
    dst = (keys % n).astype(np.int32)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, src + 1, 1)
    np.cumsum(indptr, out=indptr)
    return Graph(n, indptr, dst)


def graph_from_csr(n: int, indptr: np.ndarray, indices: np.ndarray) -> Graph:
    """Trusted fast constructor for generators; rows must be sorted."""
    return Graph(n, np.asarray(indptr, dtype=np.int64), np.asarray(indices, dtype=np.int32))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``keep``; returns (subgraph, new->old index map)."""
    old = sorted(set(int(v) for v in keep))
    if old and (old[0] < 0 or old[-1] >= g.n):
        raise IndexOutOfRange(f"vertex {old[0] if old[0] < 0 else old[-1]} outside [0, {g.n})")
    new_of_old = {v: i for i, v in enumerate(old)}
    mask = np.zeros(g.n, dtype=bool)
    mask[old] = True
    indptr = np.zeros(len(old) + 1, dtype=np.int64)
    rows = []
    for i, v in enumerate(old):
        row = g.neighbors(v)
        sub = row[mask[row]]
        rows.append(sub)
        indptr[i + 1] = indptr[i] + sub.shape[0]
    if rows:
        relabel = np.zeros(g.n, dtype=np.int32)
        relabel[old] = np.arange(len(old), dtype=np.int32)
        indices = relabel[np.concatenate(rows)] if indptr[-1] else np.empty(0, dtype=np.int32)
    else:
        indices = np.empty(0, dtype=np.int32)
    sub = Graph(len(old), indptr, indices.astype(np.int32))
    return sub, tuple(old)


def validate_ham_cycle(g: Graph, cycle: "HamCycle | Sequence[int]") -> bool:
    """Independent certificate check: permutation of V, consecutive edges.

    Returns False on malformed input instead of raising.
    """
    order = cycle.order if isinstance(cycle, HamCycle) else tuple(cycle)
    n = g.n
    if len(order) != n or n < 3:
        return False
    seen = set()
    for v in order:
        if not isinstance(v, (int, np.integer)) or v < 0 or v >= n or v in seen:
            return False
        seen.add(v)
    return all(g.has_edge(order[i], order[(i + 1) % n]) for i in range(n))


def find_induced_star(g: Graph, arms: int) -> tuple[int, tuple[int, ...]] | None:
    """Smallest witness (center, arm tuple) of an induced K_{1,s}, or None.

    Naive enumeration over centers with independence pruning; intended for
    small arm counts (s <= 5) and test-scale graphs.  Split-aware callers
    should prefer ``split.star_free_level``.
    """
    if arms < 1:
        raise ValueError("arm count must be >= 1")
    for center in range(g.n):
        nbrs = [int(u) for u in g.neighbors(center)]
        if len(nbrs) < arms:
            continue
        witness = _independent_subset(g, nbrs, arms)
        if witness is not None:
            return center, witness
    return None


def _independent_subset(g: Graph, candidates: list[int], k: int) -> tuple[int, ...] | None:
    """Lexicographically smallest k-subset of ``candidates`` that is independent."""
    chosen: list[int] = []

    def extend(start: int) -> bool:
        if len(chosen) == k:
            return True
        # Not enough candidates left to finish.
        if len(candidates) - start < k - len(chosen):
            return False
        for i in range(start, len(candidates)):
            c = candidates[i]
            if all(not g.has_edge(c, x) for x in chosen):
                chosen.append(c)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    if extend(0):
        return tuple(chosen)
    return None


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of connected components, each sorted, smallest-first."""
    seen = np.zeros(g.n, dtype=bool)
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(int(w))
        comps.append(sorted(comp))
    return comps


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, edges)
