"""Immutable simple undirected graphs over vertices ``0..n-1``.

Adjacency is stored as one bitmask per vertex (open neighborhoods), which
keeps every structural predicate a handful of integer operations. Graphs are
validated on construction and hashable, so they can be shared freely between
solver calls.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .bitset import bit, full_mask, iter_bits, popcount, vertex_list
from .errors import EmptySet, TooLarge

MAX_VERTICES = 512


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the open neighborhood of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise TooLarge(f"order {self.n} outside supported range 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for order {self.n}")
        allowed = full_mask(self.n)
        for v, row in enumerate(self.adj):
            if row & ~allowed:
                raise ValueError(f"vertex {v} has neighbors beyond index {self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges are merged."""
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside vertex range 0..{n - 1}")
            rows[u] |= bit(v)
            rows[v] |= bit(u)
        return cls(n, tuple(rows))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ascending (u, v) pairs with u < v."""
        out = []
        for v in range(self.n):
            for u in iter_bits(self.adj[v] >> (v + 1)):
                out.append((v, v + 1 + u))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def vertices_mask(self) -> int:
        return full_mask(self.n)

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | bit(v)

    def max_degree(self) -> int:
        return max(popcount(row) for row in self.adj)


def is_connected(g: Graph) -> bool:
    """True iff breadth-first search from vertex 0 reaches every vertex."""
    reached = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~reached
        reached |= frontier
    return reached == full_mask(g.n)


def regularity(g: Graph) -> Optional[int]:
    """Common degree of all vertices, or None if degrees differ."""
    k = popcount(g.adj[0])
    for row in g.adj:
        if popcount(row) != k:
            return None
    return k


def is_kkk(g: Graph, k: int) -> bool:
    """Whether a k-regular graph is the balanced complete bipartite K_{k,k}.

    Direct structural test: order 2k, and the neighborhood of vertex 0 must
    split V into two sides of size k with every vertex adjacent to exactly
    the opposite side. No isomorphism search involved.
    """
    if g.n != 2 * k:
        return False
    side_a = g.adj[0]
    side_b = full_mask(g.n) & ~side_a
    if popcount(side_a) != k or popcount(side_b) != k:
        return False
    for v in iter_bits(side_a):
        if g.adj[v] != side_b:
            return False
    for v in iter_bits(side_b):
        if g.adj[v] != side_a:
            return False
    return True


def induced_subgraph(g: Graph, subset: int) -> tuple[Graph, list[int]]:
    """Subgraph induced by the vertices of ``subset``.

    Returns the relabeled graph together with the index map: entry ``i`` is
    the original label of new vertex ``i`` (ascending order), so solver
    output on the subgraph can be reported in original labels.
    """
    if subset == 0:
        raise EmptySet("induced subgraph of the empty set")
    labels = vertex_list(subset)
    position = {v: i for i, v in enumerate(labels)}
    rows = []
    for v in labels:
        row = 0
        for u in iter_bits(g.adj[v] & subset):
            row |= bit(position[u])
        rows.append(row)
    return Graph(len(labels), tuple(rows)), labels


def lift_mask(mask: int, labels: list[int]) -> int:
    """Map a vertex mask of an induced subgraph back to original labels."""
    out = 0
    for i in iter_bits(mask):
        out |= bit(labels[i])
    return out


def isolated_vertices(g: Graph) -> int:
    """Mask of degree-zero vertices."""
    m = 0
    for v, row in enumerate(g.adj):
        if row == 0:
            m |= bit(v)
    return m


def connected_component(g: Graph, v: int) -> int:
    """Mask of the component containing ``v``."""
    reached = bit(v)
    frontier = reached
    while frontier:
        grow = 0
        for u in iter_bits(frontier):
            grow |= g.adj[u]
        frontier = grow & ~reached
        reached |= frontier
    return reached


__all__ = [
    "Graph",
    "MAX_VERTICES",
    "is_connected",
    "regularity",
    "is_kkk",
    "induced_subgraph",
    "lift_mask",
    "isolated_vertices",
    "connected_component",
]
