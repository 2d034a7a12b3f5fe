"""Reference implementations the tests trust instead of the package.

Everything here recomputes answers from first principles: subset scans for
the three optimum invariants, labeled backtracking for enumeration counts,
networkx for isomorphism and automorphism questions. None of it shares
search code with the solvers or the generator.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx

from domratio import Graph


def make_complete(n: int) -> Graph:
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def make_cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def make_path(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def make_kkk(k: int) -> Graph:
    return Graph.from_edges(2 * k, [(a, k + b) for a in range(k) for b in range(k)])


def make_petersen() -> Graph:
    edges = [(v, (v + 1) % 5) for v in range(5)]
    edges += [(5 + v, 5 + ((v + 2) % 5)) for v in range(5)]
    edges += [(v, 5 + v) for v in range(5)]
    return Graph.from_edges(10, edges)


def make_prism() -> Graph:
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    return Graph.from_edges(6, edges)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def neighbor_masks(g: Graph) -> list[int]:
    """Adjacency rebuilt from the edge list only."""
    nbr = [0] * g.n
    for a, b in g.edges():
        nbr[a] |= 1 << b
        nbr[b] |= 1 << a
    return nbr


def scan_dominating(nbr: list[int], n: int, subset: int) -> bool:
    for v in range(n):
        if not (subset >> v) & 1 and not (nbr[v] & subset):
            return False
    return True


def scan_independent(nbr: list[int], n: int, subset: int) -> bool:
    for v in range(n):
        if (subset >> v) & 1 and (nbr[v] & subset):
            return False
    return True


def oracle_gamma(g: Graph) -> int:
    nbr = neighbor_masks(g)
    best = g.n
    for subset in range(1, 1 << g.n):
        size = bin(subset).count("1")
        if size < best and scan_dominating(nbr, g.n, subset):
            best = size
    return best


def oracle_i(g: Graph) -> int:
    nbr = neighbor_masks(g)
    best = g.n
    for subset in range(1, 1 << g.n):
        size = bin(subset).count("1")
        if (
            size < best
            and scan_independent(nbr, g.n, subset)
            and scan_dominating(nbr, g.n, subset)
        ):
            best = size
    return best


def oracle_alpha(g: Graph) -> int:
    nbr = neighbor_masks(g)
    best = 0
    for subset in range(1 << g.n):
        size = bin(subset).count("1")
        if size > best and scan_independent(nbr, g.n, subset):
            best = size
    return best


def _subset_vertices(subset: int) -> tuple[int, ...]:
    return tuple(v for v in range(subset.bit_length()) if (subset >> v) & 1)


def oracle_lex_smallest(g: Graph, size: int, accept) -> tuple[int, ...]:
    """Lexicographically smallest accepted vertex tuple of the given size."""
    best = None
    nbr = neighbor_masks(g)
    for subset in range(1 << g.n):
        if bin(subset).count("1") != size or not accept(nbr, g.n, subset):
            continue
        verts = _subset_vertices(subset)
        if best is None or verts < best:
            best = verts
    assert best is not None
    return best


def scan_connected(g: Graph) -> bool:
    nbr = neighbor_masks(g)
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for u in range(g.n):
            if (nbr[v] >> u) & 1 and not (seen >> u) & 1:
                seen |= 1 << u
                frontier.append(u)
    return seen == (1 << g.n) - 1


def labeled_regular_adjacencies(n: int, k: int) -> list[tuple[int, ...]]:
    """Every labeled k-regular graph on n vertices, via plain column
    backtracking with degree bookkeeping (no canonicity involved)."""
    adj = [0] * n
    deg = [0] * n
    out: list[tuple[int, ...]] = []

    def place(v: int) -> None:
        if v == n:
            if all(d == k for d in deg):
                out.append(tuple(adj))
            return
        open_past = [u for u in range(v) if deg[u] < k]
        need_min = max(0, k - (n - 1 - v))
        for c in range(need_min, min(k, len(open_past)) + 1):
            for combo in combinations(open_past, c):
                for u in combo:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                    deg[u] += 1
                deg[v] = c
                if all(k - deg[u] <= n - 1 - v for u in range(v + 1)):
                    place(v + 1)
                for u in combo:
                    adj[u] &= ~(1 << v)
                    deg[u] -= 1
                adj[v] = 0
                deg[v] = 0

    place(0)
    return out


def automorphism_count(g: Graph) -> int:
    h = to_networkx(g)
    matcher = nx.algorithms.isomorphism.GraphMatcher(h, h)
    return sum(1 for _ in matcher.isomorphisms_iter())


def isomorphic(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(to_networkx(a), to_networkx(b))
