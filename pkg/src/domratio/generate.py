"""Graph sources: exhaustive isomorph-free enumeration and random sampling.

The enumerator grows graphs one vertex at a time, choosing each new vertex's
adjacency column to earlier vertices. A labeled graph is kept only if its
column-major upper-triangle bit code is the lexicographically largest over
all vertex relabelings; since appending a vertex appends bits to that code,
every prefix of a largest code is itself largest, so pruning non-canonical
prefixes loses nothing. Each isomorphism class therefore surfaces exactly
once, as its canonical labeling.

Degree-deficit feasibility prunes keep the k-regular search narrow, and a
saturated-component prune discards prefixes that can no longer reach a
connected completion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .bitset import bit, iter_bits, lowest_bit
from .errors import CapExceeded, InfeasibleSpec, RetriesExhausted
from .graph import Graph, is_connected
from .graph6 import encode

# Algorithm identifier recorded in reports so sampled corpora are replayable.
RNG_ALGORITHM = "mt19937"

_DEFAULT_CAPS = {3: 14, 4: 11}
_HIGH_DEGREE_CAP = 10

# Orders beyond this make the unconstrained enumerator explode; the regular
# enumerator has its own per-degree caps.
_ALL_GRAPHS_CAP = 10


def default_cap(k: int) -> int:
    return _DEFAULT_CAPS.get(k, _HIGH_DEGREE_CAP)


@dataclass(frozen=True)
class EnumSpec:
    """Exhaustive enumeration request: connected k-regular graphs on n
    vertices (connectivity filter optional)."""

    n: int
    k: int
    connected_only: bool = True


@dataclass(frozen=True)
class SampleSpec:
    """Pairing-model sampling request; the seed fixes the output exactly.

    The default retry budget is generous because the share of simple
    outcomes drops steeply with the degree (around exp((1-k*k)/4) for large
    orders, and worse at small ones)."""

    n: int
    k: int
    seed: int
    max_retries: int = 20000


def _columns(adj: list[int], m: int) -> list[int]:
    """Column-major upper-triangle code of the first m vertices, one int per
    column, earliest cell in the most significant bit."""
    cols = []
    for q in range(1, m):
        aq = adj[q]
        c = 0
        for p in range(q):
            c = (c << 1) | ((aq >> p) & 1)
        cols.append(c)
    return cols


def _is_lexmax_canonical(adj: list[int], m: int) -> bool:
    """Whether no relabeling of the first m vertices gives a larger code."""
    if m <= 1:
        return True
    ref = _columns(adj, m)
    order: list[int] = []

    def dfs(q: int, used: int) -> bool:
        # True when some completion of `order` beats the reference code
        if q == m:
            return False
        if q == 0:
            for cand in range(m):
                order.append(cand)
                if dfs(1, bit(cand)):
                    return True
                order.pop()
            return False
        r = ref[q - 1]
        for cand in range(m):
            if used >> cand & 1:
                continue
            acand = adj[cand]
            col = 0
            for placed in order:
                col = (col << 1) | ((acand >> placed) & 1)
            if col > r:
                return True
            if col == r:
                order.append(cand)
                if dfs(q + 1, used | bit(cand)):
                    return True
                order.pop()
        return False

    return not dfs(0, 0)


def _degrees_completable(deg: list[int], placed: int, n: int, k: int) -> bool:
    """Necessary counting conditions for extending to a k-regular graph."""
    future = n - placed
    total_deficit = 0
    for u in range(placed):
        d = k - deg[u]
        if d < 0 or d > future:
            return False
        total_deficit += d
    spare = k * future - total_deficit
    return spare >= 0 and spare % 2 == 0 and spare <= future * (future - 1)


def _has_closed_component(adj: list[int], deg: list[int], placed: int, k: int) -> bool:
    """A fully saturated component among placed vertices can never attach the
    vertices still to come."""
    remaining = (1 << placed) - 1
    while remaining:
        start = lowest_bit(remaining)
        comp = bit(start)
        frontier = comp
        while frontier:
            grown = comp
            for u in iter_bits(frontier):
                grown |= adj[u]
            frontier = grown & ~comp
            comp = grown
        remaining &= ~comp
        if all(deg[u] == k for u in iter_bits(comp)):
            return True
    return False


def enumerate_connected_regular(
    spec: EnumSpec, cap: int | None = None
) -> list[Graph]:
    """All connected k-regular graphs on n vertices, one per isomorphism
    class, sorted by graph6 encoding.

    Completeness at small order is validated in the test suite against a
    labeled brute-force enumerator bucketed by isomorphism.
    """
    n, k = spec.n, spec.k
    if k < 3 or k >= n or (n * k) % 2 != 0:
        raise InfeasibleSpec(f"no {k}-regular graphs on {n} vertices (need k >= 3, k < n, nk even)")
    effective_cap = default_cap(k) if cap is None else cap
    if n > effective_cap:
        raise CapExceeded(f"order {n} exceeds the cap {effective_cap} for degree {k}")

    adj = [0] * n
    deg = [0] * n
    out: list[Graph] = []

    def place(v: int) -> None:
        if v == n:
            g = Graph(n, tuple(adj))
            if not spec.connected_only or is_connected(g):
                out.append(g)
            return
        future_after = n - 1 - v
        unsat = [u for u in range(v) if deg[u] < k]
        lo = max(0, k - future_after)
        hi = min(k, len(unsat))
        for c in range(hi, lo - 1, -1):
            for combo in combinations(unsat, c):
                adj[v] = 0
                for u in combo:
                    adj[v] |= bit(u)
                    adj[u] |= bit(v)
                    deg[u] += 1
                deg[v] = c
                ok = _degrees_completable(deg, v + 1, n, k)
                if ok and spec.connected_only and v + 1 < n:
                    ok = not _has_closed_component(adj, deg, v + 1, k)
                if ok and _is_lexmax_canonical(adj, v + 1):
                    place(v + 1)
                for u in combo:
                    adj[u] &= ~bit(v)
                    deg[u] -= 1
                adj[v] = 0
                deg[v] = 0

    place(1)
    out.sort(key=encode)
    return out


def enumerate_all_graphs(n: int) -> list[Graph]:
    """Every graph on n vertices up to isomorphism, connected or not.

    Brute-force corpus source for solver cross-checks; capped low because
    the class count grows superexponentially.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > _ALL_GRAPHS_CAP:
        raise CapExceeded(f"order {n} exceeds the cap {_ALL_GRAPHS_CAP} for unconstrained enumeration")
    adj = [0] * n
    out: list[Graph] = []

    def place(v: int) -> None:
        if v == n:
            out.append(Graph(n, tuple(adj)))
            return
        for col in range(1 << v):
            adj[v] = col
            for u in iter_bits(col):
                adj[u] |= bit(v)
            if _is_lexmax_canonical(adj, v + 1):
                place(v + 1)
            for u in iter_bits(col):
                adj[u] &= ~bit(v)
            adj[v] = 0

    place(1)
    out.sort(key=encode)
    return out


def sample_random_regular(spec: SampleSpec) -> Graph:
    """Connected k-regular graph drawn via the pairing model.

    Shuffles n*k half-edge stubs, pairs them consecutively, and rejects the
    draw on loops, repeated edges, or disconnectedness; rejection keeps the
    simple-graph distribution unbiased. The same spec always returns the
    same graph because the retry loop advances a single seeded stream.
    """
    n, k = spec.n, spec.k
    if n < 1 or k < 0 or k >= n or (n * k) % 2 != 0:
        raise InfeasibleSpec(f"no {k}-regular graphs on {n} vertices")
    if spec.max_retries < 1:
        raise ValueError("max_retries must be positive")
    rng = random.Random(spec.seed)
    base = [v for v in range(n) for _ in range(k)]
    for _ in range(spec.max_retries):
        stubs = base[:]
        rng.shuffle(stubs)
        rows = [0] * n
        simple = True
        for i in range(0, len(stubs), 2):
            a, b = stubs[i], stubs[i + 1]
            if a == b or (rows[a] >> b) & 1:
                simple = False
                break
            rows[a] |= bit(b)
            rows[b] |= bit(a)
        if not simple:
            continue
        g = Graph(n, tuple(rows))
        if is_connected(g):
            return g
    raise RetriesExhausted(
        f"no simple connected {k}-regular graph on {n} vertices after {spec.max_retries} draws"
    )
