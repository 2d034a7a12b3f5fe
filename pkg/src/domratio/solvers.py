"""Exact solvers for domination and independence invariants.

All three optimum solvers (minimum dominating set, minimum independent
dominating set, maximum independent set) follow the same recipe: a
branch-and-bound feasibility engine proves the optimal value by iterative
deepening, then the lexicographically smallest witness is extracted by
fixing vertices one at a time with further feasibility probes. Two runs on
the same graph therefore return identical certificates.

Branching always targets the lowest-index vertex not yet dominated, and its
candidate dominators are tried in ascending order, with tried candidates
forbidden in later branches so the search never revisits a set.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .bitset import bit, full_mask, iter_bits, lowest_bit, popcount
from .errors import SeedNotIndependent, SolveTimeout
from .graph import Graph

KIND_DOMINATION = "DOMINATION"
KIND_INDEPENDENT_DOMINATION = "INDEPENDENT_DOMINATION"
KIND_MAX_INDEPENDENT = "MAX_INDEPENDENT"

PROVED_EXHAUSTIVE = "PROVED_EXHAUSTIVE"

_TIMEOUT_CHECK_INTERVAL = 4096


@dataclass(frozen=True)
class SolveCertificate:
    """Optimal set plus the evidence that the search was exhaustive."""

    kind: str
    witness: int
    value: int
    optimality: str
    nodes_explored: int


class _Ticker:
    """Node counter with a cooperative deadline check."""

    __slots__ = ("nodes", "deadline", "countdown")

    def __init__(self, deadline: float | None):
        self.nodes = 0
        self.deadline = deadline
        # check on the very first node so an already-blown budget fails fast
        self.countdown = 1

    def tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None:
            self.countdown -= 1
            if self.countdown <= 0:
                self.countdown = _TIMEOUT_CHECK_INTERVAL
                if time.monotonic() > self.deadline:
                    raise SolveTimeout("solver exceeded its time budget")


def is_dominating(g: Graph, s: int) -> bool:
    """True iff every vertex is in ``s`` or adjacent to a vertex of ``s``."""
    covered = s
    for v in iter_bits(s):
        covered |= g.adj[v]
    return covered == full_mask(g.n)


def is_independent(g: Graph, s: int) -> bool:
    """True iff no edge has both ends in ``s``."""
    for v in iter_bits(s):
        if g.adj[v] & s:
            return False
    return True


def greedy_maximal_independent(g: Graph, seed: int, allowed: int) -> int:
    """Complete ``seed`` to a maximal independent set inside ``allowed``.

    Vertices are added in ascending index order; the result is independent
    and no vertex of ``allowed`` can be added to it.
    """
    if seed & ~allowed:
        raise ValueError("seed must be a subset of allowed")
    if not is_independent(g, seed):
        raise SeedNotIndependent("seed contains an edge")
    chosen = seed
    avail = allowed & ~chosen
    for v in iter_bits(chosen):
        avail &= ~g.adj[v]
    while avail:
        v = lowest_bit(avail)
        chosen |= bit(v)
        avail &= ~(bit(v) | g.adj[v])
    return chosen


def _greedy_dominating(g: Graph) -> int:
    """Upper-bound dominating set: repeatedly take the best coverer."""
    full = full_mask(g.n)
    chosen = 0
    covered = 0
    while covered != full:
        best_v = -1
        best_gain = -1
        for v in range(g.n):
            gain = popcount((g.adj[v] | bit(v)) & ~covered)
            if gain > best_gain:
                best_gain, best_v = gain, v
        chosen |= bit(best_v)
        covered |= g.adj[best_v] | bit(best_v)
    return chosen


def _coverage_lower_bound(undominated: int, max_cover: int) -> int:
    """Each added vertex dominates at most ``max_cover`` new vertices."""
    return -(-popcount(undominated) // max_cover)


def _dominating_feasible(
    g: Graph, required: int, forbidden: int, limit: int, ticker: _Ticker
) -> int | None:
    """A dominating set of size <= limit containing ``required`` and avoiding
    ``forbidden``, or None if none exists."""
    if required & forbidden or popcount(required) > limit:
        return None
    full = full_mask(g.n)
    max_cover = g.max_degree() + 1
    closed = [g.adj[v] | bit(v) for v in range(g.n)]

    start_dom = 0
    for v in iter_bits(required):
        start_dom |= closed[v]

    def search(chosen: int, dominated: int, banned: int, size: int) -> int | None:
        ticker.tick()
        if dominated == full:
            return chosen
        if size + _coverage_lower_bound(full & ~dominated, max_cover) > limit:
            return None
        u = lowest_bit(full & ~dominated)
        cands = closed[u] & ~banned
        for w in iter_bits(cands):
            got = search(chosen | bit(w), dominated | closed[w], banned, size + 1)
            if got is not None:
                return got
            banned |= bit(w)
        return None

    return search(required, start_dom, forbidden, popcount(required))


def _independent_dominating_feasible(
    g: Graph, required: int, forbidden: int, limit: int, ticker: _Ticker
) -> int | None:
    """A maximal independent set of size <= limit containing ``required`` and
    avoiding ``forbidden``, or None."""
    if required & forbidden or popcount(required) > limit:
        return None
    if not is_independent(g, required):
        return None
    full = full_mask(g.n)
    max_cover = g.max_degree() + 1
    closed = [g.adj[v] | bit(v) for v in range(g.n)]

    start_dom = 0
    for v in iter_bits(required):
        start_dom |= closed[v]

    def search(chosen: int, dominated: int, banned: int, size: int) -> int | None:
        ticker.tick()
        if dominated == full:
            return chosen
        if size + _coverage_lower_bound(full & ~dominated, max_cover) > limit:
            return None
        # blocked = vertices that would break independence if added
        blocked = 0
        for v in iter_bits(chosen):
            blocked |= g.adj[v]
        u = lowest_bit(full & ~dominated)
        cands = closed[u] & ~banned & ~blocked
        for w in iter_bits(cands):
            got = search(chosen | bit(w), dominated | closed[w], banned, size + 1)
            if got is not None:
                return got
            banned |= bit(w)
        return None

    return search(required, start_dom, forbidden, popcount(required))


def _max_independent_value(g: Graph, ticker: _Ticker) -> int:
    """Size of a maximum independent set."""
    best = 0

    def search(eligible: int, size: int) -> None:
        nonlocal best
        ticker.tick()
        if size + popcount(eligible) <= best:
            return
        if eligible == 0:
            best = size
            return
        v = lowest_bit(eligible)
        search(eligible & ~(bit(v) | g.adj[v]), size + 1)
        search(eligible & ~bit(v), size)

    search(full_mask(g.n), 0)
    return best


def _independent_atleast_feasible(
    g: Graph, required: int, forbidden: int, target: int, ticker: _Ticker
) -> bool:
    """Whether an independent superset of ``required`` avoiding ``forbidden``
    reaches ``target`` vertices."""
    if required & forbidden:
        return False
    if not is_independent(g, required):
        return False
    eligible = full_mask(g.n) & ~forbidden & ~required
    for v in iter_bits(required):
        eligible &= ~g.adj[v]
    need = target - popcount(required)

    def search(elig: int, size: int) -> bool:
        ticker.tick()
        if size >= need:
            return True
        if size + popcount(elig) < need:
            return False
        v = lowest_bit(elig)
        if search(elig & ~(bit(v) | g.adj[v]), size + 1):
            return True
        return search(elig & ~bit(v), size)

    return search(eligible, 0)


def _extract_lex_smallest(n: int, value: int, feasible) -> int:
    """Fix vertices in ascending order; ``feasible(required, forbidden)``
    answers whether an optimal witness extends the partial decision."""
    required = 0
    forbidden = 0
    for v in range(n):
        if popcount(required) == value:
            break
        if feasible(required | bit(v), forbidden):
            required |= bit(v)
        else:
            forbidden |= bit(v)
    return required


def min_dominating_set(g: Graph, deadline: float | None = None) -> SolveCertificate:
    """Minimum dominating set with the lexicographically smallest witness."""
    ticker = _Ticker(deadline)
    ub_set = _greedy_dominating(g)
    lb = _coverage_lower_bound(full_mask(g.n), g.max_degree() + 1)
    value = popcount(ub_set)
    for t in range(lb, value):
        if _dominating_feasible(g, 0, 0, t, ticker) is not None:
            value = t
            break
    witness = _extract_lex_smallest(
        g.n,
        value,
        lambda req, forb: _dominating_feasible(g, req, forb, value, ticker) is not None,
    )
    return SolveCertificate(
        KIND_DOMINATION, witness, value, PROVED_EXHAUSTIVE, ticker.nodes
    )


def min_independent_dominating_set(
    g: Graph, deadline: float | None = None
) -> SolveCertificate:
    """Minimum maximal independent set with the lexicographically smallest
    witness."""
    ticker = _Ticker(deadline)
    ub_set = greedy_maximal_independent(g, 0, full_mask(g.n))
    lb = _coverage_lower_bound(full_mask(g.n), g.max_degree() + 1)
    value = popcount(ub_set)
    for t in range(lb, value):
        if _independent_dominating_feasible(g, 0, 0, t, ticker) is not None:
            value = t
            break
    witness = _extract_lex_smallest(
        g.n,
        value,
        lambda req, forb: _independent_dominating_feasible(g, req, forb, value, ticker)
        is not None,
    )
    return SolveCertificate(
        KIND_INDEPENDENT_DOMINATION, witness, value, PROVED_EXHAUSTIVE, ticker.nodes
    )


def max_independent_set(g: Graph, deadline: float | None = None) -> SolveCertificate:
    """Maximum independent set with the lexicographically smallest witness."""
    ticker = _Ticker(deadline)
    value = _max_independent_value(g, ticker)
    witness = _extract_lex_smallest(
        g.n,
        value,
        lambda req, forb: _independent_atleast_feasible(g, req, forb, value, ticker),
    )
    return SolveCertificate(
        KIND_MAX_INDEPENDENT, witness, value, PROVED_EXHAUSTIVE, ticker.nodes
    )


def validate_certificate(g: Graph, cert: SolveCertificate) -> bool:
    """Check the witness against the defining predicate of its kind."""
    if popcount(cert.witness) != cert.value:
        return False
    if cert.kind == KIND_DOMINATION:
        return is_dominating(g, cert.witness)
    if cert.kind == KIND_INDEPENDENT_DOMINATION:
        return is_independent(g, cert.witness) and is_dominating(g, cert.witness)
    if cert.kind == KIND_MAX_INDEPENDENT:
        return is_independent(g, cert.witness)
    return False
