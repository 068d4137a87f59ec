"""Interval graph recognition with a positive certificate.

Route: a graph is interval iff its maximal cliques admit a linear order in
which the cliques containing any fixed vertex are consecutive.  We test
chordality first (interval graphs are chordal, and chordal graphs have at
most n maximal cliques), enumerate maximal cliques, then backtrack over
clique orderings.  A successful ordering immediately gives a realization:
vertex v gets the closed interval [first, last] of positions of cliques
containing v.  Worst case is exponential, which is fine at desk scale and
buys us the certificate for free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, IntervalRealization, intersection_graph


@dataclass(frozen=True)
class RecognitionResult:
    is_interval: bool
    realization: IntervalRealization | None = None
    reason: str | None = None


def recognize(g: Graph) -> RecognitionResult:
    """Decide interval-ness; positive results carry a verifying realization."""
    if g.n == 0:
        return RecognitionResult(True, IntervalRealization(()))
    if not is_chordal(g):
        return RecognitionResult(False, reason="not-chordal")
    cliques = _maximal_clique_masks(g)
    order = _consecutive_ordering(cliques)
    if order is None:
        return RecognitionResult(False, reason="cliques-not-consecutive")
    first = [0] * g.n
    last = [0] * g.n
    seen = 0
    for pos, idx in enumerate(order, start=1):
        m = cliques[idx]
        new = m & ~seen
        seen |= m
        while new:
            b = new & -new
            first[b.bit_length() - 1] = pos
            new ^= b
        while m:
            b = m & -m
            last[b.bit_length() - 1] = pos
            m ^= b
    realization = IntervalRealization(tuple(zip(first, last)))
    return RecognitionResult(True, realization)


def verify_realization(g: Graph, r: IntervalRealization) -> bool:
    """True iff the realization induces exactly g's edges under identity labeling."""
    if len(r) != g.n:
        raise ValueError(f"realization has {len(r)} intervals for n={g.n}")
    return intersection_graph(r).rows == g.rows


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All inclusion-maximal cliques, each once, in a deterministic order."""
    out = [_mask_to_set(m) for m in _maximal_clique_masks(g)]
    return sorted(out, key=sorted)


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search; the visit order reversed is a perfect
    elimination ordering iff the graph is chordal."""
    n = g.n
    if n == 0:
        return True
    rows = g.rows
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not (visited >> v) & 1 and weight[v] > best_w:
                best, best_w = v, weight[v]
        visited |= 1 << best
        order.append(best)
        m = rows[best] & ~visited
        while m:
            b = m & -m
            weight[b.bit_length() - 1] += 1
            m ^= b
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    # eliminate in reverse visit order: earlier-visited neighbors must form
    # a clique anchored at the latest-visited one among them
    for v in order:
        earlier = 0
        m = rows[v]
        while m:
            b = m & -m
            u = b.bit_length() - 1
            if pos[u] < pos[v]:
                earlier |= b
            m ^= b
        if earlier:
            anchor = max(_mask_to_list(earlier), key=lambda u: pos[u])
            rest = earlier & ~(1 << anchor)
            if rest & ~rows[anchor]:
                return False
    return True


def _maximal_clique_masks(g: Graph) -> list[int]:
    """Bron-Kerbosch with pivoting over bitmask vertex sets."""
    rows = g.rows
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        best_cover = -1
        m = pivot_pool
        while m:
            b = m & -m
            u = b.bit_length() - 1
            cover = (p & rows[u]).bit_count()
            if cover > best_cover:
                best_cover, pivot = cover, u
            m ^= b
        cand = p & ~rows[pivot]
        while cand:
            b = cand & -cand
            v = b.bit_length() - 1
            expand(r | b, p & rows[v], x & rows[v])
            p &= ~b
            x |= b
            cand ^= b

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return out


def _consecutive_ordering(cliques: list[int]) -> list[int] | None:
    """Order the cliques so each vertex's cliques are consecutive, or None.

    Backtracking state is two bitmasks: vertices currently open (in the last
    placed clique) and vertices closed for good.  Placing a clique that hits
    a closed vertex is illegal, and closing a vertex that still occurs in an
    unplaced clique is a dead end.
    """
    m = len(cliques)
    if m <= 1:
        return list(range(m))
    order: list[int] = []

    def rec(open_mask: int, closed: int, remaining: list[int]) -> bool:
        if not remaining:
            return True
        total = 0
        for idx in remaining:
            total |= cliques[idx]
        for i, idx in enumerate(remaining):
            c = cliques[idx]
            if c & closed:
                continue
            # vertices dropped from the open set are done for good; if one
            # still occurs in an unplaced clique this branch is dead
            # (newly_closed is disjoint from c, so checking against the
            # union including c is exact)
            newly_closed = open_mask & ~c
            if newly_closed & total:
                continue
            order.append(idx)
            if rec(c, closed | newly_closed, remaining[:i] + remaining[i + 1 :]):
                return True
            order.pop()
        return False

    if rec(0, 0, list(range(m))):
        return order
    return None


def _mask_to_list(m: int) -> list[int]:
    out = []
    while m:
        b = m & -m
        out.append(b.bit_length() - 1)
        m ^= b
    return out


def _mask_to_set(m: int) -> frozenset[int]:
    return frozenset(_mask_to_list(m))
