"""Independent reference implementations used to check the library.

Everything here trades speed for obvious correctness: isomorphism by trying
all permutations, interval-ness by trying all endpoint matchings, and the
catalogue of all unlabeled graphs built by one-vertex extensions.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from intervalgraphs import (
    Graph,
    canonical_form,
    enumerate_matchings,
    intersection_graph,
    realization_from_matching,
)

# numbers of unlabeled simple graphs on n = 0..7 vertices (OEIS A000088)
ALL_GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044]

# numbers of unlabeled interval graphs on n = 1..9 vertices (OEIS A005975)
INTERVAL_GRAPH_COUNTS = {
    1: 1,
    2: 2,
    3: 4,
    4: 10,
    5: 27,
    6: 92,
    7: 369,
    8: 1807,
    9: 10344,
}


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism by exhausting all vertex bijections."""
    if g.n != h.n:
        return False
    if sorted(r.bit_count() for r in g.rows) != sorted(r.bit_count() for r in h.rows):
        return False
    for perm in permutations(range(g.n)):
        if all(
            ((g.rows[u] >> v) & 1) == ((h.rows[perm[u]] >> perm[v]) & 1)
            for u in range(g.n)
            for v in range(u + 1, g.n)
        ):
            return True
    return False


@lru_cache(maxsize=None)
def unlabeled_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class, by one-vertex extensions."""
    if n == 0:
        return (Graph(0, ()),)
    seen: dict[bytes, Graph] = {}
    for g in unlabeled_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            rows = [
                g.rows[u] | (((nb >> u) & 1) << (n - 1)) for u in range(n - 1)
            ]
            rows.append(nb)
            h = Graph(n, tuple(rows))
            code = canonical_form(h)
            if code not in seen:
                seen[code] = h
    return tuple(seen.values())


@lru_cache(maxsize=None)
def matching_graphs(n: int) -> tuple[Graph, ...]:
    """Intersection graphs of all endpoint matchings on 2n positions."""
    return tuple(
        intersection_graph(realization_from_matching(m))
        for m in enumerate_matchings(n)
    )


def is_interval_brute(g: Graph) -> bool:
    """Interval-ness decided with no canonical forms and no recognizer:
    g is interval iff some endpoint matching realizes it up to isomorphism."""
    return any(brute_isomorphic(g, h) for h in matching_graphs(g.n))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))
