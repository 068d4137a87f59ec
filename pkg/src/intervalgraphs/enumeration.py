"""Exhaustive counting of unlabeled interval graphs via endpoint matchings.

Every interval graph on n vertices has a realization whose 2n endpoints are
distinct, so every one arises from some perfect matching of the positions
{1, ..., 2n} read as n intervals.  The sweep walks all (2n-1)!! matchings,
builds each intersection graph incrementally, and dedupes by canonical code;
the number of distinct codes is the count of unlabeled interval graphs.

The walk processes positions left to right: each position either opens a
fresh interval or closes one of the currently open ones.  A new vertex is
adjacent to exactly the intervals open at its left endpoint, so the labeled
graph is accumulated as a single integer key (one n-bit mask per vertex).
Once all n intervals are open, the remaining closes cannot change the graph
and are counted as a factorial instead of walked.

Parallel runs split on the partner of position 1 (2n-1 independent jobs)
with per-job dedupe sets merged at the end, so any worker count produces
the same code set.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
from time import perf_counter
from typing import Iterator

from .canonical import canonical_rows

DEFAULT_ENUMERATION_CAP = 10

_FACT = [factorial(i) for i in range(32)]


class EnumerationCapError(ValueError):
    """Raised when n exceeds the enumeration cap."""


@dataclass(frozen=True)
class EndpointMatching:
    """Perfect matching of {1, ..., 2n} into n ordered pairs (l, r), l < r."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = len(self.pairs)
        used = set()
        for l, r in self.pairs:
            if l >= r:
                raise ValueError(f"pair ({l}, {r}) is not ordered")
            used.update((l, r))
        if used != set(range(1, 2 * n + 1)):
            raise ValueError("pairs do not partition positions 1..2n")


@dataclass(frozen=True)
class CountResult:
    n: int
    i_n: int
    matchings_visited: int
    elapsed: float


def enumerate_matchings(
    n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[EndpointMatching]:
    """Yield every perfect matching of {1, ..., 2n} exactly once.

    Recursion pairs the smallest unmatched position with each larger free
    position, so matchings come out in lexicographic order and the leaf
    count is exactly (2n-1)!!.
    """
    _check_cap(n, cap)

    def rec(free: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not free:
            yield ()
            return
        p = free[0]
        for i in range(1, len(free)):
            q = free[i]
            head = (p, q)
            for tail in rec(free[1:i] + free[i + 1 :]):
                yield (head,) + tail

    for pairs in rec(tuple(range(1, 2 * n + 1))):
        yield EndpointMatching(pairs)


def realization_from_matching(m: EndpointMatching):
    """Read each matched pair as a closed interval; vertex order follows left endpoints."""
    from .graphs import IntervalRealization

    return IntervalRealization(m.pairs)


def count_interval_graphs(
    n: int, workers: int = 1, cap: int = DEFAULT_ENUMERATION_CAP
) -> CountResult:
    """Exact number of unlabeled interval graphs on n vertices."""
    t0 = perf_counter()
    codes, visited = _sweep_codes(n, workers, cap)
    return CountResult(n, len(codes), visited, perf_counter() - t0)


def enumerate_interval_graphs(
    n: int, workers: int = 1, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[bytes]:
    """Canonical codes of all unlabeled interval graphs on n vertices, lexicographic."""
    codes, _ = _sweep_codes(n, workers, cap)
    return sorted(codes)


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > cap:
        raise EnumerationCapError(f"n={n} exceeds enumeration cap {cap}")


def _sweep_codes(n: int, workers: int, cap: int) -> tuple[set[bytes], int]:
    _check_cap(n, cap)
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    jobs = [(n, q) for q in range(2, 2 * n + 1)]
    keys: set[int] = set()
    visited = 0
    if workers == 1 or len(jobs) == 1:
        for job in jobs:
            leaves, job_keys = _sweep_branch(job)
            visited += leaves
            keys |= job_keys
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for leaves, job_keys in pool.map(_sweep_branch, jobs):
                visited += leaves
                keys |= job_keys
    codes: set[bytes] = set()
    if workers == 1 or len(keys) < 4096:
        for key in keys:
            codes.add(canonical_rows(n, _rows_from_key(n, key)))
    else:
        ordered = sorted(keys)
        step = (len(ordered) + workers - 1) // workers
        chunks = [(n, ordered[i : i + step]) for i in range(0, len(ordered), step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk_codes in pool.map(_canonicalize_chunk, chunks):
                codes.update(chunk_codes)
    return codes, visited


def _sweep_branch(job: tuple[int, int]) -> tuple[int, set[int]]:
    """All matchings whose first pair is (1, q): count leaves, collect graph keys.

    Walk state: next position p, next vertex index i, bitmask of open
    intervals, accumulated graph key.  Vertex 0 opened at position 1 and may
    close only at position q (forced there); once i == n the tail closes are
    pure bookkeeping and collapse to a factorial.
    """
    n, q = job
    fact = _FACT
    keys: set[int] = set()
    add = keys.add
    counter = [0]

    def rec(p: int, i: int, open_mask: int, key: int) -> None:
        if i == n:
            k = open_mask.bit_count()
            counter[0] += fact[k - 1] if open_mask & 1 else fact[k]
            add(key)
            return
        if p == q:
            rec(p + 1, i, open_mask & ~1, key)
            return
        rec(p + 1, i + 1, open_mask | (1 << i), key | (open_mask << (n * i)))
        m = open_mask & ~1
        while m:
            b = m & -m
            rec(p + 1, i, open_mask ^ b, key)
            m ^= b

    rec(2, 1, 1, 0)
    return counter[0], keys


def _rows_from_key(n: int, key: int) -> tuple[int, ...]:
    full = (1 << n) - 1
    rows = [0] * n
    for i in range(n):
        m = (key >> (n * i)) & full
        rows[i] |= m
        while m:
            b = m & -m
            rows[b.bit_length() - 1] |= 1 << i
            m ^= b
    return tuple(rows)


def _canonicalize_chunk(chunk: tuple[int, list[int]]) -> list[bytes]:
    n, chunk_keys = chunk
    return [canonical_rows(n, _rows_from_key(n, key)) for key in chunk_keys]
