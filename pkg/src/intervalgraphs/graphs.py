"""Core graph and interval types.

Graphs are immutable: n vertices and one adjacency bitmask per vertex
(bit v of rows[u] set iff u and v are adjacent).  Bitmask rows keep the
enumeration hot loops cheap and make every type safe to share across
worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator


class Color(IntEnum):
    BLUE = 0
    RED = 1
    WHITE = 2


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bitmask adjacency rows."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row >> self.n:
                raise ValueError(f"row {u} has bits outside the vertex range")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
            if row < 0:
                raise ValueError(f"row {u} is negative")
        # symmetry: u in rows[v] iff v in rows[u]
        for u in range(self.n):
            m = self.rows[u]
            while m:
                b = m & -m
                v = b.bit_length() - 1
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
                m ^= b
        del full

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def neighbors(self, u: int) -> list[int]:
        m = self.rows[u]
        out = []
        while m:
            b = m & -m
            out.append(b.bit_length() - 1)
            m ^= b
        return out

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            m = self.rows[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    yield (u, v)
                m >>= 1
                v += 1

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on the given vertices, relabeled 0..m-1 in the given order."""
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        if len(index) != len(vs):
            raise ValueError("duplicate vertices")
        rows = [0] * len(vs)
        for i, u in enumerate(vs):
            for j, v in enumerate(vs):
                if i != j and (self.rows[u] >> v) & 1:
                    rows[i] |= 1 << j
        return Graph(len(vs), tuple(rows))


@dataclass(frozen=True)
class IntervalRealization:
    """One closed interval [lo, hi] per vertex, with exact integer endpoints."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for i, (lo, hi) in enumerate(self.intervals):
            if lo > hi:
                raise ValueError(f"interval {i} has lo={lo} > hi={hi}")

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.intervals)

    def __getitem__(self, i: int) -> tuple[int, int]:
        return self.intervals[i]


@dataclass(frozen=True)
class ColoredGraph:
    """Graph plus a blue/red/white label per vertex."""

    graph: Graph
    colors: tuple[Color, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.graph.n:
            raise ValueError(
                f"expected {self.graph.n} colors, got {len(self.colors)}"
            )

    def color_class(self, color: Color) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c == color]


def intersection_graph(realization: IntervalRealization) -> Graph:
    """Graph whose vertices are the intervals, adjacent iff the closed intervals meet.

    Two closed intervals meet iff max(lo_u, lo_v) <= min(hi_u, hi_v); endpoint
    tangency counts, which is why endpoints are integers and never floats.
    """
    iv = realization.intervals
    n = len(iv)
    rows = [0] * n
    for u in range(n):
        lo_u, hi_u = iv[u]
        for v in range(u + 1, n):
            lo_v, hi_v = iv[v]
            if max(lo_u, lo_v) <= min(hi_u, hi_v):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))
