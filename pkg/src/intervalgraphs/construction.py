"""A certified family of three-colored interval graphs used for lower bounds.

Fix k anchor intervals on each side of the origin: blue B_j = [-j-eps, -j+eps]
and red R_j = [j-eps, j+eps] for j = 1..k, pairwise disjoint for any
eps < 1/2.  The white pool consists of the k^2 closed intervals [-a, b] with
a, b in {1..k}; all of them contain 0, so any chosen whites form a clique.
Each choice of n-2k whites yields an n-vertex colored interval graph, and the
choice can be read back off the graph alone: a white vertex with a blue
neighbors and b red neighbors must be the interval [-a, b].  Distinct choices
therefore give non-isomorphic colored graphs, so the family has exactly
C(k^2, n-2k) members.

Geometry is exact: endpoints are scaled by twice the denominator of eps so
everything is an integer, and the resulting colored graph is the same for
every valid eps.  The production adjacency rule is the closed form (white
(a,b) meets B_j iff j <= a, meets R_j iff j <= b, whites pairwise adjacent,
anchors pairwise not); the attached realization lets tests cross-check it
against literal interval intersection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .graphs import Color, ColoredGraph, Graph, IntervalRealization

WhiteIndex = tuple[int, int]


class InfeasibleParametersError(ValueError):
    """Raised when n - 2k exceeds k^2, so no white family of the right size exists."""


@dataclass(frozen=True)
class ConstructionParams:
    """Family parameters: n vertices total, k anchors per side, exact eps."""

    n: int
    k: int
    epsilon: Fraction = field(default_factory=lambda: Fraction(1, 4))

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")
        if 2 * self.k >= self.n:
            raise ValueError(f"k must be smaller than n/2, got k={self.k}, n={self.n}")
        eps = Fraction(self.epsilon)
        object.__setattr__(self, "epsilon", eps)
        if not 0 < eps < Fraction(1, 2):
            raise ValueError(f"epsilon must lie strictly between 0 and 1/2, got {eps}")
        if self.white_count > self.k * self.k:
            raise InfeasibleParametersError(
                f"need {self.white_count} white intervals but only {self.k * self.k} exist"
            )

    @property
    def white_count(self) -> int:
        return self.n - 2 * self.k

    @property
    def scale(self) -> int:
        # times 2*denominator(eps), so every anchor endpoint is an integer
        return 2 * self.epsilon.denominator

    @property
    def scaled_epsilon(self) -> int:
        return 2 * self.epsilon.numerator


@dataclass(frozen=True)
class AnchorSet:
    """Scaled-integer anchor intervals: blues left of the origin, reds right."""

    blues: tuple[tuple[int, int], ...]
    reds: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class WhiteFamily:
    """The k^2 candidate white intervals [-a, b], indexed by (a, b)."""

    k: int
    scale: int

    def indices(self) -> list[WhiteIndex]:
        return [(a, b) for a in range(1, self.k + 1) for b in range(1, self.k + 1)]

    def interval(self, index: WhiteIndex) -> tuple[int, int]:
        a, b = index
        if not (1 <= a <= self.k and 1 <= b <= self.k):
            raise ValueError(f"white index {index} out of range for k={self.k}")
        return (-self.scale * a, self.scale * b)


@dataclass(frozen=True)
class ColoredIntervalGraph:
    """Family member: colored graph plus the realization it was built from."""

    colored: ColoredGraph
    realization: IntervalRealization

    @property
    def graph(self) -> Graph:
        return self.colored.graph

    @property
    def colors(self) -> tuple[Color, ...]:
        return self.colored.colors


def anchor_set(params: ConstructionParams) -> AnchorSet:
    s, e = params.scale, params.scaled_epsilon
    blues = tuple((-s * j - e, -s * j + e) for j in range(1, params.k + 1))
    reds = tuple((s * j - e, s * j + e) for j in range(1, params.k + 1))
    return AnchorSet(blues, reds)


def white_family(params: ConstructionParams) -> WhiteFamily:
    return WhiteFamily(params.k, params.scale)


def build_colored_graph(
    params: ConstructionParams, whites: Iterable[WhiteIndex]
) -> ColoredIntervalGraph:
    """Assemble the family member for one choice of white intervals.

    Vertices are ordered B_1..B_k, R_1..R_k, then the chosen whites in
    lexicographic index order.
    """
    k = params.k
    chosen = sorted(whites)
    if len(set(chosen)) != len(chosen):
        raise ValueError("duplicate white indices")
    if len(chosen) != params.white_count:
        raise ValueError(
            f"need exactly {params.white_count} white indices, got {len(chosen)}"
        )
    family = white_family(params)
    for idx in chosen:
        family.interval(idx)  # range check
    n = params.n
    rows = [0] * n
    for w, (a, b) in enumerate(chosen, start=2 * k):
        for j in range(1, a + 1):  # blue anchors B_1..B_a
            rows[w] |= 1 << (j - 1)
            rows[j - 1] |= 1 << w
        for j in range(1, b + 1):  # red anchors R_1..R_b
            rows[w] |= 1 << (k + j - 1)
            rows[k + j - 1] |= 1 << w
        for w2 in range(2 * k, w):  # whites all contain the origin
            rows[w] |= 1 << w2
            rows[w2] |= 1 << w
    graph = Graph(n, tuple(rows))
    colors = (Color.BLUE,) * k + (Color.RED,) * k + (Color.WHITE,) * len(chosen)
    anchors = anchor_set(params)
    intervals = anchors.blues + anchors.reds + tuple(
        family.interval(idx) for idx in chosen
    )
    return ColoredIntervalGraph(
        ColoredGraph(graph, colors), IntervalRealization(intervals)
    )


def decode_white_vertex(member: ColoredIntervalGraph, w: int) -> WhiteIndex:
    """Read a white vertex's interval [-a, b] off its anchor degrees.

    a is the number of blue neighbors and b the number of red neighbors;
    no other information is needed.
    """
    colors = member.colors
    if colors[w] is not Color.WHITE:
        raise ValueError(f"vertex {w} is {colors[w].name.lower()}, not white")
    a = b = 0
    for v in member.graph.neighbors(w):
        if colors[v] is Color.BLUE:
            a += 1
        elif colors[v] is Color.RED:
            b += 1
    return (a, b)


def recover_white_indices(member: ColoredIntervalGraph) -> set[WhiteIndex]:
    """Invert the construction: the exact set of white indices used.

    Out-of-range or repeated decodes mean the input is not a family member.
    """
    colors = member.colors
    k = sum(1 for c in colors if c is Color.BLUE)
    out: set[WhiteIndex] = set()
    for w, c in enumerate(colors):
        if c is not Color.WHITE:
            continue
        a, b = decode_white_vertex(member, w)
        if not (1 <= a <= k and 1 <= b <= k):
            raise ValueError(f"decoded index ({a}, {b}) out of range for k={k}")
        if (a, b) in out:
            raise ValueError(f"white index ({a}, {b}) decoded twice")
        out.add((a, b))
    return out


def family_size(n: int, k: int) -> int:
    """Number of family members, C(k^2, n-2k); zero when infeasible."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if 2 * k >= n:
        raise ValueError(f"k must be smaller than n/2, got k={k}, n={n}")
    return comb(k * k, n - 2 * k)


def enumerate_family(params: ConstructionParams) -> Iterator[ColoredIntervalGraph]:
    """All family members, one per white choice, in lexicographic choice order."""
    pool = white_family(params).indices()
    for chosen in combinations(pool, params.white_count):
        yield build_colored_graph(params, chosen)
