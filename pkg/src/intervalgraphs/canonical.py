"""Exact canonical codes for small graphs, plain and color-respecting.

The code of a graph is the lexicographically smallest packed upper-triangle
bit string over all admissible vertex orderings, found by ordered partition
refinement plus backtracking.  Admissible means any ordering for plain
graphs and color-class-preserving orderings for colored graphs, so equal
codes are exactly (color-preserving) isomorphism.

Exhaustive search is only viable for small n; the limit defaults to 16,
which is comfortable for counting runs that stop at n = 10.
"""

from __future__ import annotations

from .graphs import Color, ColoredGraph, Graph

DEFAULT_CANONICAL_LIMIT = 16


class CanonicalSizeError(ValueError):
    """Raised when a graph exceeds the canonicalization size limit."""


def canonical_form(g: Graph, limit: int = DEFAULT_CANONICAL_LIMIT) -> bytes:
    """Canonical code of a plain graph: header byte n, then packed edge bits."""
    if g.n > limit:
        raise CanonicalSizeError(f"n={g.n} exceeds canonicalization limit {limit}")
    return bytes([g.n]) + _packed_code(g.n, g.rows, [list(range(g.n))])


def colored_canonical_form(cg: ColoredGraph, limit: int = DEFAULT_CANONICAL_LIMIT) -> bytes:
    """Canonical code of a colored graph; vertex orderings must preserve colors.

    Header records n and the three class sizes, so graphs that differ only
    in coloring get distinct codes.
    """
    g = cg.graph
    if g.n > limit:
        raise CanonicalSizeError(f"n={g.n} exceeds canonicalization limit {limit}")
    cells = [cg.color_class(c) for c in (Color.BLUE, Color.RED, Color.WHITE)]
    sizes = [len(cell) for cell in cells]
    cells = [cell for cell in cells if cell]
    return bytes([g.n, *sizes]) + _packed_code(g.n, g.rows, cells)


def decode_canonical(code: bytes) -> Graph:
    """Rebuild the canonical representative from a plain canonical code."""
    if not code:
        raise ValueError("empty canonical code")
    n = code[0]
    nbits = n * (n - 1) // 2
    if len(code) != 1 + (nbits + 7) // 8:
        raise ValueError("canonical code has wrong length")
    bits = int.from_bytes(code[1:], "big") >> ((8 - nbits % 8) % 8)
    rows = [0] * n
    pos = nbits - 1
    for u in range(n):
        for v in range(u + 1, n):
            if (bits >> pos) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            pos -= 1
    return Graph(n, tuple(rows))


def code_hex(code: bytes) -> str:
    """Lowercase hex rendering used in logs and persisted code lists."""
    return code.hex()


def _packed_code(n: int, rows: tuple[int, ...], cells: list[list[int]]) -> bytes:
    if n == 0:
        return b""
    best = _min_code(rows, _refine(rows, cells))
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    return (best << ((8 - nbits % 8) % 8)).to_bytes(nbytes, "big") if nbits else b""


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable ordered refinement: split cells by neighbor counts per cell.

    Cell order is part of the state; subcells replace their parent in
    signature order, which keeps the refinement isomorphism-invariant.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            by_sig: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                by_sig.setdefault(sig, []).append(v)
            if len(by_sig) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(by_sig):
                    out.append(by_sig[sig])
        cells = out
        if not changed:
            return cells


def _are_twins(rows: tuple[int, ...], u: int, v: int) -> bool:
    # identical neighborhoods off {u, v}: swapping u and v is an automorphism
    return rows[u] & ~(1 << v) == rows[v] & ~(1 << u)


def _min_code(rows: tuple[int, ...], cells: list[list[int]]) -> int:
    n = len(rows)
    best: list[int | None] = [None]

    def leaf(order: list[int]) -> None:
        code = 0
        for i, u in enumerate(order):
            ru = rows[u]
            for v in order[i + 1 :]:
                code = (code << 1) | ((ru >> v) & 1)
        if best[0] is None or code < best[0]:
            best[0] = code

    def search(cells: list[list[int]]) -> None:
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            leaf([cell[0] for cell in cells])
            return
        target = cells[idx]
        branched: list[int] = []
        for v in target:
            if any(_are_twins(rows, u, v) for u in branched):
                continue
            branched.append(v)
            rest = [w for w in target if w != v]
            search(_refine(rows, cells[:idx] + [[v], rest] + cells[idx + 1 :]))

    search(cells)
    assert best[0] is not None
    return best[0]


def canonical_rows(n: int, rows: tuple[int, ...]) -> bytes:
    """Plain canonical code computed straight from adjacency rows.

    Skips Graph construction; used by the enumeration sweep where rows are
    produced in bulk and already known to be valid.
    """
    return bytes([n]) + _packed_code(n, rows, [list(range(n))])
