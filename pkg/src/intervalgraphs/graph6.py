"""graph6 text format: parse and emit one undirected graph per line.

Standard interchange encoding: a size header (1, 4, or 8 printable bytes),
then the upper triangle of the adjacency matrix in column-major order,
packed big-endian into 6-bit groups offset by 63.  Padding bits must be
zero and every byte must lie in [63, 126].
"""

from __future__ import annotations

from .graphs import Graph

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def emit_graph6(g: Graph) -> str:
    if g.n > (1 << 36) - 1:
        raise Graph6Error(f"n={g.n} too large for graph6")
    out = _encode_size(g.n)
    bits = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            bits = (bits << 1) | ((col >> i) & 1)
            nbits += 1
    pad = (6 - nbits % 6) % 6
    bits <<= pad
    nbits += pad
    for shift in range(nbits - 6, -1, -6):
        out.append(((bits >> shift) & 0x3F) + 63)
    return bytes(out).decode("ascii")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :].strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error(f"non-ascii byte in graph6 string: {s!r}") from exc
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} out of graph6 range [63, 126]")
    n, body = _decode_size(data)
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise Graph6Error(
            f"wrong length: n={n} needs {expect} data bytes, got {len(body)}"
        )
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    total = 6 * len(body)
    if nbits < total and bits & ((1 << (total - nbits)) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    pos = total - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def _encode_size(n: int) -> bytearray:
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    elif n <= 258047:
        out.append(126)
        for shift in (12, 6, 0):
            out.append(((n >> shift) & 0x3F) + 63)
    else:
        out.append(126)
        out.append(126)
        for shift in (30, 24, 18, 12, 6, 0):
            out.append(((n >> shift) & 0x3F) + 63)
    return out


def _decode_size(data: bytes) -> tuple[int, bytes]:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, data[8:]
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte size header")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    if n <= 62:
        raise Graph6Error(f"non-canonical long size header for n={n}")
    return n, data[4:]
