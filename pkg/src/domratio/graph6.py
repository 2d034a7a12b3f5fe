"""Bit-exact graph6 encoding and decoding.

The format packs the upper triangle of the adjacency matrix column by column
((0,1), (0,2), (1,2), (0,3), ...) into 6-bit chunks, adds 63 to each chunk,
and prefixes the order: one byte ``n + 63`` for n <= 62, or ``'~'`` followed
by three bytes carrying n in 18 bits for larger graphs. Trailing pad bits
must be zero. This module caps the order at 512 vertices.
"""

from __future__ import annotations

from .bitset import bit
from .errors import MalformedGraph6, TooLarge
from .graph import MAX_VERTICES, Graph

_HEADER = ">>graph6<<"


def _decode_order(data: str) -> tuple[int, int]:
    """Return (n, index of first adjacency byte)."""
    if not data:
        raise MalformedGraph6("empty line")
    c0 = ord(data[0])
    if not 63 <= c0 <= 126:
        raise MalformedGraph6(f"byte {c0} outside graph6 range")
    if c0 != 126:
        return c0 - 63, 1
    # 126 introduces the 3-byte order form; a second 126 would mean the
    # 8-byte form for n >= 258048, far past our cap.
    if len(data) >= 2 and ord(data[1]) == 126:
        raise TooLarge("8-byte order form implies n >= 258048")
    if len(data) < 4:
        raise MalformedGraph6("truncated 3-byte order")
    n = 0
    for ch in data[1:4]:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise MalformedGraph6(f"byte {c} outside graph6 range")
        n = (n << 6) | (c - 63)
    return n, 4


def parse(line: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    data = line.rstrip("\r\n")
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    n, start = _decode_order(data)
    if n > MAX_VERTICES:
        raise TooLarge(f"graph6 order {n} exceeds cap {MAX_VERTICES}")
    if n == 0:
        raise MalformedGraph6("order 0 not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[start:]
    if len(body) != nbytes:
        raise MalformedGraph6(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(body)}"
        )
    rows = [0] * n
    pos = 0  # index into the column-major upper-triangle bit vector
    u, v = 0, 1  # current cell (u, v), u < v
    for ch in body:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise MalformedGraph6(f"byte {c} outside graph6 range")
        chunk = c - 63
        for k in range(5, -1, -1):
            b = chunk >> k & 1
            if pos >= nbits:
                if b:
                    raise MalformedGraph6("nonzero padding bits")
                continue
            if b:
                rows[u] |= bit(v)
                rows[v] |= bit(u)
            pos += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, tuple(rows))


def encode(g: Graph) -> str:
    """Canonical graph6 line for ``g`` under its current labeling."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(63 + (n >> s & 0x3F)) for s in (12, 6, 0))
    chunks = []
    acc = 0
    filled = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            filled += 1
            if filled == 6:
                chunks.append(chr(acc + 63))
                acc, filled = 0, 0
    if filled:
        chunks.append(chr((acc << (6 - filled)) + 63))
    return head + "".join(chunks)


def read_lines(text: str) -> list[Graph]:
    """Parse every nonempty line of a graph6 document."""
    graphs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        try:
            graphs.append(parse(stripped))
        except (MalformedGraph6, TooLarge) as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
    return graphs


def write_lines(graphs) -> str:
    """One newline-terminated graph6 line per graph."""
    return "".join(encode(g) + "\n" for g in graphs)
