"""graph6 and edge-list readers and writers."""

from __future__ import annotations

from ..errors import MalformedInput, TooLarge
from .graph import MAX_VERTICES, Graph

FORMATS = ("graph6", "edgelist")
_G6_HEADER = b">>graph6<<"


def _as_bytes(text: bytes | str) -> bytes:
    return text.encode("ascii") if isinstance(text, str) else bytes(text)


def parse_graph(text: bytes | str, format: str) -> Graph:
    """Decode ``text`` in the named format."""
    data = _as_bytes(text)
    if format == "graph6":
        return _parse_graph6(data)
    if format == "edgelist":
        return _parse_edgelist(data)
    raise MalformedInput(f"unknown format {format!r}")


def emit_graph(G: Graph, format: str) -> bytes:
    if format == "graph6":
        return _emit_graph6(G)
    if format == "edgelist":
        return _emit_edgelist(G)
    raise MalformedInput(f"unknown format {format!r}")


def guess_format(name: str) -> str:
    return "graph6" if name.endswith((".g6", ".graph6")) else "edgelist"


# -- graph6 ------------------------------------------------------------------

def _parse_graph6(data: bytes) -> Graph:
    data = data.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise MalformedInput("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise MalformedInput("graph6 bytes must lie in 63..126")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise TooLarge("graph6 8-byte size form exceeds the vertex cap")
        if len(data) < 4:
            raise MalformedInput("truncated graph6 size field")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise TooLarge(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedInput(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise MalformedInput("nonzero graph6 padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def _emit_graph6(G: Graph) -> bytes:
    n = G.n
    if n <= 62:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    bits = [G.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        out.append(v + 63)
    return bytes(out)


# -- edge list ---------------------------------------------------------------

def _parse_edgelist(data: bytes) -> Graph:
    try:
        lines = data.decode("ascii").splitlines()
    except UnicodeDecodeError as exc:
        raise MalformedInput("edge list must be ASCII") from exc
    rows = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 1:
        raise MalformedInput("edge list must start with a line holding the vertex count")
    try:
        n = int(rows[0][0])
        pairs = [(int(a), int(b)) for a, b in (r if len(r) == 2 else _bad_row(r) for r in rows[1:])]
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
    if n < 0:
        raise MalformedInput("negative vertex count")
    seen = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInput(f"edge ({u}, {v}) has a vertex index outside 0..{n - 1}")
        if u == v:
            raise MalformedInput(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise MalformedInput(f"repeated edge {key}")
        seen.add(key)
    return Graph.from_edges(n, pairs)


def _bad_row(row: list[str]):
    raise ValueError(f"expected 'u v', got {' '.join(row)!r}")


def _emit_edgelist(G: Graph) -> bytes:
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.edges()]
    return ("\n".join(lines) + "\n").encode("ascii")
