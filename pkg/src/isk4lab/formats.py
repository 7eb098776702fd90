"""graph6 and plain edge-list formats.

Only the single-byte graph6 header is supported, so graphs have at most 62
vertices.
"""

from __future__ import annotations

from .graph import Graph

MAX_GRAPH6_ORDER = 62


class FormatError(ValueError):
    pass


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_ORDER:
        raise FormatError(f"graph6 output is limited to {MAX_GRAPH6_ORDER} vertices")
    out = [chr(g.n + 63)]
    acc = 0
    filled = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(acc + 63))
                acc = filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + 63))
    return "".join(out)


def decode_graph6(data: str | bytes) -> Graph:
    if isinstance(data, bytes):
        data = data.decode("ascii")
    text = data.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise FormatError("empty graph6 string")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"byte {ord(ch)} outside the graph6 range 63..126")
    n = ord(text[0]) - 63
    if n > MAX_GRAPH6_ORDER:
        raise FormatError("multi-byte graph6 headers (n > 62) are not supported")
    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    body = text[1:]
    if len(body) != need:
        raise FormatError(f"expected {need} data bytes for n={n}, found {len(body)}")
    values = [ord(ch) - 63 for ch in body]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if values[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if need and values[-1] & ((1 << (6 * need - pairs)) - 1):
        raise FormatError("nonzero padding bits")
    return Graph(n, edges)


def parse_edgelist(text: str) -> Graph:
    """Lines ``u v``; an optional first line ``n <count>`` fixes the order.

    Blank lines and lines starting with ``#`` are ignored.
    """
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "n":
            if n is not None or edges or len(fields) != 2:
                raise FormatError(f"line {lineno}: misplaced or malformed header")
            n = _nonneg(fields[1], lineno)
            continue
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected two vertex ids")
        u, v = (_nonneg(f, lineno) for f in fields)
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    if n is None:
        n = max((v for e in edges for v in e), default=-1) + 1
    for u, v in edges:
        if v >= n:
            raise FormatError(f"vertex id {v} out of range for n={n}")
    return Graph(n, edges)


def _nonneg(field: str, lineno: int) -> int:
    try:
        value = int(field)
    except ValueError:
        raise FormatError(f"line {lineno}: {field!r} is not an integer") from None
    if value < 0:
        raise FormatError(f"line {lineno}: negative vertex id")
    return value


def format_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
