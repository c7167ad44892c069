"""File codecs: standard graph6 strings and a plain edge-list text format.

graph6 follows the published byte-level definition exactly (size field N(n),
upper-triangle bits in column order, 6-bit groups offset by 63).  The edge
list format keeps an explicit vertex-count header line ``n <count>`` because
isolated vertices are meaningful here and must survive a round trip.
"""

from __future__ import annotations

from .graphs import Graph, norm_edge


class GraphFormatError(ValueError):
    """Malformed graph input; message carries position information."""


# -- graph6 -----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(g.adj[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i : i + 6]:
            word = word << 1 | b
        out.append(chr(word + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise GraphFormatError("empty graph6 input")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"graph6 byte {ord(ch)} out of range at position {pos}")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise GraphFormatError("unsupported graph6 size field (n > 258047 or truncated)")
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 1:
        raise GraphFormatError(f"graph6 vertex count {n} out of supported range")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise GraphFormatError(
            f"graph6 body length {len(body)} != {expected} for n={n}"
        )
    bits = 0
    for ch in body:
        bits = bits << 6 | (ord(ch) - 63)
    pad = 6 * expected - nbits
    if bits & ((1 << pad) - 1):
        raise GraphFormatError("graph6 padding bits are not zero")
    bits >>= pad
    edges = []
    pos = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if bits >> pos & 1:
                edges.append((u, v))
            pos -= 1
    return Graph(n, edges)


# -- edge list ----------------------------------------------------------------


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    header_idx = None
    n = None
    for idx, raw in enumerate(lines):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "n" or len(parts) != 2:
            raise GraphFormatError(f"line {idx + 1}: expected header 'n <count>', got {raw!r}")
        try:
            n = int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {idx + 1}: vertex count {parts[1]!r} is not an integer") from None
        header_idx = idx
        break
    if n is None:
        raise GraphFormatError("missing 'n <count>' header line")
    if not 1 <= n <= 64:
        raise GraphFormatError(f"line {header_idx + 1}: vertex count {n} outside 1..64")
    edges = []
    seen = set()
    for idx in range(header_idx + 1, len(lines)):
        line = lines[idx].strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {idx + 1}: expected 'u v', got {lines[idx]!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {idx + 1}: non-integer vertex in {lines[idx]!r}") from None
        if u == v:
            raise GraphFormatError(f"line {idx + 1}: loop edge at vertex {u}")
        if u >= n or v >= n or u < 0 or v < 0:
            raise GraphFormatError(f"line {idx + 1}: vertex index outside 0..{n - 1}")
        e = norm_edge(u, v)
        if e in seen:
            raise GraphFormatError(f"line {idx + 1}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Auto-detect: edge-list if the first payload line is an 'n' header,
    otherwise graph6."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.split()[0] == "n":
            return parse_edge_list(text)
        return parse_graph6(line)
    raise GraphFormatError("empty graph input")
