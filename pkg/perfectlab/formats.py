"""graph6 and edge-list reading and writing.

graph6 follows the format description shipped with nauty: a length field
N(n), then the upper triangle of the adjacency matrix read column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per printable byte
(value + 63), zero-padded on the right.
"""

from pathlib import Path
from typing import Iterator

from .config import MAX_VERTICES
from .errors import GraphParseError, InvalidEdgeError, SelfLoopError, SizeLimitError
from .graph import Graph, from_edge_list

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    return "~~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))


def _upper_triangle_bits(g: Graph) -> Iterator[int]:
    for j in range(1, g.n):
        for i in range(j):
            yield g.adj[i] >> j & 1


def write_graph6(g: Graph, header: bool = False) -> str:
    """graph6 string for g (no trailing newline)."""
    out = [GRAPH6_HEADER] if header else []
    out.append(_encode_n(g.n))
    value, count = 0, 0
    for bit in _upper_triangle_bits(g):
        value = (value << 1) | bit
        count += 1
        if count == 6:
            out.append(chr(value + 63))
            value, count = 0, 0
    if count:
        out.append(chr((value << (6 - count)) + 63))
    return "".join(out)


def parse_graph6(text: str, line: int | None = None) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphParseError("empty graph6 string", line)
    data = []
    for ch in s:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise GraphParseError(f"invalid graph6 character {ch!r}", line)
        data.append(code)

    if data[0] == 63:
        width = 6 if len(data) > 1 and data[1] == 63 else 3
        start = 2 if width == 6 else 1
        field = data[start:start + width]
        if len(field) != width:
            raise GraphParseError("truncated graph6 length field", line)
        n = 0
        for part in field:
            n = (n << 6) | part
        pos = start + width
        if (width == 3 and n <= 62) or (width == 6 and n <= 258047):
            raise GraphParseError("non-canonical graph6 length field", line)
    else:
        n, pos = data[0], 1

    if n > MAX_VERTICES:
        raise SizeLimitError("graph6 input", n, MAX_VERTICES)

    nbits = n * (n - 1) // 2
    body = data[pos:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise GraphParseError(f"expected {expected} edge bytes for n={n}, got {len(body)}", line)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise GraphParseError("nonzero graph6 padding bits", line)
    return Graph(n, tuple(adj))


def read_graph6_lines(text: str) -> Iterator[Graph]:
    """Graphs from a graph6 document, one per non-blank line."""
    for number, raw in enumerate(text.splitlines(), start=1):
        if raw.strip():
            yield parse_graph6(raw, line=number)


def parse_edge_list(text: str) -> Graph:
    """Edge-list text: first line "n m", then m lines "u v" (0-indexed).

    Blank lines and lines starting with '#' are skipped.
    """
    rows = [
        (number, raw.split())
        for number, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not rows:
        raise GraphParseError("empty edge list", 1)

    number, header = rows[0]
    n, m = _int_pair(header, number, "header 'n m'")
    if n < 0 or m < 0:
        raise GraphParseError("negative vertex or edge count", number)
    if n > MAX_VERTICES:
        raise SizeLimitError("edge-list input", n, MAX_VERTICES)

    body = rows[1:]
    if len(body) < m:
        last = body[-1][0] if body else number
        raise GraphParseError(f"expected {m} edges, found {len(body)}", last)
    if len(body) > m:
        raise GraphParseError(f"more than the declared {m} edges", body[m][0])

    edges = []
    for number, tokens in body:
        u, v = _int_pair(tokens, number, "edge 'u v'")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(str(InvalidEdgeError(u, v, n)), number)
        if u == v:
            raise GraphParseError(str(SelfLoopError(u)), number)
        edges.append((u, v))
    return from_edge_list(n, edges)


def _int_pair(tokens: list[str], line: int, what: str) -> tuple[int, int]:
    if len(tokens) != 2:
        raise GraphParseError(f"expected {what}", line)
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        raise GraphParseError(f"expected {what}, got {' '.join(tokens)!r}", line) from None


def write_edge_list(g: Graph) -> str:
    edges = list(g.edges())
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def load_graphs(path: Path, fmt: str = "graph6") -> list[Graph]:
    """Read a file as graph6 lines or as a single edge list."""
    try:
        text = Path(path).read_text(encoding="ascii")
    except UnicodeDecodeError:
        raise GraphParseError(f"{path} is not ASCII text") from None
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    if fmt != "graph6":
        raise ValueError(f"Unknown format: {fmt}")
    return list(read_graph6_lines(text))
