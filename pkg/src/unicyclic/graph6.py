"""graph6 text encoding (one undirected graph per line)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [1 if i in g.adj[j] else 0 for j in range(g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise Graph6Error("graph6 characters must lie in the range '?'..'~'")
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            if len(vals) < 8:
                raise Graph6Error("truncated vertex count")
            n = 0
            for v in vals[2:8]:
                n = (n << 6) | v
            data = vals[8:]
        else:
            if len(vals) < 4:
                raise Graph6Error("truncated vertex count")
            n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
            data = vals[4:]
    else:
        n = vals[0]
        data = vals[1:]
    need = n * (n - 1) // 2
    if len(data) != (need + 5) // 6:
        raise Graph6Error(f"expected {(need + 5) // 6} data bytes for n={n}, got {len(data)}")
    bits = [(v >> (5 - i)) & 1 for v in data for i in range(6)]
    edges = []
    k = 0
    for j in range(n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[need:]):
        raise Graph6Error("nonzero padding bits")
    return Graph.from_edges(n, edges)


def read_graph6(stream: TextIO) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line; errors carry the line number."""
    for lineno, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        try:
            yield lineno, from_graph6(line)
        except (Graph6Error, ValueError) as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(to_graph6(g) + "\n")
