"""Serialization: graph6 (short form, n <= 62) and plain edge-list text."""
from __future__ import annotations

from typing import List, Tuple

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"
_MAX_GRAPH6_N = 62


class FormatError(GraphError):
    """Malformed graph6 or edge-list input."""


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > _MAX_GRAPH6_N:
        raise FormatError(f"short-form graph6 supports n <= {_MAX_GRAPH6_N}, got {n}")
    bits: List[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise FormatError("empty graph6 string")
    first = ord(s[0]) - 63
    if first == 63:
        raise FormatError("long-form graph6 (n > 62) is not supported")
    if not (0 <= first <= _MAX_GRAPH6_N):
        raise FormatError(f"invalid graph6 size byte: {s[0]!r}")
    n = first
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise FormatError(
            f"graph6 body length {len(body)} does not match n={n} (expected {need})"
        )
    bits: List[int] = []
    for ch in body:
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise FormatError(f"invalid graph6 character: {ch!r}")
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[n * (n - 1) // 2 :]):
        raise FormatError("nonzero padding bits in graph6 body")
    return Graph(n, edges)


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    rows = [r for r in (line.strip() for line in text.splitlines()) if r]
    if not rows:
        raise FormatError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise FormatError(f"expected header 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges: List[Tuple[int, int]] = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise FormatError(f"malformed edge line: {row!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)
