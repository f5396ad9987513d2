"""graph6, JSON and DOT serialization."""

from __future__ import annotations

import json
from typing import Any

from oddsum.graph import Graph, VertexSet, build_graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def _decode_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        chunk, offset = data[2:8], 8
    else:
        chunk, offset = data[1:4], 4
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, offset


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else "") + _encode_size(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    data = s.encode("ascii")
    if any(c < 63 or c > 126 for c in data):
        raise ValueError("invalid graph6 character")
    n, offset = _decode_size(data)
    needed = (n * (n - 1) // 2 + 5) // 6
    body = data[offset:]
    if len(body) != needed:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {needed}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def to_json_dict(g: Graph) -> dict[str, Any]:
    out: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    out["labels"] = {} if g.labels is None else {str(v): lab for v, lab in enumerate(g.labels)}
    return out


def to_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g))


def from_json_dict(obj: dict[str, Any]) -> Graph:
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc
    raw = obj.get("labels") or {}
    labels = None
    if raw:
        labels = [""] * n
        for key, lab in raw.items():
            v = int(key)
            if not 0 <= v < n:
                raise ValueError(f"label for vertex {v} out of range")
            labels[v] = str(lab)
    return build_graph(n, edges, labels)


def from_json(text: str) -> Graph:
    return from_json_dict(json.loads(text))


def to_dot(g: Graph, name: str = "G", highlight: VertexSet | None = None) -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = []
        lab = g.label(v)
        if lab:
            attrs.append(f'label="{v}:{lab}"')
        if highlight is not None and v in highlight:
            attrs.append('style=filled fillcolor="gray"')
        lines.append(f"  {v}" + (f" [{' '.join(attrs)}]" if attrs else "") + ";")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Read JSON or graph6, whichever the text looks like."""
    s = text.strip()
    if s.startswith("{"):
        return from_json(s)
    lines = [ln for ln in s.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise ValueError("expected a single graph6 line or a JSON object")
    return from_graph6(lines[0])


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "json":
        return to_json(g) + "\n"
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown format {fmt!r}")


def vertex_set_text(s: VertexSet) -> str:
    return str(s)
