"""Graph file formats and the inline construction language.

Edge-list text::

    n m
    u v        (m lines, 0-based)

graph6 is the standard nauty ASCII encoding.  JSON is
``{"n": int, "edges": [[u, v], ...], "labels": [...]}`` with labels optional.

Inline specs (used by the CLI) compose the constructions in :mod:`graph`::

    cycle:5   path:4   complete:3   kbipartite:2,3   empty:4
    ferrers:3,2,1   grid:0,0;0,1;1,0
    whisker:cycle:5            whisker:cycle:5:0,2
    ear:cycle:4:0-1            union:cycle:3+path:2
"""

from __future__ import annotations

import json
from pathlib import Path

from . import graph as gr
from .errors import InputError
from .graph import Graph


# ---------------------------------------------------------------------------
# edge list
# ---------------------------------------------------------------------------

def to_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise InputError("empty edge-list input")
    try:
        n, m = (int(t) for t in rows[0])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise InputError(f"malformed edge list: {exc}") from None
    if any(len(r) != 2 for r in rows[1:]):
        raise InputError("each edge line needs exactly two vertices")
    if len(edges) != m:
        raise InputError(f"header promises {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(G: Graph) -> str:
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(G.n) + body


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise InputError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= v < 64 for v in vals):
        raise InputError(f"invalid graph6 character in {s!r}")
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    need = n * (n - 1) // 2
    if len(body) * 6 < need or len(body) != (need + 5) // 6:
        raise InputError(f"graph6 body has wrong length for n={n}")
    bits = []
    for v in body:
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph6_file(path: str | Path) -> list[Graph]:
    with open(path) as fh:
        return [from_graph6(ln) for ln in fh if ln.strip()]


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def graph_to_dict(G: Graph) -> dict:
    d = {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}
    if G.labels is not None:
        d["labels"] = list(G.labels)
    return d


def graph_from_dict(d: dict) -> Graph:
    try:
        return Graph.from_edges(int(d["n"]), d["edges"], d.get("labels"))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed graph JSON: {exc}") from None


# ---------------------------------------------------------------------------
# inline specs and files
# ---------------------------------------------------------------------------

def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _split_union(spec: str) -> list[str]:
    return spec.split("+")


def parse_spec(spec: str) -> Graph:
    """Build a graph from an inline construction spec (see module docstring)."""
    spec = spec.strip()
    head, _, rest = spec.partition(":")
    try:
        if head == "cycle":
            return gr.cycle(int(rest))
        if head == "path":
            return gr.path(int(rest))
        if head == "complete":
            return gr.complete(int(rest))
        if head == "empty":
            return gr.empty_graph(int(rest))
        if head == "kbipartite":
            a, b = _ints(rest)
            return gr.complete_bipartite(a, b)
        if head == "ferrers":
            return gr.ferrers_graph(_ints(rest))
        if head == "grid":
            pts = [_ints(p) for p in rest.split(";") if p.strip()]
            if any(len(p) != 2 for p in pts):
                raise InputError("grid points are x,y pairs separated by ';'")
            return gr.grid_subgraph(pts)
        if head == "union":
            parts = _split_union(rest)
            G = parse_spec(parts[0])
            for p in parts[1:]:
                G = gr.disjoint_union(G, parse_spec(p))
            return G
        if head == "whisker":
            base, subset = _split_trailing(rest, lambda t: all(c.isdigit() or c == "," for c in t))
            G = parse_spec(base)
            return gr.whisker(G, _ints(subset)) if subset is not None else gr.whisker_all(G)
        if head == "ear":
            base, edge = _split_trailing(rest, lambda t: "-" in t)
            if edge is None:
                raise InputError("ear spec needs a trailing u-v edge")
            G = parse_spec(base)
            u, v = edge.split("-")
            return gr.add_ear(G, (int(u), int(v)))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad spec {spec!r}: {exc}") from None
    raise InputError(f"unknown graph spec {spec!r}")


def _split_trailing(rest: str, looks_like_arg) -> tuple[str, str | None]:
    base, sep, last = rest.rpartition(":")
    if sep and base and looks_like_arg(last):
        try:
            parse_spec(base)
        except InputError:
            return rest, None
        return base, last
    return rest, None


def load_graph(source: str) -> Graph:
    """Load from a file path (format by suffix) or fall back to an inline spec."""
    p = Path(source)
    if p.is_file():
        text = p.read_text()
        if p.suffix == ".g6":
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) != 1:
                raise InputError(f"{source}: expected exactly one graph6 line, found {len(lines)}")
            return from_graph6(lines[0])
        if p.suffix == ".json":
            try:
                return graph_from_dict(json.loads(text))
            except json.JSONDecodeError as exc:
                raise InputError(f"{source}: {exc}") from None
        return from_edge_list(text)
    return parse_spec(source)
