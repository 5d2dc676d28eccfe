"""Text formats: edge-list graph files, coloring files and DOT export.

Graph files start with ``n m`` and list ``m`` lines ``u v`` (0-based). Lines
starting with ``#`` are comments; ``# family: <spec>`` records provenance.
"""

from __future__ import annotations

from .coloring import Coloring, _require_total
from .errors import GraphError, ParseError
from .families import FamilySpec
from .graph import Graph, build_graph

PALETTE = (
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
)


def _ints(line: str, lineno: int, count: int):
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {line.strip()!r}", line=lineno)
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ParseError(f"not an integer in {line.strip()!r}", line=lineno) from None


def parse_graph_file(text: str):
    """Return ``(graph, provenance)``; provenance is a FamilySpec or None."""
    provenance = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("family:"):
                try:
                    provenance = FamilySpec.parse(body[len("family:"):].strip())
                except (ValueError, IndexError) as exc:
                    raise ParseError(f"bad provenance: {exc}", line=lineno) from None
            continue
        rows.append((lineno, line))
    if not rows:
        raise ParseError("missing header line", line=1)
    lineno, header = rows[0]
    n, m = _ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise ParseError("counts must be non-negative", line=lineno)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise ParseError(f"header announces {m} edges, found {len(body)}", line=where)
    edges, seen = [], set()
    for lineno, line in body:
        u, v = _ints(line, lineno, 2)
        try:
            build_graph(n, [(u, v)])
        except GraphError as exc:
            raise ParseError(str(exc), line=lineno) from None
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise ParseError(f"edge ({u}, {v}) given twice", line=lineno)
        seen.add(pair)
        edges.append(pair)
    return build_graph(n, edges), provenance


def parse_graph(text: str) -> Graph:
    return parse_graph_file(text)[0]


def serialize_graph(G: Graph, provenance: FamilySpec | None = None) -> str:
    lines = []
    if provenance is not None:
        lines.append(f"# family: {provenance.describe()}")
    lines.append(f"{G.n} {G.edge_count}")
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, n: int | None = None) -> Coloring:
    rows = [(i, ln) for i, ln in enumerate(text.splitlines(), start=1)
            if ln.strip() and not ln.lstrip().startswith("#")]
    if len(rows) != 1:
        raise ParseError("a coloring file holds exactly one line of colors", line=rows[1][0] if rows else 1)
    lineno, line = rows[0]
    try:
        colors = tuple(int(x) for x in line.split())
    except ValueError:
        raise ParseError("colors must be integers", line=lineno) from None
    if n is not None and len(colors) != n:
        raise ParseError(f"expected {n} colors, got {len(colors)}", line=lineno)
    try:
        return Coloring(colors)
    except ValueError as exc:
        raise ParseError(str(exc), line=lineno) from None


def serialize_coloring(C: Coloring) -> str:
    return " ".join(str(c) for c in C.colors) + "\n"


def export_dot(G: Graph, C: Coloring | None = None, name: str = "G") -> str:
    """Undirected DOT source; colored vertices are filled from a 12-color palette."""
    if C is not None:
        _require_total(G, C)
    out = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(G.n):
        if C is None:
            out.append(f"  {v};")
        else:
            fill = PALETTE[(C[v] - 1) % len(PALETTE)]
            out.append(f'  {v} [label="{v}:{C[v]}", style=filled, fillcolor="{fill}"];')
    out.extend(f"  {u} -- {v};" for u, v in G.edges())
    out.append("}")
    return "\n".join(out) + "\n"
