"""Colorings and the properness / Grundy / b-coloring predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import GapInColors, IncompleteColoring
from .graph import Graph, Verdict


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color with colors ``1..k``, every color used."""

    colors: tuple

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if any(c < 1 for c in colors):
            raise GapInColors("colors must be positive integers")
        used = set(colors)
        if used and used != set(range(1, max(used) + 1)):
            missing = min(set(range(1, max(used) + 1)) - used)
            raise GapInColors(f"color {missing} is unused")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], order: Iterable[int] | None = None):
        verts = sorted(mapping) if order is None else list(order)
        return cls(tuple(mapping[v] for v in verts))

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]

    def classes(self) -> list:
        out = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out


def _require_total(G: Graph, C: Coloring):
    if len(C) != G.n:
        raise IncompleteColoring(f"coloring has {len(C)} entries for {G.n} vertices")


def is_proper(G: Graph, C: Coloring) -> Verdict:
    _require_total(G, C)
    for u, v in G.edges():
        if C[u] == C[v]:
            return Verdict(False, (u, v))
    return Verdict(True)


def is_grundy_valid(G: Graph, C: Coloring) -> Verdict:
    """Proper, and each vertex of color j sees every color below j.

    On failure the witness is a monochromatic edge or ``(vertex, missing color)``.
    """
    proper = is_proper(G, C)
    if not proper:
        return proper
    for v in range(G.n):
        seen = {C[u] for u in G.adj[v]}
        for i in range(1, C[v]):
            if i not in seen:
                return Verdict(False, (v, i))
    return Verdict(True)


def dominates(G: Graph, C: Coloring, v: int) -> bool:
    """``v`` has a neighbour in every color class other than its own."""
    seen = {C[u] for u in G.adj[v]}
    seen.add(C[v])
    return len(seen) == C.k


def is_b_valid(G: Graph, C: Coloring) -> Verdict:
    """Proper, and every class holds a color-dominating vertex.

    Witness on success: ``{color: lowest dominating vertex}``. On failure it is
    a monochromatic edge (tuple) or the smallest color without a dominator.
    """
    proper = is_proper(G, C)
    if not proper:
        return proper
    witness = {}
    for v in range(G.n):
        c = C[v]
        if c not in witness and dominates(G, C, v):
            witness[c] = v
    for c in range(1, C.k + 1):
        if c not in witness:
            return Verdict(False, c)
    return Verdict(True, dict(sorted(witness.items())))
