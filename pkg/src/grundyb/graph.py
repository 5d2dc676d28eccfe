"""Simple undirected graphs on vertices ``0..n-1`` and structural queries."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DuplicateEdge, LoopEdge, VertexOutOfRange

#: Girth of an acyclic graph.
INFINITE = math.inf

# Full 4-subset enumeration is used below this order.
_ENUMERATION_LIMIT = 64


@dataclass(frozen=True)
class Verdict:
    """Boolean result that carries a witness (a violation or a certificate)."""

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple  # per-vertex sorted tuple of neighbours
    _sets: tuple = field(repr=False, compare=False)
    _masks: tuple = field(repr=False, compare=False)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __len__(self):
        return self.n

    def neighbors(self, v: int) -> tuple:
        return self.adj[v]

    def neighbor_set(self, v: int) -> frozenset:
        return self._sets[v]

    def mask(self, v: int) -> int:
        """Bitset of the neighbours of ``v``."""
        return self._masks[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list:
        """Sorted list of ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)


def _from_sets(n: int, sets: Sequence[set]) -> Graph:
    adj = tuple(tuple(sorted(s)) for s in sets)
    masks = tuple(sum(1 << u for u in s) for s in sets)
    return Graph(n, adj, tuple(frozenset(s) for s in sets), masks)


def build_graph(n: int, edges: Iterable) -> Graph:
    """Build a graph, rejecting loops, repeated pairs and bad vertex ids."""
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    sets = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if v in sets[u]:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        sets[u].add(v)
        sets[v].add(u)
    return _from_sets(n, sets)


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict]:
    """Return ``G[S]`` relabelled to ``0..|S|-1`` (ascending) and the map old -> new."""
    verts = sorted(set(S))
    for v in verts:
        if not 0 <= v < G.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{G.n - 1}")
    index = {v: i for i, v in enumerate(verts)}
    sets = [{index[u] for u in G.adj[v] if u in index} for v in verts]
    return _from_sets(len(verts), sets), index


def degree_sequence(G: Graph) -> tuple:
    return tuple(sorted((len(a) for a in G.adj), reverse=True))


def is_forest(G: Graph) -> bool:
    return G.edge_count == G.n - len(components(G))


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.edge_count == G.n - 1 and len(components(G)) == 1


def components(G: Graph) -> list:
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def girth(G: Graph):
    """Length of a shortest cycle, or :data:`INFINITE` for forests.

    One breadth-first search per root; a non-tree edge ``(u, w)`` met while
    scanning from ``u`` closes a cycle of length at most
    ``dist[u] + dist[w] + 1`` and the minimum over all roots is exact.
    """
    best = INFINITE
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in G.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple  # frozensets of vertices
    articulation_vertices: frozenset


def block_decomposition(G: Graph) -> BlockDecomposition:
    """Blocks and cut vertices by the iterative depth-first lowpoint method."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    cuts = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1 or not G.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack = []
        stack = [(root, -1, iter(G.adj[root]))]
        while stack:
            u, par, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(G.adj[w])))
                    advanced = True
                    break
                if w != par and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if par == -1:
                continue
            low[par] = min(low[par], low[u])
            if low[u] >= disc[par]:
                if par != root:
                    cuts.add(par)
                block = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (par, u):
                        break
                blocks.append(frozenset(block))
        if root_children > 1:
            cuts.add(root)
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


def _induced_edge_count(G: Graph, verts: frozenset) -> int:
    return sum(1 for v in verts for u in G.adj[v] if u in verts) // 2


def is_cactus(G: Graph) -> bool:
    """True iff every block is a single edge or a cycle."""
    for block in block_decomposition(G).blocks:
        size = len(block)
        edges = _induced_edge_count(G, block)
        if not (size == 2 and edges == 1) and edges != size:
            return False
    return True


def _four_set_kind(G: Graph, quad) -> str | None:
    masks = [G.mask(v) for v in quad]
    bits = sum(1 << v for v in quad)
    degs = [bin(m & bits).count("1") for m in masks]
    edges = sum(degs) // 2
    if edges == 5:
        return "K4-e"
    if edges == 4 and all(d == 2 for d in degs):
        return "C4"
    return None


def is_k4e_c4_free(G: Graph) -> Verdict:
    """No induced ``K4 - e`` and no induced ``C4``; witness is the offending 4-set."""
    if G.n < _ENUMERATION_LIMIT:
        for quad in combinations(range(G.n), 4):
            kind = _four_set_kind(G, quad)
            if kind:
                return Verdict(False, (quad, kind))
        return Verdict(True)
    # Both patterns are exactly two non-adjacent vertices with two common
    # neighbours, so scanning pairs at distance two is equivalent.
    best = None
    for u in range(G.n):
        seen = {}
        for a in G.adj[u]:
            for w in G.adj[a]:
                if w <= u or G.has_edge(u, w):
                    continue
                if w in seen:
                    quad = tuple(sorted((u, w, seen[w], a)))
                    if best is None or quad < best:
                        best = quad
                else:
                    seen[w] = a
    if best is None:
        return Verdict(True)
    return Verdict(False, (best, _four_set_kind(G, best)))
