"""First-Fit coloring, exact Grundy number and witness decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import Coloring, is_grundy_valid
from .errors import NotAPermutation, NotGrundyValid, SearchLimitExceeded
from .graph import Graph, degree_sequence, is_cactus, is_forest

DEFAULT_LIMIT = 20
TREE_LIMIT = 48
CACTUS_LIMIT = 48
# exact subset recursion below this order, witness search above
SUBSET_LIMIT = 20


def search_limit(G: Graph) -> int:
    """Default vertex cap for the exact searches, by graph class."""
    if G.n <= DEFAULT_LIMIT:
        return DEFAULT_LIMIT
    if is_forest(G):
        return TREE_LIMIT
    if is_cactus(G):
        return CACTUS_LIMIT
    return DEFAULT_LIMIT


def _check_limit(G: Graph, limit: int | None):
    limit = search_limit(G) if limit is None else limit
    if G.n > limit:
        raise SearchLimitExceeded(G.n, limit)


def m_value(degrees: Sequence[int]) -> int:
    """``max{k : d_k >= k-1}`` over a non-increasing degree list."""
    m = 0
    for k, d in enumerate(degrees, start=1):
        if d >= k - 1:
            m = k
        else:
            break
    return m


def first_fit(G: Graph, order: Sequence[int]) -> Coloring:
    """Greedy coloring: each vertex in turn takes the least color unused by its colored neighbours."""
    if sorted(order) != list(range(G.n)):
        raise NotAPermutation("order must list every vertex exactly once")
    color = [0] * G.n
    for v in order:
        taken = {color[u] for u in G.adj[v]}
        c = 1
        while c in taken:
            c += 1
        color[v] = c
    return Coloring(tuple(color))


def vertex_color_bounds(G: Graph) -> list:
    """Upper bound on the color each vertex can get in any Grundy coloring.

    A vertex of color c needs distinct neighbours holding colors 1..c-1, each
    within its own bound; iterate that matching bound from ``deg + 1`` down to
    a fixed point.
    """
    ub = [G.degree(v) + 1 for v in range(G.n)]
    changed = True
    while changed:
        changed = False
        for v in range(G.n):
            reach = 0
            for b in sorted(ub[u] for u in G.adj[v]):
                if b > reach:
                    reach += 1
            if reach + 1 < ub[v]:
                ub[v] = reach + 1
                changed = True
    return ub


class _WitnessSearch:
    """Backtracking construction of a partial Grundy coloring with a fixed top color."""

    def __init__(self, G: Graph):
        self.G = G
        self.ub = vertex_color_bounds(G)
        # (vertex, color) pairs that no Grundy coloring realises
        self.infeasible = set()

    def rooted(self, root: int, g: int):
        if self.ub[root] < g or (root, g) in self.infeasible:
            return None
        col = {root: g}
        if self._extend(col):
            return col
        self.infeasible.add((root, g))
        return None

    def _candidates(self, col, v, i):
        adj = self.G.adj
        out = []
        for u in adj[v]:
            if u in col or self.ub[u] < i or (u, i) in self.infeasible:
                continue
            if any(col.get(x) == i for x in adj[u]):
                continue
            out.append(u)
        return out

    def _extend(self, col) -> bool:
        adj = self.G.adj
        best = None
        for v in sorted(col):
            c = col[v]
            have = {col[u] for u in adj[v] if u in col}
            for i in range(c - 1, 0, -1):
                if i in have:
                    continue
                cands = self._candidates(col, v, i)
                if not cands:
                    return False
                key = (len(cands), -i, v)
                if best is None or key < best[0]:
                    best = (key, i, cands)
        if best is None:
            return True
        _, i, cands = best
        for u in cands:
            col[u] = i
            if self._extend(col):
                return True
            del col[u]
        return False

    def at_least(self, g: int):
        for r in range(self.G.n):
            col = self.rooted(r, g)
            if col is not None:
                return col
        return None


def _maximal_independent_sets(G: Graph, U: int):
    """Bitmasks of the maximal independent sets of ``G[U]``."""
    out = []

    def expand(R, P, X):
        if not P and not X:
            out.append(R)
            return
        # branch on non-neighbours of a pivot; some member of N[pivot] joins R
        pool = P | X
        pivot = (pool & -pool).bit_length() - 1
        branch = P & (G.mask(pivot) | (1 << pivot))
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            keep = ~(G.mask(v) | low)
            expand(R | low, P & keep, X & keep)
            P &= ~low
            X |= low
            branch &= ~low

    expand(0, U, 0)
    return out


def _grundy_subsets(G: Graph):
    """Exact Grundy number by recursion on the color-1 class.

    The lowest class of a Grundy coloring is a maximal independent set S of
    the vertices it colors, and the rest is a Grundy coloring of ``U - S``
    shifted by one. Returns ``(k, classes)`` with ``classes[0]`` colored 1.
    """
    memo = {0: (0, None)}

    def cap(U):
        best = 0
        W = U
        while W:
            low = W & -W
            best = max(best, bin(G.mask(low.bit_length() - 1) & U).count("1"))
            W &= ~low
        return best + 1

    def solve(U):
        if U in memo:
            return memo[U][0]
        top = cap(U)
        best, arg = 0, None
        for S in _maximal_independent_sets(G, U):
            val = 1 + solve(U & ~S)
            if val > best:
                best, arg = val, S
                if best == top:
                    break
        memo[U] = (best, arg)
        return best

    full = (1 << G.n) - 1
    k = solve(full)
    classes, U = [], full
    while U:
        S = memo[U][1]
        classes.append([v for v in range(G.n) if S >> v & 1])
        U &= ~S
    return k, classes


def _order_from_partial(G: Graph, col: dict) -> list:
    head = sorted(col, key=lambda v: (col[v], v))
    rest = [v for v in range(G.n) if v not in col]
    return head + rest


def grundy_at_least(G: Graph, g: int, limit: int | None = None):
    """Decide ``Γ(G) >= g``; returns ``(found, first_fit order or None)``."""
    if g < 1:
        raise ValueError("g must be at least 1")
    if G.n == 0:
        return False, None
    if g == 1:
        return True, list(range(G.n))
    _check_limit(G, limit)
    if G.n <= SUBSET_LIMIT:
        k, order = grundy_number(G, limit)
        return (True, order) if k >= g else (False, None)
    col = _WitnessSearch(G).at_least(g)
    if col is None:
        return False, None
    return True, _order_from_partial(G, col)


def grundy_upper_bound(G: Graph) -> int:
    if G.n == 0:
        return 0
    m = m_value(degree_sequence(G))
    return min(G.max_degree() + 1, 2 * m, max(vertex_color_bounds(G)))


def grundy_number(G: Graph, limit: int | None = None):
    """Exact Grundy number with a First-Fit order that attains it."""
    if G.n == 0:
        return 0, []
    _check_limit(G, limit)
    if G.n <= SUBSET_LIMIT:
        k, classes = _grundy_subsets(G)
        order = [v for cls in classes for v in cls]
        assert first_fit(G, order).k == k
        return k, order
    search = _WitnessSearch(G)
    for g in range(grundy_upper_bound(G), 1, -1):
        col = search.at_least(g)
        if col is not None:
            order = _order_from_partial(G, col)
            assert first_fit(G, order).k == g
            return g, order
    return 1, list(range(G.n))


@dataclass(frozen=True)
class WitnessDecomposition:
    """Levelled subgraph built from a Grundy coloring.

    ``levels[0]`` holds the root (top color), ``levels[1]`` one neighbour of
    the root per smaller color, and every later level the neighbours demanded
    by the previous one. ``children[u]`` are the neighbours of ``u`` in the
    next level with a smaller color.
    """

    root: int
    levels: tuple
    children: dict
    base_coloring: Coloring

    @property
    def t(self) -> int:
        return len(self.levels)

    def level_of(self) -> dict:
        return {v: i for i, lvl in enumerate(self.levels) for v in lvl}

    def vertices(self) -> set:
        return {v for lvl in self.levels for v in lvl}

    def parents(self) -> dict:
        out = {}
        for u, kids in self.children.items():
            for w in kids:
                out.setdefault(w, []).append(u)
        return {w: sorted(ps) for w, ps in out.items()}

    def second_level_by_color(self) -> dict:
        C = self.base_coloring
        return {C[v]: v for v in self.levels[1]} if self.t > 1 else {}


def witness_decomposition(G: Graph, C: Coloring, check_siblings: bool = False) -> WitnessDecomposition:
    """Build the levels and children map for a Grundy coloring.

    Ties go to the lowest vertex id; a demand is served by a vertex already
    placed in the level under construction when one exists. With
    ``check_siblings`` the cactus sibling property is asserted.
    """
    verdict = is_grundy_valid(G, C)
    if not verdict:
        raise NotGrundyValid(f"not a Grundy coloring: {verdict.witness}")
    k = C.k
    root = min(v for v in range(G.n) if C[v] == k)
    second = {}
    for u in G.adj[root]:
        second.setdefault(C[u], u)
    levels = [[root], sorted(second[j] for j in range(1, k))]
    placed = set(levels[0]) | set(levels[1])
    while True:
        nxt = set()
        for u in levels[-1]:
            for j in range(1, C[u]):
                same = [w for w in G.adj[u] if C[w] == j]
                if any(w in placed for w in same):
                    continue
                pending = [w for w in same if w in nxt]
                nxt.add(min(pending) if pending else min(same))
        if not nxt:
            break
        levels.append(sorted(nxt))
        placed |= nxt
    children = {}
    for i, lvl in enumerate(levels):
        below = set(levels[i + 1]) if i + 1 < len(levels) else set()
        for u in lvl:
            children[u] = tuple(w for w in G.adj[u] if w in below and C[w] < C[u])
    dec = WitnessDecomposition(root, tuple(tuple(lv) for lv in levels), children, C)
    if check_siblings:
        bad = sibling_violations(G, dec)
        assert not bad, f"sibling property fails at {bad[0]}"
    return dec


def sibling_violations(G: Graph, dec: WitnessDecomposition) -> list:
    """Triples ``(v, w, z)`` where two children of ``v`` both reach outside.

    "Outside" means a vertex of the first ``i+1`` levels that is neither
    ``v`` nor one of its children, ``v`` lying in level ``i >= 2``.
    """
    out = []
    upto = set(dec.levels[0])
    for i in range(1, dec.t):
        upto |= set(dec.levels[i])
        upper = upto | (set(dec.levels[i + 1]) if i + 1 < dec.t else set())
        for v in dec.levels[i]:
            kids = set(dec.children[v])
            reaching = [w for w in dec.children[v]
                        if any(x in upper and x not in kids and x != v for x in G.adj[w])]
            if len(reaching) > 1:
                out.append((v, reaching[0], reaching[1]))
    return out
