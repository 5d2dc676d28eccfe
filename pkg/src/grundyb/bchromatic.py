"""m(G), exact b-chromatic number, pivoted trees and b-monotonicity."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .coloring import Coloring, is_b_valid
from .errors import EmptyGraph, NotATree, SearchLimitExceeded
from .graph import Graph, Verdict, degree_sequence, induced_subgraph, is_tree
from .grundy import _check_limit, grundy_number, m_value

MONOTONE_LIMIT = 14


def m_of(G: Graph) -> int:
    if G.n == 0:
        raise EmptyGraph("m is undefined on the empty graph")
    return m_value(degree_sequence(G))


class _BColoringSearch:
    """Find a proper k-coloring where fixed vertices dominate their classes.

    ``dominators[j]`` receives color ``j + 1``; every dominator must end up
    with all other colors in its neighbourhood.
    """

    def __init__(self, G: Graph, k: int, dominators):
        self.G = G
        self.k = k
        self.full = frozenset(range(1, k + 1))
        self.dom = {v: j + 1 for j, v in enumerate(dominators)}

    def run(self):
        G, k = self.G, self.k
        color = [0] * G.n
        for v, c in self.dom.items():
            color[v] = c
        for v, c in self.dom.items():
            if any(color[u] == c for u in G.adj[v]):
                return None
        self.color = color
        # domains: colors not used by colored neighbours
        return self._solve()

    def _domain(self, v):
        used = {self.color[u] for u in self.G.adj[v]}
        return [c for c in range(1, self.k + 1) if c not in used]

    def _missing(self, d):
        seen = {self.color[u] for u in self.G.adj[d]}
        seen.add(self.dom[d])
        return self.full - seen

    def _feasible(self):
        for d in self.dom:
            missing = self._missing(d)
            if not missing:
                continue
            free = [u for u in self.G.adj[d] if self.color[u] == 0]
            if len(free) < len(missing):
                return False
            reachable = set()
            for u in free:
                reachable.update(self._domain(u))
            if not missing <= reachable:
                return False
        return True

    def _pick(self):
        # Uncolored neighbours of unsatisfied dominators first, then DSATUR.
        G, color = self.G, self.color
        urgent = set()
        for d in self.dom:
            if self._missing(d):
                urgent.update(u for u in G.adj[d] if color[u] == 0)
        pool = urgent or [v for v in range(G.n) if color[v] == 0]
        best = None
        for v in pool:
            dom = self._domain(v)
            key = (len(dom), -len({color[u] for u in G.adj[v] if color[u]}), v)
            if best is None or key < best[0]:
                best = (key, v, dom)
        return best

    def _solve(self):
        if not self._feasible():
            return None
        best = self._pick()
        if best is None:
            return Coloring(tuple(self.color))
        _, v, dom = best
        if not dom:
            return None
        for c in dom:
            self.color[v] = c
            found = self._solve()
            if found is not None:
                return found
        self.color[v] = 0
        return None


def b_coloring_with(G: Graph, k: int, candidates=None):
    """A b-coloring with exactly ``k`` colors whose dominators come from ``candidates``."""
    if k < 1 or G.n < k:
        return None
    if k == 1:
        return Coloring((1,) * G.n) if G.edge_count == 0 else None
    pool = [v for v in (range(G.n) if candidates is None else sorted(candidates))
            if G.degree(v) >= k - 1]
    for doms in combinations(pool, k):
        found = _BColoringSearch(G, k, doms).run()
        if found is not None:
            return found
    return None


def b_number(G: Graph, limit: int | None = None):
    """Exact b-chromatic number, searched from ``m(G)`` downward, with certificate."""
    m = m_of(G)
    _check_limit(G, limit)
    for k in range(m, 0, -1):
        found = b_coloring_with(G, k)
        if found is not None:
            assert is_b_valid(G, found)
            return k, found
    raise AssertionError("no b-coloring found, which is impossible")


@dataclass(frozen=True)
class PivotReport:
    m: int
    dense: frozenset
    pivot: int | None
    is_pivoted: bool
    # v adjacent to >= 2 dense vertices, implied by the third condition
    pivot_sees_two_dense: bool | None = None


def is_pivoted_tree(T: Graph) -> PivotReport:
    if not is_tree(T):
        raise NotATree("pivot test needs a tree")
    m = m_of(T)
    dense = frozenset(v for v in range(T.n) if T.degree(v) >= m - 1)
    if len(dense) != m:
        return PivotReport(m, dense, None, False)
    for v in range(T.n):
        if v in dense:
            continue
        near = {u for u in T.adj[v] if u in dense}
        ok = all(d in near or any(u in near for u in T.adj[d]) for d in dense)
        if not ok:
            continue
        if all(T.degree(d) == m - 1 for d in near
               if any(u in dense for u in T.adj[d])):
            return PivotReport(m, dense, v, True, len(near) >= 2)
    return PivotReport(m, dense, None, False)


def b_of_tree(T: Graph, limit: int | None = None):
    """b(T) for a tree: ``m(T)`` with a dense-dominator certificate unless pivoted."""
    report = is_pivoted_tree(T)
    if report.is_pivoted:
        return b_number(T, limit)
    found = b_coloring_with(T, report.m, report.dense)
    if found is None:
        raise AssertionError("non-pivoted tree without an m-coloring")
    return report.m, found


def is_b_monotone(G: Graph, limit: int = MONOTONE_LIMIT) -> Verdict:
    """Every induced subgraph H has ``b(H) <= b(G)``.

    Subsets are scanned by decreasing size, lexicographically within a size;
    the first violation is returned as ``(subset, b(H))``. Subsets whose m
    cannot exceed ``b(G)`` are skipped.
    """
    if G.n > limit:
        raise SearchLimitExceeded(G.n, limit)
    if G.n == 0:
        return Verdict(True)
    bg, _ = b_number(G, limit=max(limit, G.n))
    for size in range(G.n - 1, 0, -1):
        for S in combinations(range(G.n), size):
            H, _ = induced_subgraph(G, S)
            if m_of(H) <= bg:
                continue
            bh, _ = b_number(H, limit=max(limit, H.n))
            if bh > bg:
                return Verdict(False, (S, bh))
    return Verdict(True)


def verify_gamma_le_2m(G: Graph, limit: int | None = None) -> bool:
    gamma, _ = grundy_number(G, limit)
    return gamma <= 2 * m_of(G)
