"""Turn a Grundy coloring into a b-coloring certificate on an induced subgraph.

Three procedures are provided, one per graph class: (K4-e, C4)-free graphs
(half the colors), graphs of girth at least 6 (two thirds) and cacti
(``k - 2 floor(log2 k)``). Each works on the witness decomposition of the
input coloring, writes a line-oriented trace and checks its own output
before returning it.

Trace lines read ``STAGE ACTION vertex old→new`` with ``-`` standing for
"absent" (a dropped vertex has new color ``-``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .coloring import Coloring, is_grundy_valid
from .errors import CertificateCheckFailed, NoWitnessFound, PreconditionViolated
from .graph import Graph, girth, induced_subgraph, is_cactus, is_k4e_c4_free
from .grundy import witness_decomposition


@dataclass(frozen=True)
class RecoloringCertificate:
    """Induced subgraph ``G[kept]`` with a b-coloring on ``p`` colors.

    ``new_coloring`` is indexed like ``kept`` (ascending vertex ids), so it is
    a coloring of ``induced_subgraph(G, kept)``. ``dominating`` lists one
    color-dominating vertex per color, in color order.
    """

    kept: tuple
    new_coloring: Coloring
    dominating: tuple
    p: int
    trace: tuple = ()

    def color_map(self) -> dict:
        return dict(zip(self.kept, self.new_coloring.colors))

    def subgraph(self, G: Graph):
        return induced_subgraph(G, self.kept)[0]

    def trace_text(self) -> str:
        return "".join(line + "\n" for line in self.trace)


def _line(stage, action, v, old, new):
    old = "-" if old is None else old
    new = "-" if new is None else new
    return f"{stage} {action} {v} {old}→{new}"


def check_certificate(G: Graph, cert: RecoloringCertificate, stage: str = "verify"):
    """Raise :class:`CertificateCheckFailed` unless the certificate is sound."""

    def fail(msg):
        raise CertificateCheckFailed(msg, stage=stage, trace=cert.trace)

    kept = set(cert.kept)
    if list(cert.kept) != sorted(kept):
        fail("kept vertices must be distinct and ascending")
    if len(cert.new_coloring) != len(cert.kept):
        fail("coloring does not cover the kept vertices")
    if cert.new_coloring.k != cert.p:
        fail(f"coloring uses {cert.new_coloring.k} colors, expected {cert.p}")
    col = cert.color_map()
    for u in cert.kept:
        for w in G.adj[u]:
            if w in kept and col[w] == col[u]:
                fail(f"edge ({u}, {w}) is monochromatic")
    if len(cert.dominating) != cert.p:
        fail("need exactly one dominating vertex per color")
    for c, d in enumerate(cert.dominating, start=1):
        if d not in kept or col[d] != c:
            fail(f"dominating vertex for color {c} is missing or miscolored")
        seen = {col[w] for w in G.adj[d] if w in kept} | {c}
        if seen != set(range(1, cert.p + 1)):
            missing = min(set(range(1, cert.p + 1)) - seen)
            fail(f"vertex {d} does not see color {missing}")


def _certificate(G, col: dict, dominating, p, trace, stage="assemble"):
    kept = tuple(sorted(col))
    try:
        coloring = Coloring(tuple(col[v] for v in kept))
    except ValueError as exc:
        raise CertificateCheckFailed(str(exc), stage=stage, trace=tuple(trace)) from None
    cert = RecoloringCertificate(kept, coloring, tuple(dominating), p, tuple(trace))
    check_certificate(G, cert, stage=stage)
    return cert


def _require_grundy(G, C):
    verdict = is_grundy_valid(G, C)
    if not verdict:
        raise PreconditionViolated(f"input coloring is not a Grundy coloring: {verdict.witness}")
    if C.k < 1:
        raise PreconditionViolated("empty coloring")


def _drop_top_class(G, C, k, trace, recurse):
    """Delete color class k, solve the rest, and lift the certificate back."""
    verts = [v for v in range(G.n) if C[v] < k]
    H, index = induced_subgraph(G, verts)
    CH = Coloring(tuple(C[v] for v in verts))
    trace.append(f"REDUCE drop-class {k} {len(verts)}→{H.n}")
    inner = recurse(H, CH)
    back = verts  # new id -> old id
    col = {back[v]: c for v, c in inner.color_map().items()}
    dom = [back[d] for d in inner.dominating]
    return _certificate(G, col, dom, inner.p, trace + list(inner.trace))


def _single_vertex(G, v, trace):
    trace.append(_line("KEEP", "single", v, None, 1))
    return _certificate(G, {v: 1}, [v], 1, trace)


# --------------------------------------------------------------------------
# (K4-e, C4)-free graphs


def recolor_k4e(G: Graph, C: Coloring) -> RecoloringCertificate:
    """Certificate with ``floor(k/2)`` colors for a (K4-e, C4)-free graph."""
    verdict = is_k4e_c4_free(G)
    if not verdict:
        raise PreconditionViolated(f"graph contains an induced {verdict.witness[1]}: {verdict.witness[0]}")
    _require_grundy(G, C)
    if C.k < 2:
        raise PreconditionViolated("need at least two colors")
    return _k4e(G, C, [])


def _k4e(G, C, trace):
    k = C.k
    if k % 2:
        return _drop_top_class(G, C, k, trace, lambda H, CH: _k4e(H, CH, []))
    dec = witness_decomposition(G, C)
    p = k // 2
    v = dec.second_level_by_color()
    v[k] = dec.root
    if p == 1:
        return _single_vertex(G, v[k], trace)
    col = {v[k]: p}
    trace.append(_line("RECOLOR", "set", v[k], k, p))
    for j in range(1, p):
        col[v[p + j]] = j
        trace.append(_line("RECOLOR", "set", v[p + j], p + j, j))
    for i in range(1, p + 1):
        trace.append(_line("PRUNE", "remove", v[i], i, None))
    index = {v[p + l]: l for l in range(1, p)}
    if dec.t > 2:
        parents = dec.parents()
        for y in dec.levels[2]:
            n = C[y]
            if n >= p:
                continue
            if any(index[x] != n and not G.has_edge(x, v[p + n])
                   for x in parents.get(y, ()) if x in index):
                col[y] = n
                trace.append(_line("KEEP", "child", y, n, n))
    # A parent's color-n supplier can be v_n itself, which was dropped above;
    # put it back unless that would clash with v_{p+n}.
    for l in range(1, p):
        a = v[p + l]
        have = {col[w] for w in G.adj[a] if w in col}
        for n in range(1, p):
            if n == l or n in have:
                continue
            b = v[n]
            if G.has_edge(a, b) and not G.has_edge(b, v[p + n]):
                col[b] = n
                have.add(n)
                trace.append(_line("KEEP", "restore", b, n, n))
    dominating = [v[p + j] for j in range(1, p)] + [v[k]]
    return _certificate(G, col, dominating, p, trace)


# --------------------------------------------------------------------------
# girth at least 6


def recolor_girth6(G: Graph, C: Coloring) -> RecoloringCertificate:
    """Certificate with ``floor(2k/3)`` colors for a graph of girth at least 6."""
    if girth(G) < 6:
        raise PreconditionViolated("graph has a cycle shorter than 6")
    _require_grundy(G, C)
    if C.k < 2:
        raise PreconditionViolated("need at least two colors")
    return _girth6(G, C, [])


def _girth6(G, C, trace):
    k = C.k
    if k % 3 == 1:
        return _drop_top_class(G, C, k, trace, lambda H, CH: _girth6(H, CH, []))
    dec = witness_decomposition(G, C)
    p = 2 * k // 3
    q = k // 3
    v = dec.second_level_by_color()
    v[k] = dec.root
    if p == 1:
        return _single_vertex(G, v[k], trace)
    hi = -(-2 * k // 3)  # ceil(2k/3)
    col = {v[k]: p}
    trace.append(_line("RECOLOR", "set", v[k], k, p))
    for i in range(1, p):
        col[v[i]] = i
    for off, i in enumerate(range(p, k)):
        col[v[i]] = q + off
        trace.append(_line("RECOLOR", "set", v[i], i, q + off))

    def child(u, j):
        return next(w for w in dec.children[u] if C[w] == j)

    for i in range(p, k - 1):
        for w in dec.children[v[i]]:
            j = C[w]
            if j < p and j != col[v[i]]:
                col[w] = j
                trace.append(_line("KEEP", "child", w, j, j))
    top = v[k - 1]
    recolored = []
    for off, j in enumerate(range(hi, k - 1)):
        w = child(top, j)
        col[w] = 1 + off
        recolored.append(w)
        trace.append(_line("RECOLOR", "set", w, j, 1 + off))
    for j in range(q, p - 1):
        w = child(top, j)
        col[w] = j
        trace.append(_line("KEEP", "child", w, j, j))
    for w in recolored:
        for x in dec.children[w]:
            if C[x] <= p and C[x] != col[w]:
                col[x] = C[x]
                trace.append(_line("KEEP", "grandchild", x, C[x], C[x]))
    if k % 3 == 0 and recolored:
        x = child(recolored[0], 1)
        col[x] = p
        trace.append(_line("RECOLOR", "set", x, 1, p))
    by_color = {col[d]: d for d in [v[i] for i in range(p, k + 1)] + recolored}
    return _certificate(G, col, [by_color[c] for c in range(1, p + 1)], p, trace)


# --------------------------------------------------------------------------
# cacti


def _floor_log2(k):
    return k.bit_length() - 1


def cactus_target(k: int) -> int:
    """``k - 2 floor(log2 k)``, the color count promised for cacti."""
    return k - 2 * _floor_log2(k)


def find_b3_witness(G: Graph):
    """A triangle, induced P5 or induced C5 with a 3-color b-coloring.

    Returns ``(vertices, coloring)`` where ``vertices`` is ascending and the
    coloring is indexed the same way. Triangles are preferred, then paths,
    then 5-cycles; within a kind the lexicographically first vertex sequence
    wins.
    """
    adj = G.neighbor_set
    for a in range(G.n):
        for b in G.adj[a]:
            if b <= a:
                continue
            for c in G.adj[b]:
                if c > b and c in adj(a):
                    return _pack({a: 1, b: 2, c: 3})
    path = _induced_path(G, 5, closed=False)
    if path is None:
        path = _induced_path(G, 5, closed=True)
    if path is None:
        raise NoWitnessFound("no triangle, induced P5 or induced C5")
    return _pack(dict(zip(path, (1, 2, 3, 1, 2))))


def _pack(mapping):
    verts = tuple(sorted(mapping))
    return verts, Coloring(tuple(mapping[v] for v in verts))


def _induced_path(G, length, closed):
    adj = G.neighbor_set

    def grow(path):
        if len(path) == length:
            if closed == (path[0] in adj(path[-1])):
                return path
            return None
        for w in G.adj[path[-1]]:
            if w in path:
                continue
            # induced: w sees only the previous vertex (and, closing a cycle, the first)
            bad = [u for u in path[:-1] if u in adj(w)]
            if bad and not (closed and bad == [path[0]] and len(path) == length - 1):
                continue
            if closed and w < path[0]:
                continue
            found = grow(path + [w])
            if found:
                return found
        return None

    for s in range(G.n):
        found = grow([s])
        if found:
            return found
    return None


def recolor_cactus(G: Graph, C: Coloring) -> RecoloringCertificate:
    """Certificate with at least ``k - 2 floor(log2 k)`` colors for a cactus."""
    if not is_cactus(G):
        raise PreconditionViolated("graph is not a cactus")
    _require_grundy(G, C)
    k = C.k
    trace = []
    if k <= 6:
        edges = G.edges()
        if not edges:
            return _single_vertex(G, 0, trace)
        a, b = edges[0]
        trace.append(_line("KEEP", "edge", a, C[a], 1))
        trace.append(_line("KEEP", "edge", b, C[b], 2))
        return _certificate(G, {a: 1, b: 2}, [a, b], 2, trace)
    if k <= 9:
        verts, W = find_b3_witness(G)
        col = dict(zip(verts, W.colors))
        for v in verts:
            trace.append(_line("KEEP", "witness", v, C[v], col[v]))
        dom = [min(v for v in verts if col[v] == c and _sees_all(G, col, v, 3)) for c in (1, 2, 3)]
        return _certificate(G, col, dom, 3, trace)
    return _CactusPipeline(G, C, trace).run()


def _sees_all(G, col, v, p):
    return {col[w] for w in G.adj[v] if w in col} | {col[v]} >= set(range(1, p + 1))


class _CactusPipeline:
    """Recoloring, pruning, properness repair and assembly for ``k >= 10``."""

    def __init__(self, G, C, trace):
        self.G, self.C, self.trace = G, C, trace
        self.k = k = C.k
        self.p = cactus_target(k)
        self.depth = _floor_log2(k) + 3
        dec = witness_decomposition(G, C)
        self.levels = [list(lv) for lv in dec.levels[: self.depth]]
        self.level = {v: i for i, lv in enumerate(self.levels) for v in lv}
        self.children = {u: tuple(w for w in dec.children[u] if w in self.level) for u in self.level}
        self.parents = {}
        for u in sorted(self.level):
            for w in self.children[u]:
                self.parents.setdefault(w, []).append(u)
        self.v = dec.second_level_by_color()
        self.v[k] = dec.root
        self.col = {}
        self.recolored = set()
        self.pool = list(range(1, self.p + 1))

    # helpers -------------------------------------------------------------

    def log(self, stage, action, x, old, new):
        self.trace.append(_line(stage, action, x, old, new))

    def set(self, x, c, stage="RECOLOR", action="set"):
        self.log(stage, action, x, self.col.get(x, self.C[x]), c)
        self.col[x] = c
        self.recolored.add(x)

    def drop(self, x, stage, action):
        if x in self.col:
            self.log(stage, action, x, self.col[x], None)
            del self.col[x]

    def kept_parents(self, x):
        return [u for u in self.parents.get(x, ()) if u in self.col]

    def in_d(self, x):
        return x in self.col and x in self.recolored and self.C[x] >= self.p - 1

    def sees_all(self, x):
        return _sees_all(self.G, self.col, x, self.p)

    def coverage(self, around):
        """Colors seen by each dominator candidate next to ``around``."""
        near = set()
        for x in around:
            near.add(x)
            near.update(self.G.adj[x])
        return {d: {self.col[w] for w in self.G.adj[d] if w in self.col} | {self.col[d]}
                for d in near if self.in_d(d)}

    def no_loss(self, before, around):
        after = self.coverage(around)
        return all(d in after and after[d] >= seen for d, seen in before.items())

    def clashes(self, x):
        return [w for w in self.G.adj[x] if w in self.col and self.col[w] == self.col[x]]

    def take_pool(self, x):
        if self.pool:
            self.set(x, self.pool.pop())
        elif self.C[x] <= self.p:
            self.col[x] = self.C[x]
        else:
            self.drop(x, "RECOLOR", "pool-empty")

    # stages --------------------------------------------------------------

    def run(self):
        self.recolor()
        self.prune()
        self.make_proper()
        self.complete()
        return self.assemble()

    def recolor(self):
        k, p, v, C = self.k, self.p, self.v, self.C
        for x in self.level:
            self.col[x] = C[x]
        self.set(v[k], p)
        self.pool.remove(p)
        lo = 2 * p - k - 1
        if lo >= 1:
            for off, i in enumerate(range(p - 1, k)):
                self.set(v[i], lo + off)
                self.pool.remove(lo + off)
        else:
            for j in range(1, p):
                self.set(v[k - p + j], j)
                self.pool.remove(j)
        for i in range(1, k):
            if v[i] not in self.recolored and C[v[i]] > p:
                self.drop(v[i], "RECOLOR", "pool-empty")
        for depth in range(2, len(self.levels)):
            for y in self.levels[depth]:
                ps = self.kept_parents(y)
                if not ps:
                    self.drop(y, "PRUNE", "orphan")
                    continue
                c = C[y]
                if c >= p - 1:
                    self.take_pool(y)
                elif depth == 2:
                    if any(self.col[x] == c for x in ps):
                        self.set(y, p - 1)
                else:
                    rec = [x for x in ps if x in self.recolored]
                    if not rec:
                        continue
                    if any(self.col[x] == c for x in rec):
                        self.set(y, p)
                    elif any(self.col.get(w) == c for x in rec for w in self.kept_parents(x)):
                        self.set(y, p - 1)

    def prune(self):
        p, C = self.p, self.C
        for depth in range(2, len(self.levels)):
            for y in self.levels[depth]:
                if y not in self.col:
                    continue
                ps = self.kept_parents(y)
                if not ps or all(C[x] <= p - 2 for x in ps):
                    self.drop(y, "PRUNE", "remove")

    def make_proper(self):
        self.proper_second_level()
        for depth in range(2, len(self.levels)):
            for v in self.levels[depth]:
                while v in self.col:
                    bad = [u for u in self.clashes(v) if self.level[u] in (depth - 1, depth)]
                    if not bad:
                        break
                    self.resolve(v, min(bad), depth)
        # anything still clashing (across non-adjacent levels, or left by a
        # failed exchange) loses its non-dominating endpoint
        for x in sorted(self.col, key=lambda u: (self.level[u], u)):
            for u in self.clashes(x) if x in self.col else ():
                if u in self.col and self.col[u] == self.col.get(x):
                    self.remove_one(x, u, "sweep")

    def proper_second_level(self):
        p, col = self.p, self.col
        for x in sorted(self.levels[1]):
            if x not in col or x in self.recolored:
                continue
            if not any(u in self.recolored for u in self.clashes(x)):
                continue
            c = col[x]
            # x may be the only supplier of its color for the clashing
            # neighbour, which then still needs p-1: hand x that color.
            if c <= p - 2 and not any(col.get(w) == p - 1 for w in self.G.adj[x]):
                self.set(x, p - 1, "PROPER", "shift")
            else:
                self.drop(x, "PROPER", "remove")

    def resolve(self, v, u, depth):
        C, col, p = self.C, self.col, self.p
        ws = self.kept_parents(v)
        if u in ws:  # clash with the parent
            self.remove_one(v, u, "case3", prefer=v)
            return
        siblings = {s for w in ws for s in self.children[w]}
        if u in siblings:
            first = u if col[u] == C[u] else v
            self.remove_one(first, v if first == u else u, "case2", prefer=first)
            return
        if C[v] >= p - 1:
            if v in self.recolored and col[u] == C[u] <= p - 2:
                for x in self.kept_parents(u):
                    y = self.partner(x, exclude=u, depth=self.level[u])
                    if y is not None and self.exchange(u, y):
                        return
            elif col[v] == C[v] and u in self.recolored:
                for w in ws:
                    z = self.partner(w, exclude=v, depth=depth)
                    if z is not None and self.exchange(v, z):
                        return
        else:
            for w in ws:
                x = self.partner(w, exclude=v, depth=depth)
                if x is not None and self.exchange(v, x):
                    return
        self.remove_one(v, u, "case1", prefer=v)

    def partner(self, parent, exclude, depth):
        """Lowest unchanged child of ``parent`` with a low color touching nothing nearby but ``parent``."""
        p, C, col = self.p, self.C, self.col
        near = {d for d in (depth - 1, depth) if d >= 0}
        for y in sorted(self.children[parent]):
            if y == exclude or y not in col or col[y] != C[y] or C[y] > p - 2:
                continue
            if any(w != parent and w in col and self.level.get(w) in near for w in self.G.adj[y]):
                continue
            return y
        return None

    def exchange(self, a, b):
        col = self.col
        before = self.coverage((a, b))
        ca, cb = col[a], col[b]
        col[a], col[b] = cb, ca
        if self.clashes(a) or self.clashes(b) or not self.no_loss(before, (a, b)):
            col[a], col[b] = ca, cb
            return False
        self.log("TRICK", "exchange", a, ca, cb)
        self.log("TRICK", "exchange", b, cb, ca)
        return True

    def remove_one(self, a, b, why, prefer=None):
        order = [prefer, b if prefer == a else a] if prefer in (a, b) else [a, b]
        for x in order:
            if not self.in_d(x):
                self.drop(x, "PROPER", why)
                return
        raise CertificateCheckFailed(f"dominating vertices {a} and {b} share a color",
                                     stage="proper", trace=tuple(self.trace))

    def complete(self):
        """Fill colors still missing around a dominator.

        A child shared by two parents on a cycle can be recolored for one
        parent and leave the other without a color. Re-admit a dropped
        neighbour in that color if it clashes with nothing, or else shift a
        kept neighbour whose current color is not relied on.
        """
        full = set(range(1, self.p + 1))
        for d in sorted(self.col, key=lambda u: (self.level.get(u, -1), u)):
            if not self.in_d(d):
                continue
            for m in sorted(full - {self.col[w] for w in self.G.adj[d] if w in self.col} - {self.col[d]}):
                self.fill(d, m)

    def fill(self, d, m, budget=2):
        """Give ``d`` a neighbour of color ``m``; a shift may vacate a color
        that is then refilled recursively. Rolls back on failure."""
        G, col = self.G, self.col
        for x in G.adj[d]:
            if x not in col and not any(col.get(w) == m for w in G.adj[x]):
                col[x] = m
                self.log("COMPLETE", "add", x, None, m)
                return True
        if budget == 0:
            return False
        for x in G.adj[d]:
            if x not in col or self.in_d(x) or any(col.get(w) == m for w in G.adj[x]):
                continue
            before = self.coverage((x,))
            saved, mark = dict(col), len(self.trace)
            old = col[x]
            col[x] = m
            self.log("COMPLETE", "shift", x, old, m)
            after = self.coverage((x,))
            lost = [(e, c) for e, seen in sorted(before.items()) for c in sorted(seen - after[e])]
            if all(self.fill(e, c, budget - 1) for e, c in lost) and self.no_loss(before, (x,)):
                return True
            self.col.clear()
            self.col.update(saved)
            del self.trace[mark:]
        return False

    def assemble(self):
        dom = []
        for c in range(1, self.p + 1):
            cands = [d for d in sorted(self.col) if self.col[d] == c and self.in_d(d) and self.sees_all(d)]
            if not cands:
                raise CertificateCheckFailed(f"no dominating vertex of color {c}",
                                             stage="assemble", trace=tuple(self.trace))
            dom.append(cands[0])
        self.log("ASSEMBLE", "colors", self.v[self.k], self.k, self.p)
        return _certificate(self.G, dict(self.col), dom, self.p, self.trace)
