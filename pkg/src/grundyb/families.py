"""Constructors for the graph families studied here, with closed-form metrics.

Vertex naming maps are part of each constructor's contract so certificates
are reproducible:

* ``atom_tree(k)``: building ``T_{k+1}`` from ``T_k`` on ``n`` vertices, the
  leaf hung on old vertex ``j`` gets id ``n + j``.
* ``gmn(m, n)``: vertex ``v_{i,j}`` (part ``i``, column ``j``, both 1-based)
  has id ``(i-1)*n + (j-1)``.
* ``gt(t)``: core clique ``v_1..v_t`` has ids ``0..t-1``; the ``t-1`` private
  vertices of ``K(v_i)`` have ids ``t + (i-1)(t-1) + r``.
* ``cactus_chain(k, t)``: path ``v_1..v_t`` on ``0..t-1``, then the pendants
  ``u_{i,j}`` in ``(i, j)`` order, then the atom's remaining vertices.
* ``fig2_cactus()``: see :data:`FIG2_POINTS`; the central vertex is id 12.

Random families draw from :class:`Lcg`, a 64-bit linear congruential
generator (multiplier 6364136223846793005, increment 1442695040888963407,
state seeded with ``seed``, output the high 32 bits) so that graphs can be
regenerated bit-for-bit elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .coloring import Coloring
from .errors import BadParameters
from .graph import Graph, build_graph


def atom_tree(k: int) -> Graph:
    if k < 1:
        raise BadParameters("atom index must be at least 1")
    edges = []
    n = 1
    for _ in range(k - 1):
        edges.extend((j, n + j) for j in range(n))
        n *= 2
    return build_graph(n, edges)


def atom_coloring(k: int) -> Coloring:
    """Grundy coloring of ``T_k`` with k colors: old vertices shift up, new leaves get 1."""
    if k < 1:
        raise BadParameters("atom index must be at least 1")
    colors = [1]
    for _ in range(k - 1):
        colors = [c + 1 for c in colors] + [1] * len(colors)
    return Coloring(tuple(colors))


def atom_interval(k: int) -> int:
    """The unique ``i >= 0`` with ``2**i + i <= k <= 2**(i+1) + i``."""
    if k < 1:
        raise BadParameters("atom index must be at least 1")
    i = 0
    while not (2 ** i + i <= k <= 2 ** (i + 1) + i):
        i += 1
    return i


def ceil_log2(j: int) -> int:
    return (j - 1).bit_length()


@dataclass(frozen=True)
class AtomMetrics:
    k: int
    size: int
    i: int
    m_predicted: int

    def degree_at(self, j: int) -> int:
        """The j-th largest degree of ``T_k`` (1-based)."""
        if not 1 <= j <= self.size:
            raise IndexError(j)
        if self.k == 1:
            return 0
        if j == 1:
            return self.k - 1
        return self.k - ceil_log2(j)

    def degrees(self) -> tuple:
        return tuple(self.degree_at(j) for j in range(1, self.size + 1))


def atom_metrics(k: int) -> AtomMetrics:
    i = atom_interval(k)
    return AtomMetrics(k, 2 ** (k - 1), i, k - i)


def _gmn_id(m, n, i, j):
    return (i - 1) * n + (j - 1)


def gmn(m: int, n: int) -> Graph:
    """Complete m-partite graph with parts of size n, minus the column cliques 1..n-1."""
    if m < 2 or n < 1:
        raise BadParameters("need m >= 2 and n >= 1")
    edges = []
    for i in range(1, m + 1):
        for i2 in range(i + 1, m + 1):
            for j in range(1, n + 1):
                for j2 in range(1, n + 1):
                    if j == j2 and j < n:
                        continue
                    edges.append((_gmn_id(m, n, i, j), _gmn_id(m, n, i2, j2)))
    return build_graph(m * n, edges)


def gmn_grundy_coloring(m: int, n: int) -> Coloring:
    """Column j < n gets color j; ``v_{i,n}`` gets ``n + i - 1``."""
    if m < 2 or n < 1:
        raise BadParameters("need m >= 2 and n >= 1")
    colors = [0] * (m * n)
    for i in range(1, m + 1):
        for j in range(1, n):
            colors[_gmn_id(m, n, i, j)] = j
        colors[_gmn_id(m, n, i, n)] = n + i - 1
    return Coloring(tuple(colors))


def gmn_b_coloring(m: int, n: int) -> Coloring:
    """Part ``B_i`` colored i."""
    if m < 2 or n < 1:
        raise BadParameters("need m >= 2 and n >= 1")
    return Coloring(tuple(i for i in range(1, m + 1) for _ in range(n)))


def gmn_nonmonotone_witness(m: int, n: int):
    """Vertex set of ``G_{m,n}`` minus ``v_{m,3..n}`` and its (m+1)-coloring.

    Returns ``(kept, colors)`` where ``colors`` maps each kept vertex id of
    ``G_{m,n}`` to its color.
    """
    if m < 2 or n < 3:
        raise BadParameters("the construction needs m >= 2 and n >= 3")
    dropped = {_gmn_id(m, n, m, j) for j in range(3, n + 1)}
    colors = {}
    for i in range(1, m + 1):
        colors[_gmn_id(m, n, i, 1)] = m
        colors[_gmn_id(m, n, i, 2)] = m + 1
        if i < m:
            for j in range(3, n + 1):
                colors[_gmn_id(m, n, i, j)] = i
    kept = tuple(v for v in range(m * n) if v not in dropped)
    return kept, colors


def gt(t: int) -> Graph:
    """Clique ``K_t`` with a private ``K_t`` glued at each of its vertices."""
    if t < 2:
        raise BadParameters("need t >= 2")
    edges = [(a, b) for a in range(t) for b in range(a + 1, t)]
    for i in range(t):
        block = [i] + [t + i * (t - 1) + r for r in range(t - 1)]
        edges.extend((a, b) for x, a in enumerate(block) for b in block[x + 1:])
    return build_graph(t * t, edges)


def gt_grundy_coloring(t: int) -> Coloring:
    """Core ``v_i`` gets ``t + i - 1``; private vertices of each block get ``1..t-1``."""
    if t < 2:
        raise BadParameters("need t >= 2")
    colors = list(range(t, 2 * t)) + [r + 1 for _ in range(t) for r in range(t - 1)]
    return Coloring(tuple(colors))


def gt_b_coloring(t: int) -> Coloring:
    if t < 2:
        raise BadParameters("need t >= 2")
    colors = list(range(1, t + 1))
    for i in range(1, t + 1):
        colors.extend(c for c in range(1, t + 1) if c != i)
    return Coloring(tuple(colors))


def cactus_chain(k: int, t: int) -> Graph:
    """Path ``v_1..v_t`` with ``t-1`` pendants per vertex and ``T_k`` glued at ``u_{2,1}``."""
    if not 4 <= k < t:
        raise BadParameters("need 4 <= k < t")
    edges = [(i, i + 1) for i in range(t - 1)]
    nxt = t
    glue = None
    for i in range(1, t + 1):
        for j in range(1, t + 1):
            if j == i:
                continue
            edges.append((i - 1, nxt))
            if (i, j) == (2, 1):
                glue = nxt
            nxt += 1
    atom = atom_tree(k)
    leaf = min(v for v in range(atom.n) if atom.degree(v) == 1)
    relabel = {}
    for v in range(atom.n):
        if v == leaf:
            relabel[v] = glue
        else:
            relabel[v] = nxt
            nxt += 1
    edges.extend((relabel[a], relabel[b]) for a, b in atom.edges())
    return build_graph(nxt, edges)


def cactus_chain_b_coloring(k: int, t: int) -> Coloring:
    """``v_i`` -> i, ``u_{i,j}`` -> j, the atom properly 2-colored with the glue vertex at 1."""
    G = cactus_chain(k, t)
    colors = [0] * G.n
    nxt = t
    for i in range(1, t + 1):
        colors[i - 1] = i
        for j in range(1, t + 1):
            if j != i:
                colors[nxt] = j
                nxt += 1
    # the atom hangs off u_{2,1}; bipartition it by depth from there
    glue = t + (t - 1)  # u_{2,1} is the first pendant of v_2
    stack = [(glue, 1)]
    seen = {glue}
    while stack:
        v, c = stack.pop()
        for u in G.adj[v]:
            if u >= nxt and u not in seen:
                seen.add(u)
                colors[u] = 3 - c
                stack.append((u, 3 - c))
    return Coloring(tuple(colors))


#: Drawing coordinates in vertex-id order; the last point is the central vertex v.
FIG2_POINTS = (
    (0, 0), (-1, 0), (-2, 1), (-2, -1), (1, 1), (1, -1),
    (0, -3), (-1, -3), (-2, -2), (-2, -4), (1, -2), (1, -4), (2, -1.5),
)

FIG2_CENTER = 12

_FIG2_SEGMENTS = (
    ((0, 0), (-1, 0)), ((0, 0), (1, -1)), ((0, 0), (1, 1)),
    ((-1, 0), (-2, 1)), ((-1, 0), (-2, -1)),
    ((0, -3), (1, -2)), ((0, -3), (1, -4)), ((0, -3), (-1, -3)),
    ((-1, -3), (-2, -2)), ((-1, -3), (-2, -4)),
    ((2, -1.5), (1, -2)), ((2, -1.5), (1, 1)), ((2, -1.5), (1, -1)), ((2, -1.5), (1, -4)),
)


def fig2_cactus() -> Graph:
    """The 13-vertex cactus whose b-number rises when its central vertex is deleted."""
    index = {pt: i for i, pt in enumerate(FIG2_POINTS)}
    return build_graph(len(FIG2_POINTS), [(index[a], index[b]) for a, b in _FIG2_SEGMENTS])


class Lcg:
    """64-bit linear congruential generator; see the module docstring."""

    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u32(self) -> int:
        self.state = (self.state * self.MULT + self.INC) & self.MASK
        return self.state >> 32

    def below(self, bound: int) -> int:
        """Integer in ``[0, bound)`` (modulo reduction)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u32() % bound

    def chance(self, percent: int) -> bool:
        return self.below(100) < percent


def random_tree(n: int, seed: int) -> Graph:
    """Decode a random Prüfer sequence."""
    if n < 1:
        raise BadParameters("need n >= 1")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = Lcg(seed)
    code = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    a, b = [v for v in range(n) if degree[v] == 1]
    edges.append((a, b))
    return build_graph(n, edges)


def random_cactus(n: int, seed: int, cycle_percent: int = 50) -> Graph:
    """Grow a cactus: hang a pendant edge or a fresh cycle (length 3..6) on a random vertex."""
    if n < 1:
        raise BadParameters("need n >= 1")
    rng = Lcg(seed)
    edges = []
    size = 1
    while size < n:
        anchor = rng.below(size)
        room = n - size
        length = 3 + rng.below(4)
        if rng.chance(cycle_percent) and room >= 2:
            length = min(length, room + 1)
            ring = [anchor] + list(range(size, size + length - 1))
            edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))
            size += length - 1
        else:
            edges.append((anchor, size))
            size += 1
    return build_graph(n, edges)


def random_graph(n: int, seed: int, percent: int = 50) -> Graph:
    """Each pair ``u < v`` (lexicographic) is an edge with probability ``percent/100``."""
    if n < 0 or not 0 <= percent <= 100:
        raise BadParameters("need n >= 0 and 0 <= percent <= 100")
    rng = Lcg(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.chance(percent)]
    return build_graph(n, edges)


def random_girth_graph(n: int, seed: int, min_girth: int = 5, tries: int | None = None) -> Graph:
    """Random edge insertions that keep every cycle at least ``min_girth`` long."""
    from .graph import girth

    rng = Lcg(seed)
    sets = [set() for _ in range(n)]
    tries = 4 * n * n if tries is None else tries
    for _ in range(tries):
        u, v = rng.below(n), rng.below(n)
        if u == v or v in sets[u]:
            continue
        if _distance(sets, u, v, min_girth - 1) < min_girth - 1:
            continue
        sets[u].add(v)
        sets[v].add(u)
    G = build_graph(n, [(u, v) for u in range(n) for v in sets[u] if u < v])
    assert girth(G) >= min_girth
    return G


def _distance(sets, s, t, cap):
    frontier, seen, d = {s}, {s}, 0
    while frontier and d < cap:
        if t in frontier:
            return d
        nxt = set()
        for u in frontier:
            nxt.update(w for w in sets[u] if w not in seen)
        seen |= nxt
        frontier = nxt
        d += 1
    return d if t in frontier else cap


def planted_cactus(k: int, seed: int, gadget_percent: int = 35, leaf_percent: int = 15):
    """Random cactus built around a Grundy coloring with exactly k colors.

    Each vertex receives one neighbour per demanded smaller color. A demand is
    met by a fresh pendant child, by a triangle (two children joined, the
    smaller one serving the larger), or by a 4-cycle (two children sharing a
    grandchild). Extra leaves are sprinkled on. Returns ``(graph, coloring)``.
    """
    if k < 1:
        raise BadParameters("need k >= 1")
    rng = Lcg(seed)
    colors = [k]
    edges = []

    def new(c):
        colors.append(c)
        return len(colors) - 1

    queue = [(0, set(range(1, k)))]
    head = 0
    while head < len(queue):
        u, missing = queue[head]
        head += 1
        pending = sorted(missing, reverse=True)
        while pending:
            j = pending.pop(0)
            if pending and rng.chance(gadget_percent):
                j2 = pending.pop(rng.below(len(pending)))
                if j2 > 1 and rng.chance(50):
                    cy = 1 + rng.below(j2 - 1)
                    a, b, y = new(j), new(j2), new(cy)
                    edges += [(u, a), (u, b), (a, y), (b, y)]
                    queue.append((a, set(range(1, j)) - {cy}))
                    queue.append((b, set(range(1, j2)) - {cy}))
                    queue.append((y, set(range(1, cy))))
                else:
                    a, b = new(j), new(j2)
                    edges += [(u, a), (u, b), (a, b)]
                    queue.append((a, set(range(1, j)) - {j2}))
                    queue.append((b, set(range(1, j2))))
            else:
                a = new(j)
                edges.append((u, a))
                queue.append((a, set(range(1, j))))
        if k > 1 and rng.chance(leaf_percent):
            leaf = new(1 if colors[u] != 1 else 2)
            edges.append((u, leaf))
    G = build_graph(len(colors), edges)
    return G, Coloring(tuple(colors))


@dataclass(frozen=True)
class FamilySpec:
    """Family tag plus integer parameters, e.g. ``FamilySpec("Gmn", {"m": 3, "n": 2})``."""

    tag: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    def describe(self) -> str:
        parts = [self.tag] + [f"{k}={v}" for k, v in sorted(self.params.items())]
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        tag, *rest = text.split()
        params, seed = {}, None
        for item in rest:
            key, sep, value = item.partition("=")
            if not sep:
                raise BadParameters(f"expected key=value, got {item!r}")
            if key == "seed":
                seed = int(value)
            else:
                params[key] = int(value)
        return cls(tag, params, seed)


_BUILDERS = {
    "Atom": lambda p, s: atom_tree(p["k"]),
    "Gmn": lambda p, s: gmn(p["m"], p["n"]),
    "Gt": lambda p, s: gt(p["t"]),
    "CactusChain": lambda p, s: cactus_chain(p["k"], p["t"]),
    "Fig2": lambda p, s: fig2_cactus(),
    "RandomTree": lambda p, s: random_tree(p["n"], s),
    "RandomCactus": lambda p, s: random_cactus(p["n"], s, p.get("cycle_percent", 50)),
    "RandomGraph": lambda p, s: random_graph(p["n"], s, p.get("percent", 50)),
    "RandomGirth": lambda p, s: random_girth_graph(p["n"], s, p.get("girth", 5)),
    "PlantedCactus": lambda p, s: planted_cactus(p["k"], s)[0],
}

FAMILY_TAGS = tuple(_BUILDERS)


def build_family(spec: FamilySpec) -> Graph:
    if spec.tag not in _BUILDERS:
        raise BadParameters(f"unknown family {spec.tag!r}; choose from {', '.join(FAMILY_TAGS)}")
    if spec.tag.startswith(("Random", "Planted")) and spec.seed is None:
        raise BadParameters(f"{spec.tag} needs a seed")
    try:
        return _BUILDERS[spec.tag](spec.params, spec.seed)
    except KeyError as exc:
        raise BadParameters(f"{spec.tag} is missing parameter {exc.args[0]}") from None


def random_family(spec: FamilySpec) -> Graph:
    """Deterministic pseudo-random member of a seeded family."""
    if not spec.tag.startswith(("Random", "Planted")):
        raise BadParameters(f"{spec.tag} is not a random family")
    return build_family(spec)


def floor_log2(x: int) -> int:
    if x < 1:
        raise ValueError("log of a non-positive number")
    return x.bit_length() - 1


def log2(x: float) -> float:
    return math.log2(x)
